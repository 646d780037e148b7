#![no_main]

use evcharge_kin::placement::{lame_boundary, LamePlacement};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(c) = text.parse::<LamePlacement>() else { return };
    assert!(c.l_b >= 0.0 && !c.feasible);
    // Whatever parses must be drawable.
    let pts = lame_boundary(c.x_c, c.y_c, c.l_b, c.n.get(), 16);
    assert_eq!(pts.len(), 16);
});
