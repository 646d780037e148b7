#![no_main]

use evcharge_kin::load_design;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = load_design(text) {
        // Anything accepted has passed validation.
        assert!(p.validate().is_ok());
    }
});
