#![no_main]

use evcharge_kin::load_design;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = load_design(text) else { return };
    let again = load_design(&p.to_config()).expect("serialised design parses");
    assert_eq!(again, p);
});
