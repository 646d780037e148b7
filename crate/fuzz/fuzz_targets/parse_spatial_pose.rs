#![no_main]

use evcharge_kin::SpatialPose;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(pose) = text.parse::<SpatialPose>() {
        assert!(pose.x.is_finite() && pose.y.is_finite() && pose.z.is_finite());
        assert_eq!(pose.to_string().parse::<SpatialPose>().unwrap(), pose);
    }
});
