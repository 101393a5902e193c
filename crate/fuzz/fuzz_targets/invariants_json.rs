#![no_main]

use libfuzzer_sys::fuzz_target;
use p4geo::SurfaceInvariants;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(inv) = SurfaceInvariants::from_json(s) else { return };
    let json = serde_json::to_string(&inv).expect("invariants serialize");
    assert_eq!(SurfaceInvariants::from_json(&json).expect("round trip"), inv);
    let _ = p4geo::invariants::dpf_residual(&inv);
    let _ = p4geo::invariants::slope(&inv);
});
