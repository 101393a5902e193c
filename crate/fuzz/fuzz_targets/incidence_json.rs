#![no_main]

use libfuzzer_sys::fuzz_target;
use p4geo::segre::IncidenceStructure;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(c) = IncidenceStructure::from_json(s) else { return };
    c.validate().expect("parsed structures are valid");
    let json = serde_json::to_string(&c).expect("incidence serializes");
    let back = IncidenceStructure::from_json(&json).expect("round trip");
    assert_eq!(back, c);
    for p in 0..c.planes().len() {
        for q in p + 1..c.planes().len() {
            let _ = c.plane_meet(p, q);
        }
    }
});
