#![no_main]

use libfuzzer_sys::fuzz_target;
use p4geo::scroll::ScrollModel;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let model = ScrollModel::new();
    let Ok(c) = model.class(s) else { return };
    let doubled = c.try_add(&c).expect("same lattice");
    assert_eq!(doubled.square(), c.square() * 4);
    let _ = model.genus(&c);
});
