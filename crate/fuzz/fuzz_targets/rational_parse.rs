#![no_main]

use libfuzzer_sys::fuzz_target;
use p4geo::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(r) = s.parse::<Rational>() else { return };
    let printed = r.to_string();
    let back: Rational = printed.parse().expect("printed rationals parse");
    assert_eq!(back, r);
    assert_eq!(back.to_string(), printed);
    if !r.is_zero() {
        assert_eq!(r.recip().and_then(|x| x.recip()), Some(r));
    }
});
