use p4geo::bounds::d_alpha;
use p4geo::enumeration::{enumerate_families, FamilyQuery};
use p4geo::invariants::{ci_invariants, dpf_residual, slope};
use p4geo::lattice::intersect;
use p4geo::scroll::ScrollModel;
use p4geo::segre::{segre_configuration, IncidenceStructure};
use p4geo::{Error, HilbertTriple, Rational, SurfaceInvariants};

#[test]
fn enumerated_families_satisfy_the_double_point_formula() {
    for (m, alpha) in [(4, "5/2"), (4, "4"), (5, "1"), (5, "13/2")] {
        let alpha: Rational = alpha.parse().unwrap();
        let q = FamilyQuery::new(m, alpha.clone()).unwrap();
        let cap = d_alpha(m, &alpha).unwrap();
        let triples = enumerate_families(&q).unwrap();
        assert!(!triples.is_empty());
        for t in &triples {
            assert!(t.d <= cap);
            let k2 = q.k2_of(t.chi).unwrap();
            let inv = SurfaceInvariants::new(t.d, t.hk, k2, t.chi).unwrap();
            assert_eq!(dpf_residual(&inv), 0, "{t:?}");
            assert_eq!(slope(&inv).unwrap(), alpha);
        }
    }
}

#[test]
fn known_quartic_family_is_listed() {
    let q = FamilyQuery::new(4, Rational::from_int(4)).unwrap();
    let triples = enumerate_families(&q).unwrap();
    assert!(triples.contains(&HilbertTriple { d: 16, hk: 48, chi: 36 }));
}

#[test]
fn excluded_queries_are_errors() {
    assert!(matches!(FamilyQuery::new(4, Rational::from_int(6)), Err(Error::InvalidQuery(_))));
    assert!(matches!(FamilyQuery::new(5, Rational::from_int(6)), Err(Error::InvalidQuery(_))));
    assert!(FamilyQuery::new(3, Rational::from_int(1)).is_err());
}

#[test]
fn invariants_json_round_trip() {
    let x = SurfaceInvariants::new(8, 0, -8, 0).unwrap().with_q(1).unwrap();
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(s, r#"{"d":8,"hk":0,"k2":-8,"chi":0,"q":1}"#);
    assert_eq!(SurfaceInvariants::from_json(&s).unwrap(), x);
    assert!(SurfaceInvariants::from_json(r#"{"d":8,"hk":0,"k2":-8}"#).is_err());
    assert!(SurfaceInvariants::from_json(r#"{"d":0,"hk":0,"k2":0,"chi":0}"#).is_err());
}

#[test]
fn complete_intersection_slopes_increase() {
    let slopes: Vec<Rational> = (2..=20).map(|a| slope(&ci_invariants(a).unwrap()).unwrap()).collect();
    assert!(slopes.windows(2).all(|w| w[0] < w[1]));
    assert!(slopes.iter().all(|s| *s < Rational::from_int(6)));
}

#[test]
fn scroll_expressions_agree_with_basis_arithmetic() {
    let model = ScrollModel::new();
    let h_minus_k = model.class("H - K").unwrap();
    let by_hand = model.h().try_sub(&model.k()).unwrap();
    assert_eq!(h_minus_k, by_hand);
    assert_eq!(intersect(&model.class("Γ").unwrap(), &model.class("f").unwrap()).unwrap(), Rational::one());
    assert!(model.class("H +").is_err());
}

#[test]
fn segre_configuration_json_round_trip() {
    let c = segre_configuration(&["p", "q", "r", "s", "t"]).unwrap();
    let json = serde_json::to_string(&c).unwrap();
    let back = IncidenceStructure::from_json(&json).unwrap();
    assert_eq!(back, c);
    assert!(IncidenceStructure::from_json(r#"{"points":[],"planes":[]}"#).is_err());
}
