//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison below is exact rational or integer equality; the only
//! tolerance in the suite is `TOLERANCE = 0`.

use std::process::ExitCode;
use std::time::Instant;

use p4geo::bounds::{
    bogomolov_discriminant, d_alpha, general_type_c2_minus_k2_lower_bound, pm_polynomial,
    txi_chern, StabilityBranch,
};
use p4geo::enumeration::{
    admissible_quartic_deg_z, enumerate_irrational_scrolls, enumerate_quartic_conic_bundles,
    m5_trivial_class_search, ConicBundleSolution, DegZBranch, ScrollNumerics,
};
use p4geo::invariants::{ci_invariants, dpf_residual, slope};
use p4geo::scroll::{appendix_degrees, scroll_sanity_report};
use p4geo::segre::{segre_configuration, Meet, PlaneKind};
use p4geo::sequences::{ndp_deg_z, KoszulDatum};
use p4geo::{Rational, SurfaceInvariants};

/// Allowed deviation from every expected value.
const TOLERANCE: i64 = 0;

type Criterion = (&'static str, &'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn within(got: i64, want: i64) -> bool {
    (got - want).abs() <= TOLERANCE
}

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

fn inv(d: i64, hk: i64, k2: i64, chi: i64) -> SurfaceInvariants {
    SurfaceInvariants::new(d, hk, k2, chi).expect("valid invariants")
}

fn degree_bound_for_slope_five() -> Outcome {
    let got = d_alpha(4, &int(5)).expect("slope 5 allowed");
    let f = |d: i64| d * d * d - 126 * d * d + 80 * d + 120;
    let ok = within(got, 125) && f(125) <= 0 && f(126) > 0;
    outcome(ok, format!("d_alpha(4,5) = {got}; f(125) = {}, f(126) = {}", f(125), f(126)))
}

fn unique_conic_bundle() -> Outcome {
    let sols = enumerate_quartic_conic_bundles();
    let want = ConicBundleSolution { d: 8, q: 1, delta: 8, d_prime: 4, k2: -8, hk: 0, c2: 8, deg_z: 32 };
    outcome(sols == vec![want], format!("{sols:?}"))
}

fn node_counts_on_cubics() -> Outcome {
    let scroll = inv(5, -5, 0, 0);
    let z = |kd: KoszulDatum| ndp_deg_z(&scroll, &kd);
    let none = z(KoszulDatum::new(3).unwrap());
    let one = z(KoszulDatum::with_z1(3, 1, -2, 0).unwrap());
    let two = z(KoszulDatum::with_z1(3, 2, -4, 0).unwrap());
    let ok = within(none, 10) && within(one, 7) && within(two, 4);
    outcome(ok, format!("Z1 = 0: {none}, one ruling: {one}, two rulings: {two}"))
}

fn admissible_node_counts() -> Outcome {
    use DegZBranch::*;
    let expected: [(i64, Vec<(i64, DegZBranch)>); 4] = [
        (8, vec![(24, Unstable), (32, Stable), (40, Stable)]),
        (9, vec![(33, Unstable), (41, Stable)]),
        (10, vec![(36, Unstable), (44, Stable)]),
        (11, vec![(33, Unstable), (41, Unstable)]),
    ];
    let mut ok = true;
    let mut detail = vec![];
    for (d, want) in expected {
        let got = admissible_quartic_deg_z(d).expect("d in range");
        ok &= got == want;
        detail.push(format!("d={d}: {got:?}"));
    }
    outcome(ok, detail.join("; "))
}

fn quintic_trivial_class_empty() -> Outcome {
    let got = m5_trivial_class_search();
    outcome(got.is_empty(), format!("{} survivors", got.len()))
}

fn irrational_scrolls() -> Outcome {
    let got = enumerate_irrational_scrolls(100);
    outcome(got == vec![ScrollNumerics { d: 5, q: 1 }], format!("{got:?}"))
}

fn discriminant_grid() -> Outcome {
    let mut checked = 0u64;
    let mut bad = vec![];
    for m in 2..=5 {
        for d in 1..=40 {
            for hk in -60..=60 {
                for k2 in -60..=60 {
                    for chi in 0..=20 {
                        let x = inv(d, hk, k2, chi);
                        let delta_ok = !bogomolov_discriminant(&txi_chern(m, &x).unwrap()).is_negative();
                        let ineq = if m == 5 {
                            k2 <= x.c2()
                        } else {
                            let b = general_type_c2_minus_k2_lower_bound(m, &x, StabilityBranch::Semistable)
                                .unwrap();
                            int(x.c2() - k2) >= b
                        };
                        checked += 1;
                        if delta_ok != ineq && bad.len() < 5 {
                            bad.push((m, d, hk, k2, chi));
                        }
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} grid points, counterexamples: {bad:?}"))
}

fn complete_intersection_slopes() -> Outcome {
    let six = int(6);
    let mut ok = true;
    let mut prev: Option<Rational> = None;
    for a in 2..=50 {
        let x = ci_invariants(a).expect("a ≥ 2");
        let s = slope(&x).expect("chi > 0");
        ok &= dpf_residual(&x) == 0 && s < six;
        if let Some(p) = &prev {
            ok &= s > *p;
        }
        prev = Some(s);
    }
    let s7 = slope(&ci_invariants(7).unwrap()).unwrap();
    ok &= s7 > int(5);
    outcome(ok, format!("dpf = 0 and increasing below 6 for 2 ≤ a ≤ 50; slope(7) = {s7}"))
}

fn scroll_report() -> Outcome {
    let r = scroll_sanity_report();
    let a = appendix_degrees();
    let genera = (r.genus_h.clone(), r.genus_gamma.clone(), r.genus_h_minus_k.clone());
    let ok = r.conormal_c2 == int(10)
        && r.conormal_c1_is_h_minus_k
        && r.h0_conormal_3h == 5
        && genera == (int(1), int(1), int(6))
        && r.chi_jz_2h == int(5)
        && a.deg_y0 == int(5)
        && a.deg_x_prime == int(15)
        && a.delta_e == (2, 3);
    outcome(
        ok,
        format!(
            "c2(N*(3H)) = {}, h0 = {}, genera = ({}, {}, {}), chi(J_Z(2H)) = {}, deg Y0 = {}, deg X' = {}, Delta_E = {}L + {}f",
            r.conormal_c2, r.h0_conormal_3h, genera.0, genera.1, genera.2, r.chi_jz_2h, a.deg_y0, a.deg_x_prime,
            a.delta_e.0, a.delta_e.1
        ),
    )
}

fn segre_configuration_check() -> Outcome {
    let c = segre_configuration(&["a", "b", "c", "d", "e"]).expect("five labels");
    let mut ok = c.points().len() == 10
        && c.planes().len() == 15
        && c.planes().iter().all(|p| p.members.len() == 4)
        && (0..10).all(|p| c.planes_through(p).len() == 6);
    let mut pairs = 0;
    for p in 0..15 {
        for q in p + 1..15 {
            let (shared, meet) = c.plane_meet(p, q).expect("distinct planes share a point");
            ok &= (1..=2).contains(&shared.len()) && ((meet == Meet::Line) == (shared.len() == 2));
            pairs += 1;
        }
    }
    ok &= pairs == 105;
    for (pi, &(e, e2)) in c.points().iter().enumerate() {
        let rest: Vec<usize> = (0..5).filter(|&x| x != e && x != e2).collect();
        let mut want = vec![
            c.plane_index(PlaneKind::A(e)).unwrap(),
            c.plane_index(PlaneKind::A(e2)).unwrap(),
            c.plane_index(PlaneKind::B(e, e2)).unwrap(),
            c.plane_index(PlaneKind::B(rest[0], rest[1])).unwrap(),
            c.plane_index(PlaneKind::B(rest[0], rest[2])).unwrap(),
            c.plane_index(PlaneKind::B(rest[1], rest[2])).unwrap(),
        ];
        want.sort_unstable();
        ok &= c.planes_through(pi) == want;
        match c.point_partition(pi) {
            Some((l, r)) => {
                let a_side = [
                    c.plane_index(PlaneKind::A(e)).unwrap(),
                    c.plane_index(PlaneKind::A(e2)).unwrap(),
                    c.plane_index(PlaneKind::B(e, e2)).unwrap(),
                ];
                let same = |t: [usize; 3]| a_side.iter().all(|x| t.contains(x));
                ok &= same(l) || same(r);
            }
            None => ok = false,
        }
    }
    outcome(ok, format!("{}; {pairs} plane pairs", c.counts_line()))
}

fn quartic_lower_bound_expansion() -> Outcome {
    let r = Rational::new;
    let mut mismatches = 0;
    for d in 1..=500 {
        let dd = int(d);
        let expansion = dd.pow(3) / 96 - dd.pow(2) * r(19, 16) + &dd * &r(10, 3) + r(5, 4);
        if pm_polynomial(4, d).unwrap() != expansion {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{mismatches} mismatches on 1 ≤ d ≤ 500"))
}

fn quintic_lower_bound_closed_form() -> Outcome {
    let mut mismatches = vec![];
    for d in 1..=500 {
        let closed = int(d * (d * d - 40 * d + 95)) / 25;
        if pm_polynomial(5, d).unwrap() != closed {
            mismatches.push(d);
        }
    }
    outcome(
        mismatches.is_empty(),
        format!(
            "{} mismatches on 1 ≤ d ≤ 500 (agree only at d = {:?}); P_5(45) = {}",
            mismatches.len(),
            (1..=500).filter(|d| !mismatches.contains(d)).collect::<Vec<_>>(),
            pm_polynomial(5, 45).unwrap()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1", "degree bound d_alpha(4, 5) = 125", degree_bound_for_slope_five),
        ("2", "unique conic bundle on a quartic", unique_conic_bundle),
        ("3", "node counts 10 / 7 / 4 on a cubic", node_counts_on_cubics),
        ("4", "admissible deg Z for d = 8..11", admissible_node_counts),
        ("5", "quintic trivial-class search is empty", quintic_trivial_class_empty),
        ("6", "irrational scrolls up to degree 100", irrational_scrolls),
        ("7", "discriminant sign vs semistable inequality", discriminant_grid),
        ("8", "complete intersection slopes", complete_intersection_slopes),
        ("9", "elliptic scroll report", scroll_report),
        ("10", "Segre (10_4, 15_6) configuration", segre_configuration_check),
        ("11a", "P_4 equals its cubic expansion", quartic_lower_bound_expansion),
        ("11b", "P_5 equals d(d^2-40d+95)/25", quintic_lower_bound_closed_form),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let o = run();
        if !o.ok {
            failed += 1;
        }
        println!(
            "{} [{id}] {name} (exact, tolerance {TOLERANCE}) -- {} [{:.2}s]",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
