//! The elliptic quintic scroll `X ⊂ P⁴`: a `P¹`-bundle over an elliptic
//! curve `E`, embedded by `H = Γ + 2f`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{dpf_residual, SurfaceInvariants};
use crate::lattice::{adjunction_two_g_minus_2, intersect, rr_surface_chi, DivisorClass, Lattice};
use crate::rational::Rational;
use crate::sequences::{conormal_twist_chern, ndp_deg_z, KoszulDatum};

/// `h⁰(N*_X(3H))`: the cubics through `X`, up to scalars, correspond to
/// sections of the twisted conormal bundle. Riemann–Roch only gives `χ = 0`.
pub const H0_CONORMAL_3H: i64 = 5;
/// Length of the zero scheme `Z_s` of a general section of `N*_X(3H)`.
pub const DEG_ZS: i64 = 10;
/// `dim I_X(3)`.
pub const DIM_IX3: i64 = 5;

#[derive(Debug, Clone)]
pub struct ScrollModel {
    lattice: Arc<Lattice>,
    h: DivisorClass,
}

impl Default for ScrollModel {
    fn default() -> Self {
        Self::new()
    }
}

impl ScrollModel {
    pub fn new() -> Self {
        let lattice = Lattice::elliptic_quintic_scroll();
        let h = lattice.class([1, 2]).expect("rank 2");
        ScrollModel { lattice, h }
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn h(&self) -> &DivisorClass {
        &self.h
    }

    pub fn k(&self) -> DivisorClass {
        self.lattice.canonical_class()
    }

    pub fn gamma(&self) -> DivisorClass {
        self.lattice.basis_class("Γ").expect("basis label")
    }

    pub fn f(&self) -> DivisorClass {
        self.lattice.basis_class("f").expect("basis label")
    }

    fn dot(&self, a: &DivisorClass, b: &DivisorClass) -> Rational {
        intersect(a, b).expect("same lattice")
    }

    /// `(d, H·K, K², χ)` read off the lattice.
    pub fn invariants(&self) -> SurfaceInvariants {
        let k = self.k();
        let n = |r: Rational| r.to_i64().expect("integral lattice");
        SurfaceInvariants::new(
            n(self.h.square()),
            n(self.dot(&self.h, &k)),
            n(k.square()),
            self.lattice.chi_o(),
        )
        .expect("scroll invariants are valid")
    }

    /// Genus of a curve in the class `c`, by adjunction.
    pub fn genus(&self, c: &DivisorClass) -> Rational {
        adjunction_two_g_minus_2(&self.lattice, c).expect("same lattice") / 2 + 1
    }

    /// Evaluate a class expression such as `H`, `H-K`, `H+5f` or `-2Γ+f`.
    pub fn class(&self, expr: &str) -> Result<DivisorClass> {
        parse_class_expr(self, expr)
    }
}

fn atom(model: &ScrollModel, name: &str) -> Option<DivisorClass> {
    match name {
        "H" => Some(model.h.clone()),
        "K" => Some(model.k()),
        "Γ" | "Gamma" | "G" => Some(model.gamma()),
        "f" | "l" => Some(model.f()),
        _ => None,
    }
}

fn parse_class_expr(model: &ScrollModel, expr: &str) -> Result<DivisorClass> {
    let bad = || Error::UnknownClass(expr.to_string());
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '−' { '-' } else { c }).collect();
    if s.is_empty() {
        return Err(bad());
    }
    let mut total = model.lattice.zero_class();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(bad()),
        };
        first = false;
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        let coeff: i64 = if digits == 0 { 1 } else { rest[..digits].parse().map_err(|_| bad())? };
        rest = &rest[digits..];
        rest = rest.strip_prefix('*').unwrap_or(rest);
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let class = atom(model, &rest[..end]).ok_or_else(bad)?;
        rest = &rest[end..];
        total = total.try_add(&class.scale(&Rational::from_int(sign * coeff)))?;
    }
    Ok(total)
}

/// Look up a named class on the scroll; see [`ScrollModel::class`].
pub fn scroll_named_class(name: &str) -> Result<DivisorClass> {
    ScrollModel::new().class(name)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollReport {
    /// Coordinates of `c₁(N*(3H))` in the basis `{Γ, f}`.
    pub conormal_c1: Vec<Rational>,
    pub conormal_c1_is_h_minus_k: bool,
    pub conormal_c1_sq: Rational,
    pub conormal_c2: Rational,
    pub h0_conormal_3h: i64,
    pub dim_ix3: i64,
    pub genus_h: Rational,
    pub genus_gamma: Rational,
    pub genus_h_minus_k: Rational,
    pub chi_jz_2h: Rational,
    pub ndp_deg_z: i64,
    pub k2: Rational,
    pub hilbert_triple: (i64, i64, i64),
    pub dpf_residual: i64,
}

/// The numerical facts used about the scroll: the twisted conormal bundle
/// `N*(3H)` has `c₁ = H − K` and `c₂ = 10`, so a section vanishes on a
/// scheme `Z_s` of length 10, and `χ(J_{Z_s}(2H)) = χ(O(2H)) − 10 = 5`.
pub fn scroll_sanity_report() -> ScrollReport {
    let model = ScrollModel::new();
    let inv = model.invariants();
    let h = model.h().clone();
    let k = model.k();
    let h_minus_k = h.try_sub(&k).expect("same lattice");
    let twist = conormal_twist_chern(&inv, 3);
    // c₁(N*(kH)) = (2k − 5)H − K
    let c1 = h.scale(&Rational::from_int(2 * 3 - 5)).try_sub(&k).expect("same lattice");
    assert_eq!(c1.square(), twist.c1_sq);
    let two_h = h.scale(&Rational::from_int(2));
    ScrollReport {
        conormal_c1: c1.coords().to_vec(),
        conormal_c1_is_h_minus_k: c1 == h_minus_k,
        conormal_c1_sq: twist.c1_sq.clone(),
        conormal_c2: twist.c2.clone(),
        h0_conormal_3h: H0_CONORMAL_3H,
        dim_ix3: DIM_IX3,
        genus_h: model.genus(&h),
        genus_gamma: model.genus(&model.gamma()),
        genus_h_minus_k: model.genus(&h_minus_k),
        chi_jz_2h: rr_surface_chi(model.lattice(), &two_h).expect("same lattice") - DEG_ZS,
        ndp_deg_z: ndp_deg_z(&inv, &KoszulDatum::new(3).expect("m = 3")),
        k2: k.square(),
        hilbert_triple: (inv.d(), inv.hk(), inv.chi()),
        dpf_residual: dpf_residual(&inv),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendixDegrees {
    /// `(H − K)² − c₂(N*(3H))`: the quintic secant hypersurface `Y₀`.
    pub deg_y0: Rational,
    /// `(H + 5f)²`: the singular scroll `X'`.
    pub deg_x_prime: Rational,
    /// `deg ψ · deg T' = deg F = 5` with `deg T' > 1`.
    pub deg_t_prime: i64,
    pub deg_psi: i64,
    /// `(L + 2f)²` on `Σ₁`: the rational cubic scroll `S'_e`.
    pub deg_s_prime: Rational,
    /// `Δ_E = 2L + b·f` on `S'_e`, with `b` fixed by `deg Δ_E = 5`.
    pub delta_e: (i64, i64),
}

/// Degree of the rank-3 bundle `F` on `E` whose planes sweep out `T'`.
pub const DEG_F: i64 = 5;
/// Degree of the image of `Δ_E` on `S'_e`.
pub const DEG_DELTA_E: i64 = 5;

pub fn appendix_degrees() -> AppendixDegrees {
    let model = ScrollModel::new();
    let h = model.h().clone();
    let h_minus_k = h.try_sub(&model.k()).expect("same lattice");
    let c2 = conormal_twist_chern(&model.invariants(), 3).c2;
    let x_prime = h.try_add(&model.f().scale(&Rational::from_int(5))).expect("same lattice");

    // T' is not a hyperplane, so deg T' is the divisor of deg F above 1
    let (deg_psi, deg_t_prime) = (1..=DEG_F)
        .filter(|p| DEG_F % p == 0)
        .map(|p| (p, DEG_F / p))
        .filter(|&(_, t)| t > 1)
        .max_by_key(|&(_, t)| t)
        .expect("deg F > 1");

    let sigma = Lattice::hirzebruch_one();
    let hs = sigma.class([1, 2]).expect("rank 2");
    let l = sigma.basis_class("L").expect("basis label");
    let fib = sigma.basis_class("f").expect("basis label");
    // (2L + b f)·(L + 2f) = 2 + b
    let two_l_deg = intersect(&l.scale(&Rational::from_int(2)), &hs).expect("same lattice");
    let f_deg = intersect(&fib, &hs).expect("same lattice");
    let b = (Rational::from_int(DEG_DELTA_E) - two_l_deg) / f_deg;

    AppendixDegrees {
        deg_y0: h_minus_k.square() - c2,
        deg_x_prime: x_prime.square(),
        deg_t_prime,
        deg_psi,
        deg_s_prime: hs.square(),
        delta_e: (2, b.to_i64().expect("integral fibre coefficient")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn model_invariants() {
        let m = ScrollModel::new();
        let k = m.k();
        assert_eq!(m.h().square(), int(5));
        assert_eq!(intersect(m.h(), &k).unwrap(), int(-5));
        assert_eq!(k.square(), int(0));
        assert_eq!(intersect(m.h(), &m.f()).unwrap(), int(1));
        assert_eq!(m.h().try_sub(&k).unwrap().square(), int(15));
        assert_eq!(m.invariants(), SurfaceInvariants::new(5, -5, 0, 0).unwrap());
    }

    #[test]
    fn named_classes() {
        let h = scroll_named_class("H").unwrap();
        assert_eq!(h.coords(), &[int(1), int(2)]);
        assert_eq!(h.square(), int(5));
        let k = scroll_named_class("K").unwrap();
        assert_eq!(k.coords(), &[int(-2), int(1)]);
        let hk = scroll_named_class("H−K").unwrap();
        assert_eq!(hk.coords(), &[int(3), int(1)]);
        assert_eq!(hk.square(), int(15));
        assert_eq!(scroll_named_class("H-K").unwrap(), hk);
        assert_eq!(scroll_named_class("H + 5f").unwrap().square(), int(15));
        assert_eq!(scroll_named_class("-2Γ+f").unwrap(), k);
        assert_eq!(scroll_named_class("-2*Gamma + l").unwrap(), k);
        assert_eq!(scroll_named_class("Γ+2f").unwrap(), h);
        assert_eq!(scroll_named_class("2H-2H").unwrap(), ScrollModel::new().lattice().zero_class());
    }

    #[test]
    fn bad_class_names() {
        for bad in ["", "X", "H+", "+", "2", "H K", "H--K", "3/2H", "H+-K", "f2", "99999999999999999999H"] {
            assert!(scroll_named_class(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn sanity_report() {
        let r = scroll_sanity_report();
        assert!(r.conormal_c1_is_h_minus_k);
        assert_eq!(r.conormal_c1, vec![int(3), int(1)]);
        assert_eq!((r.conormal_c1_sq.clone(), r.conormal_c2.clone()), (int(15), int(10)));
        assert_eq!((r.genus_h.clone(), r.genus_gamma.clone(), r.genus_h_minus_k.clone()), (int(1), int(1), int(6)));
        assert_eq!(r.chi_jz_2h, int(5));
        assert_eq!(r.h0_conormal_3h, 5);
        assert_eq!(r.k2, int(0));
        assert_eq!(r.hilbert_triple, (5, -5, 0));
        assert_eq!(r.dpf_residual, 0);
        // two derivations of deg Z_s
        assert_eq!(int(r.ndp_deg_z), r.conormal_c2);
        assert_eq!(r.ndp_deg_z, DEG_ZS);
    }

    #[test]
    fn appendix() {
        let a = appendix_degrees();
        assert_eq!(a.deg_y0, int(5));
        assert_eq!(a.deg_x_prime, int(15));
        assert_eq!((a.deg_t_prime, a.deg_psi), (5, 1));
        assert_eq!(a.deg_s_prime, int(3));
        assert_eq!(a.delta_e, (2, 3));
    }

    proptest! {
        #[test]
        fn expression_is_linear(a in -50i64..50, b in -50i64..50, c in -50i64..50, e in -50i64..50) {
            let expr = format!("{a}H + {b}K + {c}Γ + {e}f").replace("+ -", "- ");
            let m = ScrollModel::new();
            let got = m.class(&expr).unwrap();
            let want = m.lattice().class([a - 2 * b + c, 2 * a + b + e]).unwrap();
            prop_assert_eq!(got, want);
        }

        #[test]
        fn parser_never_panics(s in "\\PC{0,24}") {
            let _ = scroll_named_class(&s);
        }
    }
}
