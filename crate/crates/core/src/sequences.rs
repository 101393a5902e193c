//! Chern calculus for short exact sequences on a surface `X ⊂ P⁴`: the
//! Whitney formula, the Koszul sequence of a section of the twisted normal
//! bundle, and the classes of a Bogomolov destabilizing filtration.

use crate::bounds::{SheafChern, StabilityBranch};
use crate::error::{Error, Result};
use crate::invariants::SurfaceInvariants;
use crate::rational::Rational;

/// Chern data of the middle term of `0 → sub → E → quot → 0`, given the
/// cross term `c₁(sub)·c₁(quot)`.
pub fn whitney_c(sub: &SheafChern, quot: &SheafChern, c1_sub_dot_c1_quot: &Rational) -> SheafChern {
    SheafChern {
        rank: sub.rank + quot.rank,
        c1_sq: &sub.c1_sq + &(c1_sub_dot_c1_quot * 2) + &quot.c1_sq,
        c1_dot_h: &sub.c1_dot_h + &quot.c1_dot_h,
        c1_dot_k: &sub.c1_dot_k + &quot.c1_dot_k,
        c2: &sub.c2 + &quot.c2 + c1_sub_dot_c1_quot,
    }
}

/// The data needed to read off the Koszul sequence
/// `0 → O(K + (5−m)H + Z₁) → N_X → J_{Z₀}(mH − Z₁) → 0`
/// of a degree-`m` hypersurface through `X`, where `Z₁` is the divisorial
/// part of the zero locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KoszulDatum {
    m: i64,
    pub z1_dot_h: i64,
    pub z1_dot_k: i64,
    pub z1_sq: i64,
}

impl KoszulDatum {
    /// No divisorial part.
    pub fn new(m: i64) -> Result<Self> {
        if !(2..=5).contains(&m) {
            return Err(Error::OutOfRange { what: "hypersurface degree m", value: m });
        }
        Ok(KoszulDatum { m, z1_dot_h: 0, z1_dot_k: 0, z1_sq: 0 })
    }

    pub fn with_z1(m: i64, z1_dot_h: i64, z1_dot_k: i64, z1_sq: i64) -> Result<Self> {
        Ok(KoszulDatum { z1_dot_h, z1_dot_k, z1_sq, ..Self::new(m)? })
    }

    pub fn m(&self) -> i64 {
        self.m
    }
}

/// `deg Z₀ = d² − (K + tH + Z₁)·(mH − Z₁)` with `t = 5 − m`, from
/// `c₂(N_X) = d²`. A negative value means the data are inconsistent.
pub fn ndp_deg_z(inv: &SurfaceInvariants, kd: &KoszulDatum) -> i64 {
    let (d, hk) = (inv.d(), inv.hk());
    let (m, t) = (kd.m, 5 - kd.m);
    let product = m * hk - kd.z1_dot_k + t * m * d - t * kd.z1_dot_h + m * kd.z1_dot_h - kd.z1_sq;
    d * d - product
}

/// Chern data of `N*_X(kH)`, using `c₁(N*) = −K − 5H` and
/// `c₂(N*) = c₂(N_X) = d²`.
pub fn conormal_twist_chern(inv: &SurfaceInvariants, k: i64) -> SheafChern {
    let (d, hk, k2) = (inv.d(), inv.hk(), inv.k2());
    let a = 2 * k - 5;
    SheafChern {
        rank: 2,
        c1_sq: Rational::from_int(a * a * d - 2 * a * hk + k2),
        c1_dot_h: Rational::from_int(a * d - hk),
        c1_dot_k: Rational::from_int(a * hk - k2),
        c2: Rational::from_int(d * d + k * (-hk - 5 * d) + k * k * d),
    }
}

/// Intersection data of the positive-cone classes `B₁`, `B₂` attached
/// to a destabilizing filtration of `T_ξ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationData {
    case: StabilityBranch,
    pub b1_sq: Rational,
    pub b1_dot_h: Rational,
    pub b2_sq: Rational,
    pub b2_dot_h: Rational,
    pub b1_dot_b2: Rational,
}

impl FiltrationData {
    pub fn new(case: StabilityBranch, b1_sq: Rational, b1_dot_h: Rational) -> Result<Self> {
        Self::full(case, b1_sq, b1_dot_h, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn full(
        case: StabilityBranch,
        b1_sq: Rational,
        b1_dot_h: Rational,
        b2_sq: Rational,
        b2_dot_h: Rational,
        b1_dot_b2: Rational,
    ) -> Result<Self> {
        if case.is_semistable() {
            return Err(Error::NoFiltration);
        }
        if !b1_dot_h.is_positive() {
            return Err(Error::NotInPositiveCone(b1_dot_h));
        }
        Ok(FiltrationData { case, b1_sq, b1_dot_h, b2_sq, b2_dot_h, b1_dot_b2 })
    }

    pub fn case(&self) -> StabilityBranch {
        self.case
    }

    // gram matrix of (H, B₁, B₂)
    fn gram(&self, d: i64) -> [[Rational; 3]; 3] {
        let d = Rational::from_int(d);
        [
            [d, self.b1_dot_h.clone(), self.b2_dot_h.clone()],
            [self.b1_dot_h.clone(), self.b1_sq.clone(), self.b1_dot_b2.clone()],
            [self.b2_dot_h.clone(), self.b1_dot_b2.clone(), self.b2_sq.clone()],
        ]
    }
}

/// `c₁` of one graded piece of the filtration, in the basis `(H, B₁, B₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationClass {
    pub coeffs: [Rational; 3],
    pub dot_h: Rational,
    pub square: Rational,
}

fn pair(g: &[[Rational; 3]; 3], a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..3 {
        for j in 0..3 {
            acc = acc + &(&a[i] * &b[j]) * &g[i][j];
        }
    }
    acc
}

fn coeff_rows(case: StabilityBranch) -> Vec<[Rational; 3]> {
    let r = Rational::new;
    let z = || Rational::zero();
    match case {
        StabilityBranch::Semistable => vec![],
        StabilityBranch::UnstableRank2Sub => vec![
            [r(-2, 3), r(1, 3), z()],
            [r(-1, 3), r(-1, 3), z()],
        ],
        StabilityBranch::UnstableRank1Sub => vec![
            [r(-1, 3), r(2, 3), z()],
            [r(-2, 3), r(-2, 3), z()],
        ],
        StabilityBranch::UnstableFullLadder => vec![
            [r(-1, 3), r(2, 3), r(1, 3)],
            [r(-1, 3), r(-1, 3), r(1, 3)],
            [r(-1, 3), r(-1, 3), r(-2, 3)],
        ],
    }
}

/// The first Chern classes `L_i` of the graded pieces, with their degrees
/// and squares. Their sum is always `c₁(T_ξ) = −H`.
pub fn filtration_classes(fd: &FiltrationData, d: i64) -> Result<Vec<FiltrationClass>> {
    let rows = coeff_rows(fd.case);
    if rows.is_empty() {
        return Err(Error::NoFiltration);
    }
    let total: Vec<Rational> = (0..3).map(|i| rows.iter().map(|r| &r[i]).sum()).collect();
    assert_eq!(
        total,
        vec![Rational::from_int(-1), Rational::zero(), Rational::zero()],
        "filtration classes must sum to -H"
    );
    let g = fd.gram(d);
    let h = [Rational::one(), Rational::zero(), Rational::zero()];
    Ok(rows
        .into_iter()
        .map(|c| FiltrationClass { dot_h: pair(&g, &c, &h), square: pair(&g, &c, &c), coeffs: c })
        .collect())
}

/// Lower bound for `c₂(T_ξ) = c₂ − K² − H·K` on the given branch.
pub fn filtration_c2_lower_bound(fd: &FiltrationData, d: i64) -> Result<Rational> {
    let d = Rational::from_int(d);
    match fd.case {
        StabilityBranch::Semistable => Err(Error::NoFiltration),
        StabilityBranch::UnstableRank2Sub => Ok((d * 4 - &fd.b1_sq) / 12),
        StabilityBranch::UnstableRank1Sub => Ok((d - &fd.b1_sq) / 3),
        StabilityBranch::UnstableFullLadder => Ok((d - &fd.b1_sq - &fd.b2_sq - &fd.b1_dot_b2) / 3),
    }
}

/// For a surface on a quartic with two-dimensional Albanese image the
/// length of `Z₀` would have to satisfy both `deg Z₀ ≤ 4d` and
/// `deg Z₀ ≥ 6d − 1`; true when these conflict.
pub fn m4_albanese2_infeasible(d: i64) -> Result<bool> {
    if d < 1 {
        return Err(Error::OutOfRange { what: "degree", value: d });
    }
    Ok(6 * d - 1 > 4 * d)
}
