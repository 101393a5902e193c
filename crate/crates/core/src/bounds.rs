//! Closed-form bounds on the invariants of a surface lying on a
//! hypersurface of degree `m`, and the stability inequalities behind them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{noether_c2, SurfaceInvariants};
use crate::rational::Rational;

/// Maximal number of ordinary double points on a quartic threefold.
pub const VARCHENKO_BOUND: i64 = 45;

/// How the tangent extension `T_ξ` sits with respect to Bogomolov
/// stability: semistable, or destabilized by one of the three possible
/// filtrations `0 ⊂ F₁ ⊂ F₂ = T_ξ`, `0 ⊂ F₁ ⊂ T_ξ` (rank 1), or the full
/// ladder `0 ⊂ F₁ ⊂ F₂ ⊂ T_ξ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilityBranch {
    Semistable,
    UnstableRank2Sub,
    UnstableRank1Sub,
    UnstableFullLadder,
}

impl StabilityBranch {
    pub const ALL: [StabilityBranch; 4] = [
        StabilityBranch::Semistable,
        StabilityBranch::UnstableRank2Sub,
        StabilityBranch::UnstableRank1Sub,
        StabilityBranch::UnstableFullLadder,
    ];

    pub fn is_semistable(self) -> bool {
        self == StabilityBranch::Semistable
    }
}

/// Numerical Chern data of a sheaf on a polarized surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafChern {
    pub rank: u32,
    pub c1_sq: Rational,
    pub c1_dot_h: Rational,
    pub c1_dot_k: Rational,
    pub c2: Rational,
}

impl SheafChern {
    pub fn new(
        rank: u32,
        c1_sq: Rational,
        c1_dot_h: Rational,
        c1_dot_k: Rational,
        c2: Rational,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::OutOfRange { what: "rank", value: 0 });
        }
        Ok(SheafChern { rank, c1_sq, c1_dot_h, c1_dot_k, c2 })
    }

    /// `O^rank`.
    pub fn trivial(rank: u32) -> Self {
        SheafChern {
            rank,
            c1_sq: Rational::zero(),
            c1_dot_h: Rational::zero(),
            c1_dot_k: Rational::zero(),
            c2: Rational::zero(),
        }
    }

    /// A line bundle `O(L)` given by `L², L·H, L·K`.
    pub fn line_bundle(l_sq: Rational, l_dot_h: Rational, l_dot_k: Rational) -> Self {
        SheafChern { rank: 1, c1_sq: l_sq, c1_dot_h: l_dot_h, c1_dot_k: l_dot_k, c2: Rational::zero() }
    }

    /// Twist by the ideal sheaf of a zero-dimensional subscheme of the given
    /// length: `c₂` grows by the length, `c₁` is unchanged.
    pub fn with_points(mut self, length: &Rational) -> Self {
        self.c2 = &self.c2 + length;
        self
    }
}

fn check_m(m: i64, lo: i64, hi: i64) -> Result<()> {
    if !(lo..=hi).contains(&m) {
        return Err(Error::OutOfRange { what: "hypersurface degree m", value: m });
    }
    Ok(())
}

/// The lower bound polynomial
/// `P_m(d) = m·C(d/m + (m−3)/2, 3) − ((m−1)²/2m)·d(d−3) − C(m−1, 4) + 1`
/// for `χ(O_X)` of a surface not lying on a hypersurface of degree `< m`.
pub fn pm_polynomial(m: i64, d: i64) -> Result<Rational> {
    check_m(m, 2, 5)?;
    let x = Rational::new(d, m) + Rational::new(m - 3, 2);
    let quad = Rational::new((m - 1) * (m - 1), 2 * m) * (d * (d - 3));
    Ok(x.binomial(3) * m - quad - Rational::from_int(m - 1).binomial(4) + 1)
}

/// Whether the `χ ≥ P_m(d)` bound is in force, i.e. `d ≥ (m−1)² + 2`.
pub fn chi_lower_bound_applies(m: i64, d: i64) -> bool {
    d >= (m - 1) * (m - 1) + 2
}

/// Ellingsrud–Peskine upper bound for `2g(H) − 2`.
pub fn ep_genus_bound(m: i64, d: i64) -> Result<Rational> {
    match m {
        4 => Ok(Rational::new(d * d, 4)),
        5 => Ok(Rational::new(d * d + 5 * d, 5)),
        _ => Err(Error::OutOfRange { what: "hypersurface degree m (genus bound needs 4 or 5)", value: m }),
    }
}

fn check_slope(m: i64, alpha: &Rational) -> Result<()> {
    let six = Rational::from_int(6);
    let excluded = match m {
        4 => *alpha >= six,
        5 => *alpha == six,
        _ => return Err(Error::OutOfRange { what: "hypersurface degree m (slope bounds need 4 or 5)", value: m }),
    };
    if excluded {
        return Err(Error::ExcludedSlope { m, alpha: alpha.clone() });
    }
    Ok(())
}

/// Upper bound `χ(α, d)` for a surface of slope `α` and degree `d`.
pub fn chi_upper_bound(m: i64, alpha: &Rational, d: i64) -> Result<Rational> {
    check_slope(m, alpha)?;
    let six = Rational::from_int(6);
    let d = Rational::from_int(d);
    Ok(match m {
        4 => (&d * &d + &d * 20) / ((six - alpha) * 8),
        _ if *alpha < six => d * 5 / (six - alpha),
        _ => d / ((alpha - six) * 3),
    })
}

// Polynomial with rational coefficients, lowest degree first.
struct Poly(Vec<Rational>);

impl Poly {
    fn eval(&self, x: i64) -> Rational {
        let x = Rational::from_int(x);
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    // 1 + max |a_i / a_n|: every real root lies below it.
    fn cauchy_bound(&self) -> i64 {
        let lead = self.0.last().expect("nonzero polynomial").abs();
        let m = self.0[..self.degree()]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        let ceil = (m + 1).ceil();
        i64::try_from(ceil).unwrap_or(i64::MAX)
    }

    // f(x) > 0 together with Δᵏf(x) > 0 for k = 1..deg keeps f positive
    // for every integer ≥ x, since Δ^deg f is a positive constant.
    fn positive_from(&self, x: i64) -> bool {
        let mut vals: Vec<Rational> = (0..=self.degree() as i64).map(|i| self.eval(x + i)).collect();
        loop {
            if !vals[0].is_positive() {
                return false;
            }
            if vals.len() == 1 {
                return true;
            }
            vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
    }
}

/// `f(d) ≤ 0` is the degree condition whose largest solution is `d₀(α)`.
fn d_alpha_poly(m: i64, alpha: &Rational) -> Poly {
    let six = Rational::from_int(6);
    let r = Rational::new;
    if m == 4 {
        // (6−α)(d³/12 − 19d²/2 + 80d/3 + 10) − (d² + 20d)
        let e = six - alpha;
        Poly(vec![
            &e * 10,
            &e * &r(80, 3) - 20,
            &e * &r(-19, 2) - 1,
            &e * &r(1, 12),
        ])
    } else if *alpha < six {
        // ((6−α)/25)(d² − 40d + 95) − 5d
        let e = (six - alpha) / 25;
        Poly(vec![&e * 95, &e * -40 - 5, e])
    } else {
        // ((α−6)/25)(d² − 40d + 95) − 1/3
        let e = (alpha - six) / 25;
        Poly(vec![&e * 95 - r(1, 3), &e * -40, e])
    }
}

/// Degree ceiling `d(α) = max(floor, d₀(α))` for surfaces of slope `α`,
/// with floor 10 for quartics and 17 for quintics.
pub fn d_alpha(m: i64, alpha: &Rational) -> Result<i64> {
    check_slope(m, alpha)?;
    let floor = if m == 4 { 10 } else { 17 };
    let f = d_alpha_poly(m, alpha);
    let cap = f.cauchy_bound();
    let mut best = floor;
    let mut d = floor;
    while d <= cap {
        let v = f.eval(d);
        if !v.is_positive() {
            best = d;
        } else if f.positive_from(d) {
            break;
        }
        d += 1;
    }
    Ok(best)
}

/// `Δ(F) = 2r·c₂ − (r−1)·c₁²`.
pub fn bogomolov_discriminant(s: &SheafChern) -> Rational {
    &s.c2 * (2 * s.rank as i64) - &s.c1_sq * (s.rank as i64 - 1)
}

/// Chern data of the rank-3 extension
/// `0 → O(−K − tH) → T_ξ → Ω_X → 0`, `t = 5 − m`.
pub fn txi_chern(m: i64, inv: &SurfaceInvariants) -> Result<SheafChern> {
    check_m(m, 2, 5)?;
    let t = 5 - m;
    let (d, hk, k2) = (inv.d(), inv.hk(), inv.k2());
    Ok(SheafChern {
        rank: 3,
        c1_sq: Rational::from_int(t * t * d),
        c1_dot_h: Rational::from_int(-t * d),
        c1_dot_k: Rational::from_int(-t * hk),
        c2: Rational::from_int(noether_c2(inv) - k2 - t * hk),
    })
}

/// Lower bound for `c₂ − K²` forced on a surface of general type by the
/// stability branch of `T_ξ`.
pub fn general_type_c2_minus_k2_lower_bound(
    m: i64,
    inv: &SurfaceInvariants,
    branch: StabilityBranch,
) -> Result<Rational> {
    check_m(m, 2, 4)?;
    let hk = Rational::from_int(inv.hk());
    let d = Rational::from_int(inv.d());
    let r = Rational::new;
    let lin = |a: Rational, b: Rational| &hk * &a + &d * &b;
    Ok(match (m, branch.is_semistable()) {
        (4, true) => lin(r(1, 1), r(1, 3)),
        (4, false) => lin(r(3, 4), r(0, 1)).min(lin(r(1, 2), r(1, 4))),
        (2, true) => lin(r(3, 1), r(3, 1)),
        (2, false) => lin(r(3, 2), r(9, 4)),
        (3, true) => lin(r(2, 1), r(4, 3)),
        (3, false) => lin(r(1, 1), r(1, 1)).min(lin(r(3, 2), r(1, 3))),
        _ => unreachable!(),
    })
}

/// Bogomolov–Miyaoka–Yau: `K² ≤ 9χ`.
pub fn bmy_ok(inv: &SurfaceInvariants) -> bool {
    inv.k2() <= 9 * inv.chi()
}

/// Miyaoka's lower bound `c₂(F) ≥ L²/3`.
pub fn miyaoka_c2_min(l_sq: &Rational) -> Rational {
    l_sq / 3
}

pub fn varchenko_bound() -> i64 {
    VARCHENKO_BOUND
}

/// For a surface on a quintic: either `K² ≤ c₂`, or the excess `K² − c₂`
/// is positive, at most `2L²/3`, and `L² ≤ d`.
pub fn quintic_excess_bound_ok(inv: &SurfaceInvariants, l_sq: &Rational) -> bool {
    let excess = Rational::from_int(inv.k2() - noether_c2(inv));
    if !excess.is_positive() {
        return true;
    }
    excess <= l_sq * 2 / 3 && *l_sq <= Rational::from_int(inv.d())
}
