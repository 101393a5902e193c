//! Finite searches over numerical invariants: the families of a given
//! slope, irrational scrolls, conic bundles on a quartic, admissible
//! node counts, and the searches whose emptiness closes a case analysis.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    bogomolov_discriminant, chi_lower_bound_applies, chi_upper_bound, d_alpha, ep_genus_bound,
    pm_polynomial, SheafChern, VARCHENKO_BOUND,
};
use crate::curves::castelnuovo_max_genus;
use crate::error::{Error, Result};
use crate::invariants::{HilbertTriple, SurfaceInvariants};
use crate::rational::Rational;

/// Which surfaces of slope `alpha` on a hypersurface of degree `m` to list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyQuery {
    m: i64,
    alpha: Rational,
    pub use_hodge: bool,
    pub require_hk_positive: bool,
}

impl FamilyQuery {
    /// Only `m ∈ {4, 5}` carry the genus and `χ` bounds the search needs.
    pub fn new(m: i64, alpha: Rational) -> Result<Self> {
        let six = Rational::from_int(6);
        match m {
            4 if alpha >= six => {
                Err(Error::InvalidQuery(format!("slope on a quartic must be below 6, got {alpha}")))
            }
            5 if alpha == six => Err(Error::InvalidQuery("slope 6 is excluded on a quintic".into())),
            4 | 5 => Ok(FamilyQuery { m, alpha, use_hodge: false, require_hk_positive: false }),
            2 | 3 => Err(Error::InvalidQuery(format!(
                "no finiteness bounds are available for m = {m}"
            ))),
            _ => Err(Error::InvalidQuery(format!("hypersurface degree {m} outside 2..=5"))),
        }
    }

    pub fn with_hodge(mut self, on: bool) -> Self {
        self.use_hodge = on;
        self
    }

    pub fn with_hk_positive(mut self, on: bool) -> Self {
        self.require_hk_positive = on;
        self
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    /// `K² = α·χ` for a member of the family, if integral.
    pub fn k2_of(&self, chi: i64) -> Option<i64> {
        (&self.alpha * chi).to_i64()
    }

    fn members_of_degree(&self, d: i64) -> Result<Vec<HilbertTriple>> {
        let six = Rational::from_int(6);
        let chi_max = chi_upper_bound(self.m, &self.alpha, d)?.floor();
        let chi_max = i64::try_from(chi_max).map_err(|_| Error::InvalidQuery("chi range too large".into()))?;
        let genus_cap = ep_genus_bound(self.m, d)?;
        let pm = chi_lower_bound_applies(self.m, d).then(|| pm_polynomial(self.m, d)).transpose()?;
        let mut out = vec![];
        for chi in 1..=chi_max {
            let Some(k2) = self.k2_of(chi) else { continue };
            // 5·H·K = d² − 10d + 2(6 − α)χ
            let five_hk = (&six - &self.alpha) * (2 * chi) + (d * d - 10 * d);
            let Some(five_hk) = five_hk.to_i64() else { continue };
            if five_hk % 5 != 0 {
                continue;
            }
            let hk = five_hk / 5;
            if (d + hk) % 2 != 0 || Rational::from_int(d + hk) > genus_cap {
                continue;
            }
            if let Some(pm) = &pm {
                if Rational::from_int(chi) < *pm {
                    continue;
                }
            }
            if self.use_hodge && (hk as i128) * (hk as i128) < (d as i128) * (k2 as i128) {
                continue;
            }
            if self.require_hk_positive && hk < 1 {
                continue;
            }
            out.push(HilbertTriple { d, hk, chi });
        }
        Ok(out)
    }
}

/// Every Hilbert triple `(d, H·K, χ)` that the numerical constraints allow
/// for the query, sorted by `(d, χ)`.
pub fn enumerate_families(q: &FamilyQuery) -> Result<Vec<HilbertTriple>> {
    let d_max = d_alpha(q.m, &q.alpha)?;
    let per_degree: Result<Vec<Vec<HilbertTriple>>> =
        (5..=d_max).into_par_iter().map(|d| q.members_of_degree(d)).collect();
    let mut out: Vec<HilbertTriple> = per_degree?.into_iter().flatten().collect();
    out.sort_by_key(|t| (t.d, t.chi, t.hk));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ScrollNumerics {
    pub d: i64,
    pub q: i64,
}

/// Solutions of `d² − 5d = 6(q − 1)` with `3 ≤ d ≤ d_max`, `q ≥ 1`, before
/// the section-family constraints are applied.
pub fn scroll_dpf_candidates(d_max: i64) -> Vec<ScrollNumerics> {
    (3..=d_max)
        .filter_map(|d| {
            let r = d * d - 5 * d;
            (r % 6 == 0 && r >= 0).then_some(ScrollNumerics { d, q: r / 6 + 1 })
        })
        .collect()
}

/// Irrational scrolls in `P⁴` up to degree `d_max`. A scroll of degree
/// `d = 2a + 1` carries a family of sections forcing `2(q−1) = (a+1)(a−2)`,
/// and together with the double point formula `(a−1)(a−2) = 0`.
pub fn enumerate_irrational_scrolls(d_max: i64) -> Vec<ScrollNumerics> {
    scroll_dpf_candidates(d_max)
        .into_iter()
        .filter(|s| {
            if s.d % 2 == 0 {
                return false;
            }
            let a = (s.d - 1) / 2;
            2 * (s.q - 1) == (a + 1) * (a - 2) && 3 * (a + 1) * (a - 2) == (2 * a + 1) * (2 * a - 4)
        })
        .collect()
}

/// A conic bundle over a curve of genus `q` on a quartic threefold with
/// `δ` singular fibres, whose conics span planes along a curve of degree
/// `d'`; `deg_z` is the number of nodes of the quartic it passes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConicBundleSolution {
    pub d: i64,
    pub q: i64,
    pub delta: i64,
    pub d_prime: i64,
    pub k2: i64,
    pub hk: i64,
    pub c2: i64,
    pub deg_z: i64,
}

impl ConicBundleSolution {
    pub fn invariants_hold(&self) -> bool {
        self.delta == 3 * self.d - 4 * self.d_prime
            && self.deg_z == self.d + 6 * self.d_prime
            && self.d * self.d - 9 * self.d + 2 * self.d_prime == 16 * (self.q - 1)
    }

    pub fn surface(&self) -> Result<SurfaceInvariants> {
        // c₂ = 12χ − K² fixes χ
        let twelve_chi = self.c2 + self.k2;
        if twelve_chi % 12 != 0 {
            return Err(Error::InvalidInvariants(format!("12 chi = {twelve_chi}")));
        }
        SurfaceInvariants::new(self.d, self.hk, self.k2, twelve_chi / 12)?.with_q(self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConicBundleRejection {
    NegativeDelta,
    OddDegreeDefect,
    TooManyNodes,
    Castelnuovo { bound: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicBundleCandidate {
    pub solution: ConicBundleSolution,
    pub rejection: Option<ConicBundleRejection>,
}

/// Integral solutions of `d² − 9d + 2d' = 16(q − 1)` with `3 ≤ d' ≤ 6`,
/// `5 ≤ d ≤ 45`, `q ≥ 1`, each tagged with the first constraint it fails.
pub fn conic_bundle_candidates() -> Vec<ConicBundleCandidate> {
    let mut out = vec![];
    for d_prime in 3i64..=6 {
        for d in 5i64..=45 {
            let lhs = d * d - 9 * d + 2 * d_prime;
            if lhs % 16 != 0 || lhs < 0 {
                continue;
            }
            let q = lhs / 16 + 1;
            let delta = 3 * d - 4 * d_prime;
            let deg_z = d + 6 * d_prime;
            let k2 = -8 * (q - 1) - delta;
            let hk = 4 * (q - 1) - (d - delta).div_euclid(2);
            let c2 = -4 * (q - 1) + delta;
            let castelnuovo = castelnuovo_max_genus(d_prime, 3).expect("d' ≥ 3");
            let rejection = if delta < 0 {
                Some(ConicBundleRejection::NegativeDelta)
            } else if (d - delta) % 2 != 0 {
                Some(ConicBundleRejection::OddDegreeDefect)
            } else if deg_z > VARCHENKO_BOUND {
                Some(ConicBundleRejection::TooManyNodes)
            } else if q > castelnuovo {
                Some(ConicBundleRejection::Castelnuovo { bound: castelnuovo })
            } else {
                None
            };
            out.push(ConicBundleCandidate {
                solution: ConicBundleSolution { d, q, delta, d_prime, k2, hk, c2, deg_z },
                rejection,
            });
        }
    }
    out
}

/// Conic bundles that survive every numerical constraint.
pub fn enumerate_quartic_conic_bundles() -> Vec<ConicBundleSolution> {
    let mut out: Vec<ConicBundleSolution> = conic_bundle_candidates()
        .into_iter()
        .filter(|c| c.rejection.is_none())
        .map(|c| c.solution)
        .collect();
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DegZBranch {
    Stable,
    Unstable,
}

/// Node counts `deg Z ≤ 45` compatible with a surface of degree `d` on a
/// quartic: `deg Z ≡ d² (mod 8)`, and `deg Z ≥ 4d` (the rank-2 sheaf with
/// `c₁ = 4H`, `c₂ = deg Z` is Bogomolov semistable) or `deg Z ≥ 3d`.
pub fn admissible_quartic_deg_z(d: i64) -> Result<Vec<(i64, DegZBranch)>> {
    if !(5..=11).contains(&d) {
        return Err(Error::OutOfRange { what: "degree", value: d });
    }
    let mut out = vec![];
    for deg_z in 0..=VARCHENKO_BOUND {
        if (deg_z - d * d).rem_euclid(8) != 0 {
            continue;
        }
        if deg_z >= 4 * d {
            out.push((deg_z, DegZBranch::Stable));
        } else if deg_z >= 3 * d {
            out.push((deg_z, DegZBranch::Unstable));
        }
    }
    Ok(out)
}

/// Chern data of the rank-2 sheaf `E` with `c₁ = 4H`, `c₂ = deg Z`.
pub fn quartic_node_sheaf(d: i64, deg_z: i64) -> SheafChern {
    SheafChern {
        rank: 2,
        c1_sq: Rational::from_int(16 * d),
        c1_dot_h: Rational::from_int(4 * d),
        c1_dot_k: Rational::zero(),
        c2: Rational::from_int(deg_z),
    }
}

/// Bogomolov check of an admissible entry, recomputed from the sheaf.
pub fn deg_z_branch_by_discriminant(d: i64, deg_z: i64) -> DegZBranch {
    if bogomolov_discriminant(&quartic_node_sheaf(d, deg_z)).is_negative() {
        DegZBranch::Unstable
    } else {
        DegZBranch::Stable
    }
}

/// Surfaces of general type on a quintic with trivial class of the
/// destabilizing divisor: `χ ∈ {1, 2}`, `6χ < K² ≤ min(d − 1, 14, 9χ)`,
/// `1 ≤ H·K < d`, `(H·K)² ≥ d·K²` and the double point formula.
/// Each constraint can be relaxed to see which one does the work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrivialClassSearch {
    pub d_max: i64,
    pub require_hk_below_d: bool,
    pub require_bmy: bool,
}

impl Default for TrivialClassSearch {
    fn default() -> Self {
        TrivialClassSearch { d_max: 16, require_hk_below_d: true, require_bmy: true }
    }
}

impl TrivialClassSearch {
    pub fn run(&self) -> Vec<SurfaceInvariants> {
        let mut out = vec![];
        for chi in 1..=2 {
            for d in 5..=self.d_max {
                let mut k2_max = (d - 1).min(14);
                if self.require_bmy {
                    k2_max = k2_max.min(9 * chi);
                }
                for k2 in 6 * chi + 1..=k2_max {
                    // d² − 10d − 5H·K = 2K² − 12χ
                    let five_hk = d * d - 10 * d - 2 * k2 + 12 * chi;
                    if five_hk % 5 != 0 {
                        continue;
                    }
                    let hk = five_hk / 5;
                    if hk < 1 || (self.require_hk_below_d && hk >= d) || hk * hk < d * k2 {
                        continue;
                    }
                    out.push(SurfaceInvariants::new(d, hk, k2, chi).expect("small values"));
                }
            }
        }
        out
    }
}

pub fn m5_trivial_class_search() -> Vec<SurfaceInvariants> {
    TrivialClassSearch::default().run()
}

/// A surface on a quadric whose hyperplane class is twice a ruling class:
/// `2(g − 1) = d(d − 5)/2`, hence `deg Z = d² − 4d − 4(g − 1) = d`,
/// contradicting `deg Z < d`. Returns `(deg Z, d)`.
pub fn quadric_scroll_contradiction(d: i64) -> Result<(i64, i64)> {
    if d < 1 || d % 4 != 0 {
        return Err(Error::OutOfRange { what: "degree (positive multiple of 4)", value: d });
    }
    let two_g_minus_2 = d * (d - 5) / 2;
    Ok((d * d - 4 * d - 2 * two_g_minus_2, d))
}
