//! Numerical invariants `(d, H·K, K², χ, q)` of a smooth surface `X ⊂ P⁴`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Inputs are limited to this magnitude so that every derived quantity
/// (`d²`, the double point residual, ...) fits in an `i64`.
pub const MAGNITUDE_LIMIT: i64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInvariants", into = "RawInvariants")]
pub struct SurfaceInvariants {
    d: i64,
    hk: i64,
    k2: i64,
    chi: i64,
    q: Option<i64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInvariants {
    d: i64,
    hk: i64,
    k2: i64,
    chi: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<i64>,
}

impl TryFrom<RawInvariants> for SurfaceInvariants {
    type Error = Error;

    fn try_from(r: RawInvariants) -> Result<Self> {
        let inv = SurfaceInvariants::new(r.d, r.hk, r.k2, r.chi)?;
        match r.q {
            Some(q) => inv.with_q(q),
            None => Ok(inv),
        }
    }
}

impl From<SurfaceInvariants> for RawInvariants {
    fn from(s: SurfaceInvariants) -> Self {
        RawInvariants { d: s.d, hk: s.hk, k2: s.k2, chi: s.chi, q: s.q }
    }
}

fn check_magnitude(what: &'static str, value: i64) -> Result<()> {
    if value.abs() > MAGNITUDE_LIMIT {
        return Err(Error::OutOfRange { what, value });
    }
    Ok(())
}

impl SurfaceInvariants {
    pub fn new(d: i64, hk: i64, k2: i64, chi: i64) -> Result<Self> {
        check_magnitude("d", d)?;
        check_magnitude("hk", hk)?;
        check_magnitude("k2", k2)?;
        check_magnitude("chi", chi)?;
        if d < 1 {
            return Err(Error::InvalidInvariants(format!("degree must be positive, got {d}")));
        }
        Ok(SurfaceInvariants { d, hk, k2, chi, q: None })
    }

    /// Attach the irregularity. Requires `q ≥ 0` and `p_g = χ − 1 + q ≥ 0`.
    pub fn with_q(self, q: i64) -> Result<Self> {
        check_magnitude("q", q)?;
        if q < 0 {
            return Err(Error::InvalidInvariants(format!("irregularity must be nonnegative, got {q}")));
        }
        if self.chi - 1 + q < 0 {
            return Err(Error::InvalidInvariants(format!(
                "p_g = chi - 1 + q = {} is negative",
                self.chi - 1 + q
            )));
        }
        Ok(SurfaceInvariants { q: Some(q), ..self })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn hk(&self) -> i64 {
        self.hk
    }

    pub fn k2(&self) -> i64 {
        self.k2
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn q(&self) -> Option<i64> {
        self.q
    }

    /// Topological Euler number, always via Noether.
    pub fn c2(&self) -> i64 {
        noether_c2(self)
    }

    /// Geometric genus `χ − 1 + q`, when `q` is known.
    pub fn p_g(&self) -> Option<i64> {
        self.q.map(|q| self.chi - 1 + q)
    }

    pub fn hilbert_triple(&self) -> HilbertTriple {
        HilbertTriple { d: self.d, hk: self.hk, chi: self.chi }
    }

    /// Parse a single JSON record.
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// The coefficients of `P(t) = (d/2)t² − (H·K/2)t + χ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HilbertTriple {
    pub d: i64,
    pub hk: i64,
    pub chi: i64,
}

impl HilbertTriple {
    pub fn hilbert_polynomial(&self, t: &Rational) -> Rational {
        let d = Rational::from_int(self.d);
        let hk = Rational::from_int(self.hk);
        &d * &(t * t) / 2 - &hk * t / 2 + self.chi
    }
}

/// `c₂ = 12χ − K²`.
pub fn noether_c2(inv: &SurfaceInvariants) -> i64 {
    12 * inv.chi - inv.k2
}

/// `2g(H) − 2 = H² + H·K`.
pub fn sectional_genus_two_g_minus_2(inv: &SurfaceInvariants) -> i64 {
    inv.d + inv.hk
}

/// `d² − 5d − 10(g−1) + (c₂ − K²)`; zero exactly when the double point
/// formula holds.
pub fn dpf_residual(inv: &SurfaceInvariants) -> i64 {
    let d = inv.d;
    d * d - 5 * d - 5 * sectional_genus_two_g_minus_2(inv) + noether_c2(inv) - inv.k2
}

/// `α = K²/χ`.
pub fn slope(inv: &SurfaceInvariants) -> Result<Rational> {
    if inv.chi <= 0 {
        return Err(Error::UndefinedSlope(inv.chi));
    }
    Ok(Rational::new(inv.k2, inv.chi))
}

/// The complete intersection of a quartic and a hypersurface of degree `a`.
/// `K = (a−1)H`, and `χ` comes from the Koszul resolution
/// `0 → O(−4−a) → O(−4) ⊕ O(−a) → O → O_X → 0`.
pub fn ci_invariants(a: i64) -> Result<SurfaceInvariants> {
    if a < 2 {
        return Err(Error::OutOfRange { what: "complete intersection degree", value: a });
    }
    if a > 1_000 {
        return Err(Error::OutOfRange { what: "complete intersection degree", value: a });
    }
    let chi_p4 = |t: i64| Rational::from_int(t + 4).binomial(4);
    let chi = chi_p4(0) - chi_p4(-4) - chi_p4(-a) + chi_p4(-4 - a);
    let chi = chi.to_i64().expect("Koszul Euler characteristic is integral");
    let d = 4 * a;
    SurfaceInvariants::new(d, d * (a - 1), d * (a - 1) * (a - 1), chi)
}
