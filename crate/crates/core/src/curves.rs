//! Numerical facts about line bundles on curves.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Degree of a line bundle on a smooth curve of the given genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveDivisorData {
    deg: i64,
    genus: i64,
}

impl CurveDivisorData {
    pub fn new(deg: i64, genus: i64) -> Result<Self> {
        if genus < 0 {
            return Err(Error::OutOfRange { what: "genus", value: genus });
        }
        Ok(CurveDivisorData { deg, genus })
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }
}

/// Riemann–Roch: `χ(L) = deg L + 1 − g`.
pub fn rr_curve_chi(data: CurveDivisorData) -> i64 {
    data.deg + 1 - data.genus
}

/// Clifford: a special divisor of degree `deg` has `h⁰ ≤ deg/2 + 1`.
pub fn clifford_max_h0(deg: i64) -> Result<Rational> {
    if deg < 0 {
        return Err(Error::OutOfRange { what: "degree", value: deg });
    }
    Ok(Rational::new(deg, 2) + 1)
}

/// Castelnuovo's bound on the arithmetic genus of a nondegenerate
/// irreducible curve of degree `d` in `P^n`.
pub fn castelnuovo_max_genus(d: i64, n: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::OutOfRange { what: "degree", value: d });
    }
    if n < 2 {
        return Err(Error::OutOfRange { what: "ambient dimension", value: n });
    }
    let m = (d - 1) / (n - 1);
    let eps = d - 1 - m * (n - 1);
    Ok(m * (m - 1) * (n - 1) / 2 + m * eps)
}

/// Degree of the dualizing sheaf of a plane curve of degree `db`, pulled
/// back along the plane: `db(db − 3)`.
pub fn plane_curve_omega_degree(db: i64) -> Result<i64> {
    if db < 1 {
        return Err(Error::OutOfRange { what: "degree", value: db });
    }
    Ok(db * (db - 3))
}
