use thiserror::Error;

use crate::rational::{ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor classes belong to different lattices")]
    LatticeMismatch,
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("coordinate vector has length {got}, lattice rank is {rank}")]
    RankMismatch { rank: usize, got: usize },
    #[error("polarization must have positive self-intersection, got {0}")]
    NonPositivePolarization(Rational),
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("slope is undefined for chi = {0}")]
    UndefinedSlope(i64),
    #[error("slope {alpha} is excluded for hypersurface degree {m}")]
    ExcludedSlope { m: i64, alpha: Rational },
    #[error("invalid surface invariants: {0}")]
    InvalidInvariants(String),
    #[error("a semistable sheaf has no Bogomolov filtration")]
    NoFiltration,
    #[error("positive-cone class must have positive H-degree, got {0}")]
    NotInPositiveCone(Rational),
    #[error("unknown divisor class {0:?}")]
    UnknownClass(String),
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("invalid incidence structure: {0}")]
    InvalidIncidence(String),
    #[error("a plane cannot be met with itself")]
    SamePlane,
    #[error("planes {0} and {1} share no configuration point")]
    DisjointPlanes(usize, usize),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
