//! Numerical invariant theory of smooth surfaces in `P⁴` lying on
//! hypersurfaces of degree at most five.
//!
//! Everything is exact: intersection numbers, Chern classes and bounds are
//! [`Rational`]s, and the enumerators return integral records.
//!
//! ```
//! use p4geo::bounds::d_alpha;
//! use p4geo::enumeration::{enumerate_families, FamilyQuery};
//! use p4geo::invariants::dpf_residual;
//! use p4geo::{Rational, SurfaceInvariants};
//!
//! let alpha: Rational = "5".parse().unwrap();
//! assert_eq!(d_alpha(4, &alpha).unwrap(), 125);
//!
//! let x = SurfaceInvariants::new(8, 0, -8, 0).unwrap().with_q(1).unwrap();
//! assert_eq!(dpf_residual(&x), 0);
//!
//! let query = FamilyQuery::new(4, alpha).unwrap().with_hodge(true);
//! assert!(!enumerate_families(&query).unwrap().is_empty());
//! ```

pub mod bounds;
pub mod curves;
pub mod enumeration;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod rational;
pub mod scroll;
pub mod segre;
pub mod sequences;

pub use error::{Error, Result};
pub use invariants::{HilbertTriple, SurfaceInvariants};
pub use lattice::{DivisorClass, Lattice};
pub use rational::Rational;
