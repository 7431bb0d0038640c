//! Exact computation of Poincaré series for the quadratic algebras attached
//! to a Hecke symmetry, together with the symmetric-function machinery used
//! to cross-check their structure.
//!
//! - [`partitions`]: partitions, conjugation, the Γ_{m,n} and splitting predicates
//! - [`symfunc`]: Littlewood–Richardson coefficients, Schur polynomials, comodule dimensions
//! - [`series`]: polynomials, truncated series, rational functions, Padé reconstruction, Sturm sign tests
//! - [`hecke`]: the Hecke algebra on the `T_w` basis and its action on tensor powers
//! - [`symmetry`]: Hecke symmetries, their axioms, fixtures and Poincaré series
//! - [`verify`]: the identity suite relating all of the above

pub mod error;
pub mod hecke;
pub mod linalg;
pub mod partitions;
pub mod rational;
pub mod series;
pub mod symfunc;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Birank, Partition, SplitDecomposition};
pub use rational::Q;
pub use series::{Poly, RationalFunction, TruncatedSeries};
pub use symmetry::HeckeSymmetry;
