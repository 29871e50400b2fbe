//! Exact construction and verification of the 4- and 8-division fields of
//! elliptic curves given by split Weierstrass models.
//!
//! The crate builds, in exact rational arithmetic, the quadratic-extension
//! tower generated by the square-root elements `A_i` and `B_i` attached to a
//! cubic's roots, enumerates all 2-, 4- and 8-torsion points of the curve
//! inside that tower, realizes distinguished field automorphisms and the
//! group they generate, and independently verifies the matching finite
//! group theory inside `SL2(Z/2^n)`.
//!
//! Modules:
//! - [`rational`], [`tower`], [`subalgebra`]: exact field arithmetic.
//! - [`generators`]: the `A_i`/`B_i` generator set and its identities.
//! - [`curve`], [`divpoly`], [`torsion`]: point arithmetic, division
//!   polynomials, halving, and full torsion enumeration.
//! - [`automorphism`]: tower automorphisms and their action on torsion.
//! - [`congruence`]: finite congruence quotients of `SL2` and the
//!   presentation checks.
//! - [`report`], [`pipeline`]: serializable reports and the batch driver
//!   used by the CLI.

pub mod automorphism;
pub mod congruence;
pub mod curve;
pub mod divpoly;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod pipeline;
pub mod rational;
pub mod report;
pub mod subalgebra;
pub mod todd_coxeter;
pub mod torsion;
pub mod tower;

pub use error::{Error, Result};
pub use rational::Rational;
pub use tower::{adjoin_sqrt, TowerDescriptor, TowerElement};
