//! Exact computation of Schur multipliers and related invariants of
//! finite-dimensional nilpotent Lie algebras over the rationals.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod multiplier;
pub mod presentation;
pub mod verify;

pub use algebra::{Bracket, Fingerprint, LieAlgebra, QuotientMap, Subspace};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar};
