//! Exact computer algebra for the algebra of polynomial differential forms on
//! R^n under the diagonal action of the symmetric group.
//!
//! Everything is computed over exact rationals. The crate provides the sparse
//! superform arithmetic, the symmetric-group action, the differential and
//! contraction operators, exact sparse linear algebra over Q, and the
//! verification drivers behind the `superforms` CLI.

pub mod action;
pub mod characters;
pub mod conjecture;
pub mod error;
pub mod harmonics;
pub mod invariants;
pub mod linalg;
pub mod operators;
pub mod regseq;
pub mod report;
pub mod series;
pub mod superform;
pub mod symfunc;

mod memo;

pub use error::{Error, Result};
pub use superform::{Bidegree, Coeff, ExponentVector, SuperForm, SuperMonomial, WedgeWord};
