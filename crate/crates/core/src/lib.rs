//! Weyl group orbits on Kac–Moody root systems.
//!
//! Matrices, roots and words use 0-based indices in this API. Every textual,
//! JSON and command-line surface shows 1-based indices, so `α_1` is index 0.

mod det;

pub mod cli;
pub mod dynkin;
pub mod error;
pub mod fixedpoints;
pub mod fixtures;
pub mod gcm;
pub mod imaginary;
pub mod orbitgraph;
pub mod orbits;
pub mod roots;

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA: &str = "kmorbits/1";

pub use error::{Error, Result};
pub use gcm::{CoxeterEntry, CoxeterMatrix, GeneralizedCartanMatrix, MatrixType, Symmetrizer};
pub use roots::{Rational, RootVector, WeylWord};
