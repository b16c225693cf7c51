//! Exact noncommutative rewriting and verification for the quantum groups
//! `𝒢(A,B)` of GL(2) type and their cogroupoid algebras `𝒢(A,B|C,D)`.

pub mod error;
pub mod fusion;
pub mod invariants;
pub mod ncpoly;
pub mod quantum;
pub mod rewrite;
pub mod scalar;

pub use error::{Error, Result};
