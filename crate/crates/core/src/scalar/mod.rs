//! Exact coefficient arithmetic: `ℚ(i)(params)` and matrices over it.

mod gauss;
mod matrix;
mod parse;
mod poly;
mod ratfunc;
mod var;

pub use gauss::{rational_sqrt, GaussRat};
pub use matrix::{a_q, ScalarMatrix};
pub use parse::{parse_expr, parse_scalar_in, Parseable};
pub use poly::{Monomial, Poly};
pub use ratfunc::Scalar;
pub use var::Var;

use serde::{Deserialize, Serialize};

/// Coefficient field before adjoining parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseField {
    Rationals,
    GaussianRationals,
}

impl BaseField {
    /// Smallest field containing every given scalar.
    pub fn of<'a>(scalars: impl IntoIterator<Item = &'a Scalar>) -> BaseField {
        if scalars.into_iter().all(Scalar::is_real) {
            BaseField::Rationals
        } else {
            BaseField::GaussianRationals
        }
    }
}
