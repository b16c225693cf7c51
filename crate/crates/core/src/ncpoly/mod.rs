//! Free-algebra words, noncommutative polynomials and matrices over them.

mod matrix;
mod poly;
mod word;

pub use matrix::{matrix_relation_expand, NCMatrix};
pub use poly::NCPoly;
pub use word::{word_compare, GenKind, Generator, Word};
