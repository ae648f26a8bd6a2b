//! Free-group words, the word parser, the integral group ring, Fox calculus and
//! group presentations.

pub mod fox;
pub mod group_ring;
pub mod parse;
pub mod presentation;
pub mod relations;
pub mod word;

pub use fox::{fox_derivative, fox_derivative_elem};
pub use group_ring::GroupRingElem;
pub use parse::parse_word;
pub use presentation::{Jacobian, Presentation};
pub use relations::{borromean_relator, relation_implication_check, relation_residuals, RelationImplication};
pub use word::{FreeWord, Letter};

/// `i + 1` in `{1, 2, 3}` (cyclic).
pub fn next(i: usize) -> usize {
    i % 3 + 1
}

/// `i − 1` in `{1, 2, 3}` (cyclic).
pub fn prev(i: usize) -> usize {
    (i + 1) % 3 + 1
}
