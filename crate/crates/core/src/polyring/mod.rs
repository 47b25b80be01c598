//! Sparse multivariate polynomials over ℚ.

mod multi_index;
mod polynomial;

pub use multi_index::MultiIndex;
pub use polynomial::{Degree, Polynomial};

#[cfg(test)]
pub(crate) mod tests;
