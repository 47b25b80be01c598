use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("not a permutation of 0..{arity}: {sigma:?}")]
    NotAPermutation { sigma: Vec<usize>, arity: usize },

    #[error("identification needs i < j < arity and arity >= 2 (got i={i}, j={j}, arity={arity})")]
    InvalidIdentification { i: usize, j: usize, arity: usize },

    #[error("arity must be positive")]
    ZeroArity,

    #[error("class (iii) parameter a must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("integrality check over Z requires an integer a, got {0}")]
    NonIntegerCoefficient(String),

    #[error("resource guard tripped: projected {projected} terms exceeds ceiling {ceiling}")]
    ResourceExceeded { projected: u128, ceiling: u128 },

    #[error("oracle found the identity to hold but the polynomial fits no class")]
    Unclassifiable,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
