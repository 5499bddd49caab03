//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values living over rings with different variable counts were combined.
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },

    /// An exponent vector that must be componentwise nonnegative has a negative entry.
    #[error("negative exponent {value} at position {index}")]
    NegativeExponent { index: usize, value: i64 },

    /// A Laurent polynomial was required to be a single monomial (up to a unit).
    #[error("expected a unit times a single monomial, got {0} terms")]
    NotMonomial(usize),

    /// A coefficient has a pole along a coordinate hyperplane outside the
    /// modulus support, so the form does not live on the interior at all.
    #[error("coefficient of {wedge} has a pole in x{var} outside the modulus support")]
    PoleOffSupport { var: usize, wedge: String },

    /// An index was required to lie in the modulus support.
    #[error("index {0} is not in the modulus support")]
    NotInSupport(usize),

    /// A form was claimed to lie in a module it does not belong to.
    #[error("form is not a member of {module}: {witness}")]
    NotAMember { module: String, witness: String },

    /// Mismatch between a form's degree or pair and the requested module.
    #[error("{0}")]
    Incompatible(String),

    /// Invalid parameters for an operation.
    #[error("{0}")]
    Domain(String),

    /// Text input did not match the polynomial or form grammar.
    #[error("parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
