use thiserror::Error;

use crate::ring::Ring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: cannot combine an element of {left} with an element of {right}")]
    RingMismatch { left: Ring, right: Ring },

    #[error("{divisor} does not divide {value} exactly")]
    NotDivisible { value: String, divisor: u64 },

    #[error("{divisor} is not invertible modulo {modulus}")]
    NotInvertible { divisor: u64, modulus: String },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),

    #[error("in-ring recurrence needs a prime modulus greater than {bound}, got {modulus}")]
    ModulusTooSmall { modulus: String, bound: u64 },

    #[error("hafnian is undefined for odd order {0}")]
    OddOrder(usize),

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index subset over universe {subset} applied to a matrix of order {order}")]
    UniverseMismatch { subset: usize, order: usize },

    #[error("invalid index subset: {0}")]
    InvalidSubset(String),

    #[error("parse error: {0}")]
    Parse(String),
}
