use thiserror::Error;

use crate::encoding::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("table of order {0} is not associative")]
    NotAssociative(usize),

    #[error("pair of tables violates the doppelsemigroup axioms ({0})")]
    NotDoppel(&'static str),

    #[error("map is not a left translation of the table")]
    NotLeftTranslation,

    #[error("table is not a monoid")]
    NotMonoid,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid model name: {0}")]
    InvalidModel(String),

    #[error("order {order} exceeds the search budget (max order {max_order})")]
    OrderBudgetExceeded { order: usize, max_order: usize },

    #[error("search exceeded the node limit of {limit}")]
    NodeBudgetExceeded { limit: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
