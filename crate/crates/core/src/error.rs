use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not divisible: would produce a pole ({0})")]
    NotDivisible(String),
    #[error("element budget exceeded: {needed} elements requested, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("insufficient order: need input order {required}, have {available}")]
    InsufficientOrder { required: usize, available: usize },
    #[error("unknown form name: {0}")]
    UnknownForm(String),
    #[error("form {0} is declared but not constructible")]
    NotConstructible(String),
    #[error("unresolved: {0}")]
    Unresolved(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
