use thiserror::Error;

use crate::field::TowerId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("tower mismatch: {0} vs {1}")]
    TowerMismatch(TowerId, TowerId),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("root multiplicity of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("expected multiplicity at least {needed}, found {found}")]
    MultiplicityShortfall { needed: usize, found: usize },
    #[error("conic is reducible")]
    ReducibleConic,
    #[error("curve vanishes identically along the conic")]
    InfiniteMultiplicity,
    #[error("total contact: no residual intersection point")]
    TotalContact,
    #[error("division polynomial index {0} out of range 0..=12")]
    IndexOutOfRange(i64),
    #[error("generators are dependent: only {achieved} of {expected} points generated")]
    IndependenceFailure { achieved: usize, expected: usize },
    #[error("catalog construction failed: {0}")]
    Catalog(String),
    #[error("unexpected degeneracy: kernel of dimension {0}")]
    UnexpectedDegeneracy(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("census mismatch: {0}")]
    Census(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}
