use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("series needs zero constant term and linear coefficient 1")]
    BadLowestTerms,
    #[error("series inverse needs constant term 1 or -1")]
    NonUnitConstant,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("matching ground set is not [2n]")]
    BadGround,
    #[error("signed permutation must start with a positive entry")]
    PrecondFirstNegative,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("truncation size {size} is too small for n = {n}")]
    TruncationTooSmall { n: usize, size: usize },
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}
