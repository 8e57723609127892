use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least 2, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {index} out of range for {strands} strands (expected 1..={max})", max = .strands - 1)]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("not a simple braid: {0}")]
    NotSimple(String),

    #[error("inconsistent cord invariant: {0}")]
    Inconsistent(String),

    #[error("invalid cord target: {0}")]
    InvalidTarget(String),

    #[error("matrix rejected by search: {0}")]
    SearchRejected(String),
}

impl Error {
    pub(crate) fn parse(position: usize, token: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            position,
            token: token.to_string(),
            reason: reason.into(),
        }
    }
}

pub(crate) fn ensure_same_size(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left, right })
    }
}

pub(crate) fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in exact arithmetic")
}

pub(crate) fn checked_sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).expect("integer overflow in exact arithmetic")
}

pub(crate) fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in exact arithmetic")
}

pub(crate) fn checked_neg(a: i64) -> i64 {
    a.checked_neg().expect("integer overflow in exact arithmetic")
}
