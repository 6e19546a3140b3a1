use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation (k ≥ d, m < 1, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// Malformed text input; `offset` is a byte offset into the input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Two pieces of user data that should agree do not.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("zero zeta-function is not specified for germ form `{0}`")]
    ZeroZetaUnspecified(&'static str),

    /// Two independent computations of the same quantity disagree.
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

/// Checked `i64` helpers that map overflow onto [`Error::Overflow`].
pub(crate) mod checked {
    use super::{Error, Result};

    pub fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
        a.checked_add(b).ok_or(Error::Overflow(ctx))
    }

    pub fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
        a.checked_sub(b).ok_or(Error::Overflow(ctx))
    }

    pub fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
        a.checked_mul(b).ok_or(Error::Overflow(ctx))
    }

    pub fn pow(base: i64, exp: u32, ctx: &'static str) -> Result<i64> {
        base.checked_pow(exp).ok_or(Error::Overflow(ctx))
    }

    pub fn sum<I: IntoIterator<Item = i64>>(items: I, ctx: &'static str) -> Result<i64> {
        items.into_iter().try_fold(0i64, |acc, x| add(acc, x, ctx))
    }
}
