use thiserror::Error;

/// Errors raised by the exact-arithmetic and moduli computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the range where the operation is defined.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// The input is in a range for which no closed value is tabulated.
    #[error("{op}({args}) is outside the tabulated range")]
    OutsideTable { op: &'static str, args: String },

    #[error("not divisible: {numerator} is not a multiple of {denominator}")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },

    #[error("{op} requires a series with {requirement} constant term")]
    ConstantTerm {
        op: &'static str,
        requirement: &'static str,
    },

    /// A coefficient at or past the truncation order was requested.
    #[error("coefficient t^{index} is unknown: series is truncated at order {order}")]
    Truncated { index: usize, order: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Two independent computations that must agree did not.
    #[error("verification failed for {what}: expected {expected}, got {actual}")]
    Mismatch {
        what: String,
        expected: String,
        actual: String,
    },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain {
        op,
        reason: reason.into(),
    }
}
