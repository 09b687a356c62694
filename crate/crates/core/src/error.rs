use thiserror::Error;

/// Errors produced while building root systems or acting with Weyl group
/// elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible Lie type {family}{rank}: {reason}")]
    InadmissibleType {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse Lie type {0:?} (expected e.g. \"A3\", \"G2\", \"E8\")")]
    UnparsableType(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("simple reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl group of {lie_type} has order {order}, which exceeds the limit {max_order}")]
    OrderExceeded {
        lie_type: String,
        order: u128,
        max_order: u128,
    },

    #[error("cannot parse weight coefficient {0:?}")]
    UnparsableCoefficient(String),
}

pub type Result<T> = std::result::Result<T, Error>;
