use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Column outside the window `0..=2n+2` on which the skew-symmetric
    /// extension is defined.
    #[error("column {k} is outside the extended row 0..={max} of row {n}")]
    OutOfRange { n: u32, k: i64, max: i64 },

    #[error("invalid triangle spec: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("s = {s} and d = {d} are not coprime")]
    NotCoprime { s: u32, d: u32 },

    /// An exact computation produced a value that the mathematics rules
    /// out (a non-integral sum, an odd number that must be halved, ...).
    /// Seeing this means there is a bug, not bad input.
    #[error("arithmetic fault: {0}")]
    ArithmeticFault(String),
}
