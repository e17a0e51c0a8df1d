use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed vertex address {0:?}")]
    MalformedAddress(String),
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("vertex set is not connected")]
    Disconnected,
    #[error("n = {n} is outside the certified domain n >= {min} for m = {m}")]
    OutOfDomain { n: usize, m: usize, min: usize },
    #[error("{what} = {got} exceeds the configured cap {cap}")]
    ResourceCap {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("estimate for n = {0} overflows the floating point range")]
    Overflow(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
