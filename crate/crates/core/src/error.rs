use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("sequence has no entry at index {0}")]
    MissingIndex(usize),

    #[error("non-integral division at n = {n}: recursion sum is not divisible by {n}")]
    NonIntegral { n: usize },

    #[error("{what} is limited to n <= {max}, got {n}")]
    OutOfRange { what: &'static str, n: usize, max: usize },
}
