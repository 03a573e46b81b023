use thiserror::Error;

/// Domain errors raised by ring operations.
///
/// Non-membership results (a nonzero residue, an empty search) are not
/// errors and are reported through the return types of the operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is outside the sieve range 1..={bound}")]
    OutsideSieve { value: usize, bound: usize },

    #[error("leading prime of {0} is undefined")]
    NoLeadingPrime(usize),

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(&'static str),

    #[error("encoded value overflows the machine integer range")]
    Overflow,

    #[error("bound {0} is not supported (must lie in 1..={1})")]
    UnsupportedBound(usize, usize),

    #[error("index {index} lies outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("operands have different bounds ({0} and {1})")]
    BoundMismatch(usize, usize),

    #[error("element is not a unit (value at 1 is zero)")]
    NotUnit,

    #[error("element is zero in the truncated ring")]
    ZeroElement,

    #[error("element is a unit")]
    UnitElement,

    #[error("product of the first {k} primes exceeds the bound {bound}")]
    PrimorialExceedsBound { k: usize, bound: usize },

    #[error("kernel condition violated: gamma({column},{j}) * gamma({column},{k}) is nonzero")]
    KernelCondition { column: usize, j: u32, k: u32 },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
