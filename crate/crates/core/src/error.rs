use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("integer overflow: value exceeds 64 bits")]
    Overflow,
    #[error("{a} is not invertible modulo {r}")]
    NotCoprime { a: u64, r: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field modulus: {0}")]
    InvalidModulus(&'static str),
    #[error("field modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("field size exceeds 2^32")]
    FieldTooLarge,
    #[error("field element has {found} coefficients, expected {expected}")]
    FieldMismatch { expected: usize, found: usize },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{k} does not divide the group order {order}")]
    NotDivisorOfGroupOrder { k: u64, order: u64 },
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("nonzero coefficient at exponent {exponent}, not divisible by {k}")]
    NotAComposition { exponent: usize, k: u64 },
    #[error("field size q is even")]
    EvenCharacteristic,
    #[error("polynomial is a composition D(X^2)")]
    SquareComposition,
    #[error("prime {prime} divides neither q nor q-1")]
    UnsupportedPrime { prime: u64 },
    #[error("{0} is not a power of the characteristic")]
    NotCharacteristicPower(u64),
    #[error("exponent {k} exceeds the order {e}")]
    ExponentExceedsOrder { k: u64, e: u64 },
    #[error("coefficient does not descend to the base field")]
    DescentFailure,
    #[error("shift element must be nonzero")]
    ZeroShift,
    #[error("exponent must be positive")]
    ZeroExponent,
    #[error("iteration exceeded the safety cap of {0} steps")]
    IterationCap(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
