use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field specification `{0}`")]
    FieldSpec(String),
    #[error("{0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("x^2 - ({s})x - ({t}) is reducible over the base field")]
    ReducibleExtension { s: String, t: String },
    #[error("quadratic extensions of an extension field are not supported")]
    NestedExtension,
    #[error("operation requires a quadratic extension field")]
    NotExtension,
    #[error("operands live in different fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact, remainder {remainder}")]
    NotDivisible { remainder: String },
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("valuation of the zero polynomial is undefined")]
    ZeroValuation,
    #[error("valuation at a constant is undefined")]
    ConstantDivisor,
    #[error("polynomial has a coefficient outside the base field")]
    NotInBaseField,
    #[error("unsupported field {0}: operation needs a finite coefficient field")]
    UnsupportedField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("index {n} is divisible by the characteristic {p}")]
    IndexDivisibleByCharacteristic { n: u64, p: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("wrong sequence kind: expected {expected}, got {actual}")]
    WrongKind {
        expected: &'static str,
        actual: &'static str,
    },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
