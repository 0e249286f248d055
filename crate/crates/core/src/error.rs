use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {p}^{m} does not fit in 63 bits")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("value does not belong to this field context")]
    ContextMismatch,
    #[error("Frobenius exponent {exp} out of range for a degree-{degree} field")]
    InvalidExponent { exp: u32, degree: u32 },
    #[error("zero element where a unit is required")]
    ZeroElement,
    #[error("GF(p^{to}) is not an extension of GF(p^{from})")]
    NotAnExtension { from: u32, to: u32 },
    #[error("operands live in different Ore rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcrd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("row index out of range")]
    IndexOutOfRange,
    #[error("row operation needs two distinct rows")]
    EqualRows,
    #[error("matrix is not square")]
    NotSquare,
    #[error("both polynomials are constant in x2")]
    BothConstant,
    #[error("bad evaluation: leading coefficient vanishes as an operator")]
    BadEvaluation,
    #[error("no modular plan: {0}")]
    PlanFailure(String),
    #[error("Moore system is singular")]
    SingularMooreSystem,
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::ReducibleModulus(_) => "reducible_modulus",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::InvalidModulus(_) => "invalid_modulus",
            Error::FieldTooLarge { .. } => "field_too_large",
            Error::ContextMismatch => "context_mismatch",
            Error::InvalidExponent { .. } => "invalid_exponent",
            Error::ZeroElement => "zero_element",
            Error::NotAnExtension { .. } => "not_an_extension",
            Error::RingMismatch => "ring_mismatch",
            Error::DivisionByZero => "division_by_zero",
            Error::BothZero => "both_zero",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::IndexOutOfRange => "index_out_of_range",
            Error::EqualRows => "equal_rows",
            Error::NotSquare => "not_square",
            Error::BothConstant => "both_constant",
            Error::BadEvaluation => "bad_evaluation",
            Error::PlanFailure(_) => "plan_failure",
            Error::SingularMooreSystem => "singular_moore_system",
            Error::Parse { .. } => "parse",
            Error::Internal(_) => "internal",
        }
    }
}
