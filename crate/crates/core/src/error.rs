use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("value {value} is not an element of F_{q}")]
    NotInField { value: u64, q: u64 },

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("zero has no inverse")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("repeated interpolation node {0}")]
    RepeatedNode(u64),

    #[error("the zero polynomial vanishes everywhere")]
    ZeroPolynomial,

    #[error("variable index {index} out of range 1..={vars}")]
    VariableIndex { index: usize, vars: usize },

    #[error("polynomial of degree {degree} is not reduced below the code length {n}")]
    NotReduced { degree: usize, n: usize },

    #[error("repeated coordinate {0}")]
    RepeatedCoordinate(u64),

    #[error("coordinate {0} is outside the evaluation set")]
    OutsideEvaluationSet(u64),

    #[error("point is not on the hypersurface: remainder has degree {0}")]
    NotOnHypersurface(usize),

    #[error("{what} needs {needed} steps, budget is {limit}")]
    BudgetExceeded { what: &'static str, needed: u128, limit: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

/// Fails with [`Error::BudgetExceeded`] when `needed > limit`.
pub(crate) fn check_budget(what: &'static str, needed: Option<u128>, limit: u128) -> Result<()> {
    match needed {
        Some(n) if n <= limit => Ok(()),
        n => Err(Error::BudgetExceeded { what, needed: n.unwrap_or(u128::MAX), limit }),
    }
}
