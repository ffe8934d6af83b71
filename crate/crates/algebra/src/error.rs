use thiserror::Error;

/// Errors raised by the exact arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("coefficient domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),

    #[error("denominator factor ({factor}) vanishes at the evaluation point")]
    DenominatorVanishes { factor: String },

    #[error("denominator is not a unit modulo {prime}")]
    DenominatorNotUnit { prime: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("degree {found} is below the required minimum {required}")]
    DegreeTooSmall { required: usize, found: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid quadratic extension radicand {0}")]
    InvalidRadicand(i64),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl AlgebraError {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        AlgebraError::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
