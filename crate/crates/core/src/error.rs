use splitjac_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error("J2 vanishes, so the absolute invariants are undefined")]
    J2Vanishes,

    #[error("no associated genus 2 field (J10=0)")]
    NoGenus2Curve,

    #[error("the resultant of the cubic pair vanishes")]
    ResultantVanishes,

    #[error("a cubic of the pair has vanishing discriminant")]
    DiscriminantVanishes,

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("invalid sextic: {0}")]
    InvalidSextic(String),

    #[error("theta is undefined: factor {factor} vanishes")]
    ThetaUndefined { factor: String },

    #[error("rho is undefined: factor {factor} vanishes")]
    RhoUndefined { factor: String },

    #[error("r1, r2 are undefined: factor {factor} vanishes")]
    EqRUndefined { factor: String },

    #[error("phi2 vanishes at the point, so z is not determined")]
    Phi2Vanishes,

    #[error("only {found} usable points found, {required} required")]
    InsufficientPoints { found: usize, required: usize },

    #[error("characteristic {0} is not supported here")]
    UnsupportedCharacteristic(u64),

    #[error("unknown check `{given}`; valid ids: {valid}")]
    UnknownCheck { given: String, valid: String },
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
