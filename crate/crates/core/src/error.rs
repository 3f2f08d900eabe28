use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("all coefficients are zero")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("coefficient at degree {degree} is not finite")]
    NonFinite { degree: usize },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("empty input")]
    EmptyInput,
    #[error("not a Cauchy polynomial: {0}")]
    NotCauchy(&'static str),
    #[error("root solver did not reach tolerance after {iterations} iterations")]
    ToleranceNotReached { iterations: usize },
    #[error("polynomial is not normalized (leading coefficient must be positive, constant term nonzero)")]
    NotNormalized,
    #[error("all coefficients share one sign")]
    AllSameSign,
    #[error("no negative coefficients")]
    NoNegativeCoefficients,
    #[error("stage {stage} out of range 1..={degree}")]
    StageOutOfRange { stage: usize, degree: usize },
    #[error("degree {l} is not admissible: it must carry a positive coefficient above every negative one")]
    InvalidL { l: usize },
    #[error("root isolation exceeded {0} bisection levels")]
    DepthExceeded(usize),
    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),
}
