use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("too many variables: {0} (at most {max})", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),

    #[error("target degree {target} is below the polynomial degree {actual}")]
    DegreeTooSmall { target: u32, actual: u32 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturator,

    #[error("generator is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("expected a linear form, got {0}")]
    NotLinear(String),

    #[error("non-isolated fiber singularities")]
    NonIsolated,

    #[error("atypical-value instability: fibre sums {0:?} never agreed across samples")]
    AtypicalInstability(Vec<u64>),

    #[error("chart normalization failed after {0} draws")]
    ChartNormalization(usize),

    #[error("hypothesis not satisfied: {0}")]
    Gate(String),

    #[error("deformation dropped the degree from {expected} to {got}")]
    DegreeDrop { expected: u32, got: String },

    #[error("inconsistent stratification data: {0}")]
    InconsistentStrata(String),

    #[error("defect {0} is outside the classification table (0..=3)")]
    OutsideTable(i64),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
