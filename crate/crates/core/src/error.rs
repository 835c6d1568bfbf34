use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} exceeds the supported maximum of {max}", max = crate::tolerance::MAX_DIM)]
    DimensionTooLarge(usize),

    #[error("matrix is not Hermitian (max deviation {deviation:e}, tolerance {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("trace is {trace} (tolerance {tolerance:e} around 1)")]
    TraceNotUnit { trace: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e}, tolerance {tolerance:e})")]
    NotPositive { min_eigenvalue: f64, tolerance: f64 },

    #[error("matrix is not unitary (max |U^dag U - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("operation requires a qubit on subsystem A, found dimA = {0}")]
    QubitRequired(usize),

    #[error("post-selection parameter alpha = {0} lies outside [0, 1]")]
    InvalidAlpha(f64),

    #[error("correlation coefficients give a state that is not positive semi-definite ({0})")]
    SimplexViolation(f64),

    #[error("rank {0} is outside 1..=4")]
    InvalidRank(usize),

    #[error("post-selection is trace orthogonal to the state (tr(P_f rho) = {0:e})")]
    TraceOrthogonal(f64),

    #[error("moment system is ill-conditioned (condition estimate {0:e})")]
    IllConditioned(f64),

    #[error("invalid observable: {0}")]
    InvalidObservable(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
