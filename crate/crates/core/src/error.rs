use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {rows}x{cols} exceeds the configured limit {limit}")]
    DimensionLimit {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("state is not normalized: norm^2 = {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("matrix is not Hermitian: max |M - M^dag| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace {trace} is not 1")]
    TraceNotOne { trace: f64 },

    #[error("register label error: {0}")]
    Label(String),

    #[error("numerical PSD violation: value {value:e} below tolerance")]
    PsdViolation { value: f64 },

    #[error("gate arity error: {0}")]
    Arity(String),

    #[error("invalid hyperedge: {0}")]
    Hyperedge(String),

    #[error("hypergraph index {0} is not in 1..=5")]
    HypergraphIndex(usize),

    #[error("invalid channel parameterization: {0}")]
    Parameter(String),

    #[error("singular channel parameters: {0}")]
    SingularParameter(String),

    #[error("Kraus completeness violated: max |sum K^dag K - {target} I| = {deviation:e}")]
    Completeness { target: f64, deviation: f64 },

    #[error("lifting requires a single-site family summing to I/3, deviation {deviation:e}")]
    LiftingPrecondition { deviation: f64 },

    #[error("unknown channel name '{0}'")]
    UnknownChannel(String),

    #[error("no closed form for {0}")]
    UnsupportedCombination(String),

    #[error("parameter outside formula domain: {0}")]
    Domain(String),
}
