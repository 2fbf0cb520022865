use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {col}: {message}")]
    Syntax { col: usize, message: String },

    #[error("unknown identifier `{name}` at column {col}")]
    UnknownIdentifier { name: String, col: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division by the zero polynomial at column {col}")]
    ZeroDivisor { col: usize },

    #[error("chart mismatch: {0}")]
    ChartMismatch(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("metric is degenerate (determinant vanishes identically)")]
    DegenerateMetric,

    #[error("induced metric has a radical of dimension {0}, expected 1")]
    RadicalDimension(usize),

    #[error("not tangent: {0}")]
    NotTangent(String),

    #[error("auxiliary field Z is unusable: g(Z, E) vanishes identically")]
    UnusableAuxiliary,

    #[error("no auxiliary field Z found among the coordinate fields")]
    NoAuxiliary,

    #[error("hypersurface is not characteristic: {0}")]
    NotCharacteristic(String),

    #[error(
        "dimension obstruction: 2n + r = {dim} with r = {r} gives n = {n}, \
         but a characteristic lightlike hypersurface needs n >= 2 \
         (E, N and phi E must be linearly independent)"
    )]
    DimensionObstruction { dim: usize, r: usize, n: i64 },

    #[error("screen distribution is degenerate: {0}")]
    DegenerateScreen(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("{path}:{line}:{col}: {message}")]
    Manifest { path: String, line: usize, col: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}
