use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("point has {got} coordinates, ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },

    #[error("cannot shrink ring to {requested} variables: support uses variable {used}")]
    ShrinkBelowSupport { requested: usize, used: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("{what} = {value} is out of range ({allowed})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        allowed: &'static str,
    },

    #[error("invalid strength decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("malformed matrix: {0}")]
    Shape(String),

    #[error("exact determinant refused for rank {rank} (cap {cap}); use the randomized check")]
    RankCap { rank: usize, cap: usize },

    #[error("all {attempts} sampled points were zeros of f")]
    ResampleExhausted { attempts: usize },

    #[error("determinant is not a scalar multiple of a power of f")]
    NotPowerOfF,

    #[error("search space of {size_log2} bits exceeds the budget of {budget_log2} bits")]
    SearchBudget { size_log2: u32, budget_log2: u32 },

    #[error("search precondition violated: {0}")]
    SearchPrecondition(String),

    #[error("operation needs characteristic different from 2")]
    Characteristic2,

    #[error("polynomial must be homogeneous of degree at least {min}")]
    DegreeTooLow { min: u32 },

    #[error("the polynomial is zero")]
    ZeroPolynomial,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("coefficient {0} is not invertible in the field")]
    NotInvertible(String),

    #[error("unknown field '{0}' (expected Q or Fp:<p>)")]
    UnknownField(String),

    #[error("document error: {0}")]
    Document(String),
}
