use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} out of range for d = {nvars}")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("variable count must be at least 1")]
    NoVariables,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("determinant requested for a non-square {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-finite floating point input")]
    NonFinite,
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Two-sided ideal membership is only decided for homogeneous generators.
    #[error("generator {index} is not homogeneous; general two-sided ideal membership is refused")]
    NonHomogeneous { index: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("malformed data: {0}")]
    Format(String),
}
