use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StautError {
    #[error("cannot compose `{f}` with `{g}`: codomain {left} differs from domain {right}")]
    Compose { f: String, g: String, left: String, right: String },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("size out of range: {0}")]
    Size(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("bounded universe: {0}")]
    BoundedUniverse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown builtin `{name}`; available: {available}")]
    UnknownBuiltin { name: String, available: String },
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
}

pub type Result<T> = std::result::Result<T, StautError>;
