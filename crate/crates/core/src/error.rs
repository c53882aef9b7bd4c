use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable index X{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero ideal has no Jacobian ideal")]
    ZeroIdeal,
    #[error("form degree k={k} out of range 1..={max}")]
    FormDegreeOutOfRange { k: usize, max: usize },
    #[error("point index {index} out of range 1..={len}")]
    PointIndexOutOfRange { index: usize, len: usize },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid scheme: {0}")]
    InvalidScheme(String),
    #[error("scheme file line {line}: {message}")]
    SchemeFormat { line: usize, message: String },
    #[error("module rank/shift mismatch: {0}")]
    ShapeMismatch(String),
    #[error("Hilbert function is not certified")]
    Uncertified,
    #[error("Hilbert polynomial is not constant (Krull dimension {0})")]
    NotEventuallyConstant(usize),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
