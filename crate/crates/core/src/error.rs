use thiserror::Error;

use crate::arith::BigRat;

pub type QResult<T> = Result<T, QError>;

#[derive(Debug, Clone, Error)]
pub enum QError {
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("non-generic specialization: {0}")]
    Genericity(String),

    #[error("coefficient of q^{exponent} requested but the series is only known below q^{order}")]
    OrderExceeded { exponent: BigRat, order: BigRat },

    #[error("unsupported argument: {0}")]
    UnsupportedArgument(String),

    #[error("unsupported substitution: {0}")]
    UnsupportedSubstitution(String),

    #[error("could not reach the requested precision: {0}")]
    PrecisionLoss(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("{source}\n  in {path}")]
    Context { path: String, source: Box<QError> },
}

impl QError {
    /// Wraps the error with one more step of expression path. A step equal
    /// to the innermost recorded one is dropped.
    pub fn context(self, path: impl Into<String>) -> QError {
        let path = path.into();
        if matches!(&self, QError::Context { path: p, .. } if *p == path) {
            return self;
        }
        QError::Context {
            path,
            source: Box::new(self),
        }
    }

    /// The innermost error, with all expression-path context stripped.
    pub fn root(&self) -> &QError {
        match self {
            QError::Context { source, .. } => source.root(),
            e => e,
        }
    }
}
