use thiserror::Error;

use crate::words::{Alphabet, Generator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("generator {generator} is outside alphabet {alphabet}")]
    GeneratorOutOfRange {
        generator: Generator,
        alphabet: Alphabet,
    },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("variable {0} has no image under the evaluation map")]
    UnassignedVariable(usize),

    #[error("expected {expected} coefficients, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("row {row} is not the Fox derivative vector of a single word")]
    NotADerivativeRow { row: usize },

    #[error("matrix is not invertible over the Laurent ring")]
    NotInvertible,

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
