use thiserror::Error;

use crate::Letter;

/// Errors produced by the word, verification and construction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet 1..={degree}")]
    LetterOutOfRange { letter: u32, degree: u8 },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u8, found: u8 },

    #[error("degree must be between 1 and {max}, got {degree}")]
    InvalidDegree { degree: usize, max: u8 },

    #[error("{what} requires degree at least {min}, got {degree}")]
    DegreeTooSmall {
        what: &'static str,
        degree: u8,
        min: u8,
    },

    #[error("{0} requires a non-empty word")]
    EmptyWord(&'static str),

    #[error("pattern of length {pattern} is longer than the cyclic word of length {word}")]
    PatternTooLong { pattern: usize, word: usize },

    #[error("{what} is limited to degree {max}, got degree {degree}")]
    Capacity {
        what: &'static str,
        degree: u8,
        max: u8,
    },

    #[error("word of length {actual} has the wrong length, expected {expected}")]
    WrongLength { expected: usize, actual: usize },

    #[error("{word} is not a universal Lyndon word: {reason}")]
    NotUlw { word: String, reason: String },

    #[error("{factor} is not a cyclic factor of {word}")]
    NotCyclicFactor { factor: String, word: String },

    #[error("invalid alphabet order: {0}")]
    InvalidOrder(String),

    #[error("invalid edge cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid lex-code: {0}")]
    InvalidLexCode(String),

    #[error("refinement step {step}: {message}")]
    Script { step: usize, message: String },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("script line {line}: {message}")]
    ScriptSyntax { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn letter(letter: Letter, degree: u8) -> Self {
        Error::LetterOutOfRange {
            letter: letter as u32,
            degree,
        }
    }
}
