use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count must be at least 2, got {0}")]
    StrandCount(usize),

    #[error("letter {letter} is out of range 1..={max}")]
    LetterOutOfRange { letter: usize, max: usize },

    #[error("cannot parse token {0:?} as a positive integer")]
    BadToken(String),

    #[error("not a permutation of 1..={n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("strand counts differ: permutation has {perm}, braid word has {word}")]
    StrandMismatch { perm: usize, word: usize },

    #[error("empty variety: no reduced word of u is a subword of beta")]
    EmptyVariety,

    #[error("index {index} is not a mutable vertex (m = {mutable})")]
    NotMutable { index: usize, mutable: usize },

    #[error("unknown film/vertex id {0}")]
    UnknownVertex(usize),

    #[error("term budget of {0} exceeded")]
    TermBudget(usize),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// Integrality broken where the construction guarantees integers.
    #[error("integrality violation: {0}")]
    Integrality(String),

    /// Determinant other than the predicted sign.
    #[error("determinant violation: expected {expected}, got {actual}")]
    Determinant { expected: i64, actual: i128 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that indicate an engine bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Integrality(_)
                | Error::Determinant { .. }
                | Error::Overflow(_)
                | Error::Invariant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
