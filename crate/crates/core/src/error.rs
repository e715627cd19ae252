use thiserror::Error;

/// Errors produced by the plactic library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be between 1 and {max}, got {rank}")]
    InvalidRank { rank: usize, max: usize },

    #[error("letter {letter} is outside the alphabet 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("`{0}` is not a column (letters must strictly decrease)")]
    NotAColumn(String),

    #[error("not a tableau: {0}")]
    NotATableau(String),

    #[error("resource limit exceeded: {what} went past {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("rule {rule} does not decrease under the word order")]
    TerminationViolation { rule: String },

    #[error("synchronization needed a buffer longer than {max_delay}")]
    DelayExceeded { max_delay: usize },

    #[error("word {0} is not a normal form in the language L")]
    NotInL(String),

    #[error("normal form check failed: {0}")]
    NotNormal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
