use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter tuple violates one of the required inequalities. The
    /// message names the inequality, e.g. "requires s+k-1 <= t".
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("letter {letter} is outside the alphabet 0..{alphabet_size}")]
    LetterOutOfRange { letter: u32, alphabet_size: u32 },

    #[error("words must contain at least one letter")]
    EmptyWord,

    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("could not parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{what} of {size} exceeds the limit of {limit}")]
    CapExceeded { what: &'static str, size: String, limit: u64 },

    #[error("precondition of {routine} violated: {detail}")]
    Precondition { routine: &'static str, detail: String },

    #[error("{routine} did not finish within {cap} steps")]
    StepCapExceeded { routine: &'static str, cap: usize },

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("poset error: {0}")]
    Poset(String),

    #[error("poset file line {line}: {reason}")]
    PosetSyntax { line: usize, reason: String },

    #[error("coloring is not up-closed: {lower} is colored 1 but {upper} above it is colored 0")]
    NotUpClosed { lower: String, upper: String },
}
