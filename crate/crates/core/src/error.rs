use thiserror::Error;

/// Position of a token or statement in the source text (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Position {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{pos}: lexical error: {message}")]
    Lexical { pos: Position, message: String },

    #[error("{pos}: unbalanced parentheses: {message}")]
    Unbalanced { pos: Position, message: String },

    #[error("{pos}: unexpected token: {message}")]
    UnexpectedToken { pos: Position, message: String },

    #[error("{pos}: statement is outside the rule fragment: {message}")]
    FragmentViolation { pos: Position, message: String },

    #[error("modal operator reached in a classical or here-and-there context")]
    ModalInClassicalContext,

    #[error("signature has {atoms} atoms but the enumeration cap is {cap} (raise it with --max-atoms or EPIVIEW_MAX_ATOMS)")]
    CapExceeded { atoms: usize, cap: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("invalid world view: {0}")]
    InvalidView(String),

    #[error("corpus error: {0}")]
    Corpus(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by malformed input text.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Lexical { .. }
                | Error::Unbalanced { .. }
                | Error::UnexpectedToken { .. }
                | Error::FragmentViolation { .. }
                | Error::InvalidView(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
