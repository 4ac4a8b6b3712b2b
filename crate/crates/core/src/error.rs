use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (edge list or graph6).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An automorphism group grew past the configured cap; `found` is the
    /// partial element count at the point the search stopped.
    #[error("automorphism group too large: over {found} elements (cap {cap})")]
    GroupTooLarge { cap: usize, found: usize },

    /// An enumeration would exceed the coloring budget.
    #[error("enumeration budget exceeded: {needed} colorings > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    /// A counting identity that must hold was violated; this always
    /// indicates a bug upstream, never bad user input.
    #[error("internal counting error: {0}")]
    Internal(String),

    /// Caller-supplied parameters are invalid (bad family spec, bad subset index, ...).
    #[error("invalid argument: {0}")]
    InvalidArg(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
