use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A prefix longer than the configured materialization cap was requested.
    #[error("requested prefix of {requested} symbols exceeds the materialization cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("prefix of length {border_len} is not a border of a word of length {word_len}")]
    InvalidBorder { border_len: usize, word_len: usize },

    /// Neither branch of the power/anti-power dichotomy was certified.
    #[error("scan budget exhausted: no certificate found for m <= {budget}")]
    BudgetExhausted { budget: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}
