use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range user input (type strings, node sets, parameters).
    #[error("invalid input: {0}")]
    Input(String),
    /// An internal invariant failed; indicates a construction bug or a non-finite input.
    #[error("structural error: {0}")]
    Structural(String),
    /// A checked mathematical identity did not hold.
    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
