//! CLI error type and its exit-code mapping.

use std::fmt;

/// Failures surfaced to the user. Usage and domain problems exit with 2,
/// environment problems (I/O and the like) with 1.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, bad config, malformed input data, out-of-domain values.
    Usage(String),
    /// Reading or writing files failed.
    Io(String),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }

    pub(crate) fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub(crate) fn io(message: impl Into<String>) -> Self {
        CliError::Io(message.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<eqcyl_core::Error> for CliError {
    fn from(err: eqcyl_core::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}
