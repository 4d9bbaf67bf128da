//! File format and report plumbing for the `nlk` binary.
//!
//! Algebras travel as UTF-8 JSON with every scalar a string, so exactness
//! survives any JSON implementation. Emission is deterministic: brackets in
//! sorted tuple order, value maps in numeric index order, scalars reduced.

pub mod format;
pub mod vectors;

use std::fmt;

/// CLI failures, split by exit code: mathematical violations exit 1,
/// parse/IO problems exit 2.
#[derive(Debug)]
pub enum CliError {
    /// A mathematical precondition failed (exit code 1).
    Math(String),
    /// The input could not be read or parsed (exit code 2).
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            CliError::Parse(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Math(m) | CliError::Parse(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message())
    }
}

impl From<nlk_core::Error> for CliError {
    fn from(e: nlk_core::Error) -> Self {
        use nlk_core::Error::*;
        match e {
            ZeroDenominator | ScalarSyntax(_) | BadTuple(_) | DimensionMismatch(_) => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}
