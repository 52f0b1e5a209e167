//! Process-level error classification: every failure maps to an exit code.

use std::fmt;

/// Exit codes: 0 success, 1 I/O, 2 usage/parameters, 3 decoding/decryption.
#[derive(Debug)]
pub enum AppError {
    Io(String),
    Usage(String),
    Decrypt(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Io(_) => 1,
            AppError::Usage(_) => 2,
            AppError::Decrypt(_) => 3,
        }
    }

    pub fn io(context: &str, e: std::io::Error) -> AppError {
        AppError::Io(format!("{context}: {e}"))
    }

    pub fn usage(msg: impl Into<String>) -> AppError {
        AppError::Usage(msg.into())
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Io(msg) => write!(f, "i/o error: {msg}"),
            AppError::Usage(msg) => write!(f, "invalid usage: {msg}"),
            AppError::Decrypt(msg) => write!(f, "decryption failure: {msg}"),
        }
    }
}

impl From<igoppa::mceliece::CryptoError> for AppError {
    fn from(e: igoppa::mceliece::CryptoError) -> Self {
        use igoppa::mceliece::CryptoError::*;
        match e {
            DecryptFailed(stage) => AppError::Decrypt(format!("decoder stage {stage}")),
            other => AppError::Usage(other.to_string()),
        }
    }
}

impl From<igoppa::goppa::CodeError> for AppError {
    fn from(e: igoppa::goppa::CodeError) -> Self {
        AppError::Usage(e.to_string())
    }
}

impl From<igoppa::field::FieldError> for AppError {
    fn from(e: igoppa::field::FieldError) -> Self {
        AppError::Usage(e.to_string())
    }
}

impl From<igoppa::sim::SimError> for AppError {
    fn from(e: igoppa::sim::SimError) -> Self {
        AppError::Usage(e.to_string())
    }
}
