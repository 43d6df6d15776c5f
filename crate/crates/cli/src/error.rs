use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{path}: {message}")]
    Field { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Curve(#[from] ratcubic::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Curve(_) => EXIT_DEGENERATE,
            _ => EXIT_INPUT,
        }
    }
}

/// Input errors win over degenerate curves.
pub fn combine_exit(a: i32, b: i32) -> i32 {
    match (a, b) {
        (EXIT_INPUT, _) | (_, EXIT_INPUT) => EXIT_INPUT,
        (EXIT_DEGENERATE, _) | (_, EXIT_DEGENERATE) => EXIT_DEGENERATE,
        _ => EXIT_OK,
    }
}
