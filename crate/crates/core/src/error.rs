use crate::model::{Bay, Container};

/// Errors raised by the library.
///
/// Solution validation is not an error path: [`crate::model::validate`]
/// reports violations as data.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("container {container} is out of range 1..={n}")]
    ContainerOutOfRange { container: Container, n: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("dead end: no stack can receive container {container} (stuck configuration: {bay})")]
    DeadEnd { container: Container, bay: Bay },

    #[error("rebuilt solution is inconsistent: {0}")]
    Inconsistent(String),

    #[error("{what} is too large: {size} exceeds the guard of {limit}")]
    Guard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
