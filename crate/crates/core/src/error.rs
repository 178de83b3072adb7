use std::io;

use thiserror::Error;

/// Errors raised by the workbench.
///
/// Negative verdicts (a semiring that is not simple, a condition that fails)
/// are never errors; they are carried in the returned reports. Errors are
/// reserved for malformed input, unmet preconditions and size limits.
#[derive(Debug, Error)]
pub enum Error {
    /// Tables or files that do not describe a well-formed structure.
    #[error("malformed input: {0}")]
    Input(String),

    /// Tables that are well formed but violate a semiring axiom.
    #[error("axiom `{axiom}` fails at ({}, {}, {})", witness.0, witness.1, witness.2)]
    Axiom {
        axiom: &'static str,
        witness: (String, String, String),
    },

    #[error("addition is not idempotent: {element} + {element} != {element}")]
    NotAdditivelyIdempotent { element: String },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A materialization would exceed the configured element bound.
    #[error("{what} would have {size} elements, above the bound {bound}")]
    Size { what: String, size: u128, bound: usize },

    /// A construction or witness search whose hypothesis is not met.
    #[error("condition `{condition}` fails: {detail}")]
    Condition { condition: &'static str, detail: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("{context}: {source}")]
    Json {
        context: String,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn condition(condition: &'static str, detail: impl Into<String>) -> Self {
        Error::Condition {
            condition,
            detail: detail.into(),
        }
    }
}
