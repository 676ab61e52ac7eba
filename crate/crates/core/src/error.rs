use std::fmt;

use thiserror::Error;

/// A proof node that does not instantiate its rule.
///
/// `path` lists premise indices from the root down to the offending node.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct CheckError {
    pub path: Vec<usize>,
    pub message: String,
}

impl CheckError {
    pub(crate) fn new(message: impl Into<String>) -> CheckError {
        CheckError {
            path: Vec::new(),
            message: message.into(),
        }
    }

    pub(crate) fn under(mut self, index: usize) -> CheckError {
        self.path.insert(0, index);
        self
    }
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "at root: {}", self.message)
        } else {
            let p: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
            write!(f, "at node {}: {}", p.join("."), self.message)
        }
    }
}

/// Errors from proof constructors and transformers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
