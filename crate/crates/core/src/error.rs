use thiserror::Error;

use crate::edge::EdgeSet;

/// Errors raised by the clutter engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank is undefined for the empty clutter")]
    RankOfEmptyClutter,

    #[error("deletion set {delete} and contraction set {contract} overlap")]
    OverlappingSets { delete: EdgeSet, contract: EdgeSet },

    #[error("resource limit exceeded: {what} (budget {budget})")]
    ResourceLimit { what: &'static str, budget: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("infeasible set cover instance: element {element} is not covered by any set")]
    Infeasible { element: u32 },

    #[error("clutter contains a {k}K2 minor")]
    NotInClass { k: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("oracle failure: {0}")]
    Oracle(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
