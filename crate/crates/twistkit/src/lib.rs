//! Exact-arithmetic engine for the classification of Lagrangian subcategories
//! of the representation categories of (twisted) Drinfeld doubles of finite
//! groups, their modular data, dual groups, and categorical Morita classes.

pub mod atlas;
pub mod bichar;
pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod groups;
pub mod modular;
pub mod linalg;
pub mod scalars;

use thiserror::Error as ThisError;

/// Crate-wide error type. Parse errors map to CLI exit code 2, bound errors
/// to 3; invariant failures surface as `Invariant` and exit 1.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bound exceeded: {0}")]
    Bounds(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("invariant failure: {0}")]
    Invariant(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Error {
        Error::Parse(msg.into())
    }
    pub fn bounds(msg: impl Into<String>) -> Error {
        Error::Bounds(msg.into())
    }
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::Invalid(msg.into())
    }
    pub fn invariant(msg: impl Into<String>) -> Error {
        Error::Invariant(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Error {
        Error::Internal(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Error {
        Error::Unsupported(msg.into())
    }
}
