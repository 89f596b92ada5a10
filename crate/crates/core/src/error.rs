use thiserror::Error;

use crate::diagram::{ParseError, SignError, ValidationError};
use crate::faces::{AdmissibilityError, FaceError};
use crate::linalg::LinalgError;

/// Any failure in the pipeline, grouped by the CLI exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Face(#[from] FaceError),
    #[error(transparent)]
    Admissibility(#[from] AdmissibilityError),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Sign(#[from] SignError),
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),
    #[error("invalid catalog parameter: {0}")]
    CatalogParameter(String),
}

impl Error {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Validation(_) | Error::Face(_) => 3,
            Error::Admissibility(_) => 4,
            Error::Consistency(_) | Error::Linalg(_) | Error::Sign(_) | Error::NotAlternating => 5,
            Error::UnknownCatalogKey(_) | Error::CatalogParameter(_) => 1,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(e) => e.code(),
            Error::Validation(e) => e.code(),
            Error::Face(e) => e.code(),
            Error::Admissibility(e) => e.code(),
            Error::Consistency(_) => "internal.consistency",
            Error::Linalg(e) => e.code(),
            Error::Sign(_) => "internal.sign-mode",
            Error::NotAlternating => "internal.not-alternating",
            Error::UnknownCatalogKey(_) => "catalog.unknown-key",
            Error::CatalogParameter(_) => "catalog.parameter",
        }
    }
}
