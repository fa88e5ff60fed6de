//! Crate-wide error type.
//!
//! Every fallible operation in the library reports one of these variants.
//! Each variant carries a stable kebab-case code (see [`Error::code`]) so
//! downstream tools (the CLI in particular) can emit structured error
//! records without string-matching on display text.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The quiver contains a directed cycle, so its path set is infinite.
    #[error("quiver contains a directed cycle through vertex `{vertex}`")]
    CycleDetected { vertex: String },

    /// A relation violates admissibility: a term is shorter than two arrows,
    /// or the terms of one relation are not parallel paths.
    #[error("inadmissible relation: {reason}")]
    InadmissibleRelation { reason: String },

    /// A vertex label was not declared in the quiver.
    #[error("unknown vertex `{vertex}`")]
    UnknownVertex { vertex: String },

    /// An arrow label was not declared in the quiver.
    #[error("unknown arrow `{arrow}`")]
    UnknownArrow { arrow: String },

    /// Two objects that must live over the same algebra do not.
    #[error("objects live over different algebras")]
    AlgebraMismatch,

    /// Matrix or representation data has inconsistent dimensions.
    #[error("dimension mismatch: {reason}")]
    Mismatch { reason: String },

    /// Representation data does not satisfy the algebra's relations.
    #[error("matrices do not satisfy the relations: {reason}")]
    InvalidRepresentation { reason: String },

    /// A direct-sum splitting could not be found and the endomorphism
    /// algebra modulo its radical has dimension > 1 over the rationals,
    /// so indecomposability cannot be certified either way.
    #[error("cannot decide decomposability: End/rad has dimension {dim} over Q")]
    UndecidableDecomposition { dim: usize },

    /// The operation requires a non-projective object.
    #[error("object is projective")]
    IsProjective,

    /// The operation requires an indecomposable object.
    #[error("object is not indecomposable")]
    NotIndecomposable,

    /// The operation requires a projective object.
    #[error("object is not projective: {reason}")]
    NotProjective { reason: String },

    /// The operation requires an injective object.
    #[error("object is not injective: {reason}")]
    NotInjective { reason: String },

    /// An iterative construction exceeded its configured dimension cap.
    #[error("dimension bound {cap} exceeded: {reason}")]
    BoundExceeded { cap: usize, reason: String },

    /// The requested mesh window cannot accommodate the computation.
    #[error("window too small: {reason}")]
    WindowTooSmall { reason: String },

    /// A mesh query refers to a vertex outside the usable window.
    #[error("vertex ({i}, {j}) is outside the usable window")]
    OutOfWindow { i: i64, j: i64 },

    /// A build-time self-check failed; the constructed object is unusable.
    #[error("validation failure: {reason}")]
    ValidationFailure { reason: String },

    /// A minimized precover failed the strong-cover test, so no functor
    /// can be read off from it.
    #[error("cover is not strong: {reason}")]
    CoverNotStrong { reason: String },

    /// An ambient object has no counterpart under the given realization.
    #[error("object is not realized: {reason}")]
    NotRealized { reason: String },

    /// Input data could not be parsed.
    #[error("malformed input: {reason}")]
    Malformed { reason: String },
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::CycleDetected { .. } => "cycle-detected",
            Error::InadmissibleRelation { .. } => "inadmissible-relation",
            Error::UnknownVertex { .. } => "unknown-vertex",
            Error::UnknownArrow { .. } => "unknown-arrow",
            Error::AlgebraMismatch => "algebra-mismatch",
            Error::Mismatch { .. } => "mismatch",
            Error::InvalidRepresentation { .. } => "invalid-representation",
            Error::UndecidableDecomposition { .. } => "undecidable-decomposition",
            Error::IsProjective => "is-projective",
            Error::NotIndecomposable => "not-indecomposable",
            Error::NotProjective { .. } => "not-projective",
            Error::NotInjective { .. } => "not-injective",
            Error::BoundExceeded { .. } => "bound-exceeded",
            Error::WindowTooSmall { .. } => "window-too-small",
            Error::OutOfWindow { .. } => "out-of-window",
            Error::ValidationFailure { .. } => "validation-failure",
            Error::CoverNotStrong { .. } => "cover-not-strong",
            Error::NotRealized { .. } => "not-realized",
            Error::Malformed { .. } => "malformed-input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
