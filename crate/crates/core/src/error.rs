use thiserror::Error;

/// Errors produced by complex construction, linear algebra, and the
/// cohomology pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex label {label} out of range (vertex set has {m} labels)")]
    LabelOutOfRange { label: usize, m: usize },

    #[error("duplicate vertex {0} inside a face")]
    DuplicateVertex(usize),

    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(String),

    #[error("face has {got} vertices, expected {expected}")]
    FaceSizeMismatch { expected: usize, got: usize },

    #[error("complex is not pure: facet dimensions differ")]
    NotPure,

    #[error("face {face} lies in {count} facets; not a pseudomanifold with boundary")]
    NotPseudomanifold { face: String, count: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("facet {0} is not a free facet of the current ball")]
    FacetNotFree(String),

    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vertex count {m} exceeds the enumeration limit {limit}")]
    VertexLimitExceeded { m: usize, limit: usize },

    #[error("top Betti number is {got}, expected 1; no fundamental cohomology class")]
    TopBettiNotOne { got: usize },

    #[error("invalid coefficient selector: {0}")]
    InvalidCoefficients(String),

    #[error("complex cannot be serialized: vertex labels are not contiguous 1..=m")]
    NonContiguousUniverse,

    #[error("invalid complex JSON: {0}")]
    InvalidJson(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
