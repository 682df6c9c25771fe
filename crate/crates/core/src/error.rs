use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` references undeclared vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("dimension vector has {got} entries but the quiver has {expected} vertices")]
    DimensionLength { expected: usize, got: usize },
    #[error("dimension vector has empty support")]
    EmptySupport,
    #[error("unsupported: dimension vector is not thin (entry {value} at vertex `{vertex}`); only 0/1 dimension vectors are analyzed")]
    NotThin { vertex: String, value: u64 },
    #[error("unsupported: dimension vector is not sincere; restrict to its support first")]
    NotSincere,
    #[error("too many vertices ({0}); subset enumeration supports at most {max}", max = crate::quiver::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("character has {got} entries but the quiver has {expected} vertices")]
    CharacterLength { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("arrangement has {count} hyperplanes; the exhaustive scan supports at most {max}, use the incremental enumerator")]
    TooManyHyperplanes { count: usize, max: usize },
    #[error("degenerate slice: {0}")]
    DegenerateSlice(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector is not in the span of the slice (p, u1, u2)")]
    NotInSliceSpan,
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("character does not lie in d^perp: pairing with d is {pairing}")]
    NotInPerp { pairing: i64 },
    #[error("internal inconsistency: witness of {chamber} lies on the wall of subdimension class {class}")]
    WitnessOnWall { chamber: String, class: usize },
    #[error("inconsistent Picard inputs: formula gives {0}")]
    NegativePicard(i64),
    #[error("chamber {0} is not G-ample")]
    NotGAmple(String),
}

pub type Result<T, E = AnalysisError> = std::result::Result<T, E>;
