//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A distance factor in the denominator of a cross-ratio vanished
    /// without a compensating zero in the numerator.
    #[error("cross-ratio is undefined for this argument configuration")]
    DegenerateCrossRatio,
    #[error("points must be distinct")]
    CoincidentPoints,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("operation supports dimension {expected}, got {got}")]
    UnsupportedDimension { expected: usize, got: usize },
    #[error("ratio must lie strictly between 0 and 1")]
    RadiusOutOfRange,
    #[error("radius must be positive")]
    DegenerateRadius,
    #[error("point lies on the domain boundary")]
    PointOnBoundary,
    #[error("point lies outside the domain")]
    PointOutsideDomain,
    #[error("domain boundary has fewer than two points")]
    BoundaryTooSmall,
    #[error("boundary sampler produced too few points")]
    SamplerExhausted,
    #[error("parameters out of range: {0}")]
    InadmissibleParameters(String),
    #[error("bracket endpoints do not straddle the convexity transition")]
    BracketNotStraddling,
    #[error("no interior point found within the sampling budget")]
    EmptyRegionSampled,
    #[error("center is not a member of the region")]
    CenterOutsideRegion,
    #[error("no admissible root for the boundary profile")]
    NoRootInRange,
    #[error("no boundary point found on the segment")]
    NoBoundaryOnSegment,
    #[error("operation is not supported on this domain")]
    UnsupportedDomain,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("duplicate puncture at index {0}")]
    DuplicatePuncture(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
