use thiserror::Error;

use crate::plane::Coord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown point id {0}")]
    UnknownPoint(usize),
    #[error("point ({0}) lies outside the plane")]
    OutOfBounds(Coord),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("COTS length must be at least 2, got {0}")]
    CotsTooShort(usize),
    #[error("invalid plane: {0}")]
    InvalidPlane(String),
    #[error("operation requires a Khalimsky plane")]
    NotKhalimsky,
    #[error("plane {width}x{height} exceeds the enumeration cap of {cap}x{cap}")]
    PlaneTooLarge { width: usize, height: usize, cap: usize },
    #[error("paths do not share an endpoint")]
    EndpointMismatch,
    #[error("set must be nonempty")]
    EmptySet,
    #[error("not a Jordan curve: {0}")]
    NotJordanCurve(String),
    #[error("curves belong to different planes")]
    PlaneMismatch,
    #[error("adjacency set of ({0}) is not contained in the plane")]
    AdjacencyOutsidePlane(Coord),
    #[error("basepoint ({0}) is not a pure interior point")]
    BadBasepoint(Coord),
    #[error("points ({0}) and ({1}) are not connected")]
    Disconnected(Coord, Coord),
    #[error("more than {0} geodesics")]
    TooManyGeodesics(usize),
    #[error("grid size {0} outside the supported range 0..=5")]
    GridTooLarge(usize),
    #[error("no minimal Jordan curves fit in this plane")]
    EmptyMinimalSpace,
    /// A post-condition of a curve move failed. This is a bug, not bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
