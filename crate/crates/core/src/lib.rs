//! Finite topological spaces, digital planes, and the poset of digital
//! Jordan curves ordered by homotopy.

pub mod acceptance;
pub mod curve_space;
pub mod error;
pub mod exec;
pub mod homotopy;
pub mod jordan;
pub mod paths;
pub mod plane;
pub mod poset;

pub use curve_space::{build_poset, enumerate_curves, CurvePoset};
pub use error::{Error, Result};
pub use exec::Exec;
pub use homotopy::{Direction, Fence, Parameterization};
pub use jordan::{CurveRegions, JordanCurve};
pub use paths::{CotsPath, Distance};
pub use plane::{Coord, Cots, DigitalPlane, EndpointKind, PlaneSpec, PointKind, Topology};
pub use poset::{FiniteSpace, PointId, Subspace};
