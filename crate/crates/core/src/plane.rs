//! COTS and rectangular digital planes.
//!
//! Coordinates are `(column i, row j)` with the origin at the lower left.
//! Point ids are row-major: `id = j * width + i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{cots_space, FiniteSpace, PointId};

/// Lattice position `(i, j)`. Serializes as `[i, j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coord(pub i32, pub i32);

impl Coord {
    pub fn i(self) -> i32 {
        self.0
    }

    pub fn j(self) -> i32 {
        self.1
    }

    /// Chebyshev distance to `other`.
    pub fn chebyshev(self, other: Coord) -> u32 {
        (self.0 - other.0).unsigned_abs().max((self.1 - other.1).unsigned_abs())
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Open,
    Closed,
    Mixed,
}

impl PointKind {
    pub fn is_pure(self) -> bool {
        self != PointKind::Mixed
    }

    pub fn symbol(self) -> char {
        match self {
            PointKind::Open => 'O',
            PointKind::Closed => 'C',
            PointKind::Mixed => 'M',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Topology {
    #[default]
    Khalimsky,
    MarcusWyse,
}

impl std::str::FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "khalimsky" => Ok(Topology::Khalimsky),
            "marcus_wyse" | "marcus-wyse" => Ok(Topology::MarcusWyse),
            other => Err(Error::InvalidPlane(format!("unknown topology {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndpointKind {
    Open,
    Closed,
}

/// A finite connected ordered topological space `x_0 .. x_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cots {
    endpoint: EndpointKind,
    space: FiniteSpace,
}

impl Cots {
    pub fn new(length: usize, endpoint: EndpointKind) -> Result<Self> {
        if length < 2 {
            return Err(Error::CotsTooShort(length));
        }
        let parity = match endpoint {
            EndpointKind::Closed => 0,
            EndpointKind::Open => 1,
        };
        Ok(Self {
            endpoint,
            space: cots_space(length, parity),
        })
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn endpoint_kind(&self) -> EndpointKind {
        self.endpoint
    }

    pub fn is_closed(&self, k: usize) -> bool {
        k.is_multiple_of(2) == (self.endpoint == EndpointKind::Closed)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn into_space(self) -> FiniteSpace {
        self.space
    }
}

/// Everything needed to rebuild a plane; this is the plane JSON format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneSpec {
    pub width: usize,
    pub height: usize,
    pub topology: Topology,
    pub x_closed_parity: u8,
    pub y_closed_parity: u8,
    pub mw_closed_parity: u8,
}

impl PlaneSpec {
    /// Khalimsky plane with closed points at even coordinates.
    pub fn khalimsky(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            topology: Topology::Khalimsky,
            x_closed_parity: 0,
            y_closed_parity: 0,
            mw_closed_parity: 0,
        }
    }

    /// Khalimsky plane whose corner `(0, 0)` is open.
    pub fn khalimsky_open_corner(width: usize, height: usize) -> Self {
        Self::khalimsky(width, height).with_parities(1, 1)
    }

    pub fn marcus_wyse(width: usize, height: usize) -> Self {
        Self {
            topology: Topology::MarcusWyse,
            ..Self::khalimsky(width, height)
        }
    }

    pub fn with_parities(mut self, x: u8, y: u8) -> Self {
        self.x_closed_parity = x;
        self.y_closed_parity = y;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.width < 2 || self.height < 2 {
            return Err(Error::InvalidPlane(format!(
                "dimensions must be at least 2, got {}x{}",
                self.width, self.height
            )));
        }
        if self.width * self.height > 4096 {
            return Err(Error::InvalidPlane("more than 4096 points".into()));
        }
        for (name, p) in [
            ("x_closed_parity", self.x_closed_parity),
            ("y_closed_parity", self.y_closed_parity),
            ("mw_closed_parity", self.mw_closed_parity),
        ] {
            if p > 1 {
                return Err(Error::InvalidPlane(format!("{name} must be 0 or 1, got {p}")));
            }
        }
        Ok(())
    }

    /// The dual plane: every parity flipped.
    pub fn dual(&self) -> Self {
        Self {
            x_closed_parity: 1 - self.x_closed_parity,
            y_closed_parity: 1 - self.y_closed_parity,
            mw_closed_parity: 1 - self.mw_closed_parity,
            ..*self
        }
    }
}

/// A rectangular digital plane as a finite space with lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitalPlane {
    spec: PlaneSpec,
    space: FiniteSpace,
}

impl DigitalPlane {
    pub fn new(spec: PlaneSpec) -> Result<Self> {
        spec.validate()?;
        let space = match spec.topology {
            Topology::Khalimsky => {
                let x = cots_space(spec.width, spec.x_closed_parity as usize);
                let y = cots_space(spec.height, spec.y_closed_parity as usize);
                x.product(&y)
            }
            Topology::MarcusWyse => marcus_wyse_space(&spec),
        };
        Ok(Self { spec, space })
    }

    pub fn khalimsky(width: usize, height: usize) -> Result<Self> {
        Self::new(PlaneSpec::khalimsky(width, height))
    }

    pub fn spec(&self) -> &PlaneSpec {
        &self.spec
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn width(&self) -> usize {
        self.spec.width
    }

    pub fn height(&self) -> usize {
        self.spec.height
    }

    pub fn topology(&self) -> Topology {
        self.spec.topology
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn contains(&self, c: Coord) -> bool {
        c.0 >= 0 && c.1 >= 0 && (c.0 as usize) < self.spec.width && (c.1 as usize) < self.spec.height
    }

    pub fn id(&self, c: Coord) -> Result<PointId> {
        if self.contains(c) {
            Ok(c.1 as usize * self.spec.width + c.0 as usize)
        } else {
            Err(Error::OutOfBounds(c))
        }
    }

    #[inline]
    pub fn coord(&self, id: PointId) -> Coord {
        Coord((id % self.spec.width) as i32, (id / self.spec.width) as i32)
    }

    pub fn coords(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.len()).map(|id| self.coord(id))
    }

    pub fn ids(&self, coords: &[Coord]) -> Result<Vec<PointId>> {
        coords.iter().map(|&c| self.id(c)).collect()
    }

    pub fn leq(&self, a: Coord, b: Coord) -> Result<bool> {
        Ok(self.space.leq(self.id(a)?, self.id(b)?))
    }

    pub fn classify(&self, c: Coord) -> Result<PointKind> {
        self.id(c)?;
        Ok(self.kind_at(c))
    }

    pub fn kind(&self, id: PointId) -> PointKind {
        self.kind_at(self.coord(id))
    }

    fn kind_at(&self, c: Coord) -> PointKind {
        let s = &self.spec;
        match s.topology {
            Topology::Khalimsky => {
                let xc = (c.0 as u8 % 2) == s.x_closed_parity;
                let yc = (c.1 as u8 % 2) == s.y_closed_parity;
                match (xc, yc) {
                    (true, true) => PointKind::Closed,
                    (false, false) => PointKind::Open,
                    _ => PointKind::Mixed,
                }
            }
            Topology::MarcusWyse => {
                if ((c.0 + c.1) as u8 % 2) == s.mw_closed_parity {
                    PointKind::Closed
                } else {
                    PointKind::Open
                }
            }
        }
    }

    pub fn is_pure(&self, id: PointId) -> bool {
        self.kind(id).is_pure()
    }

    /// `A(c)` as coordinates, sorted.
    pub fn adjacency(&self, c: Coord) -> Result<Vec<Coord>> {
        let id = self.id(c)?;
        let mut out: Vec<Coord> = self.space.neighbors(id).iter().map(|&y| self.coord(y)).collect();
        out.sort();
        Ok(out)
    }

    pub fn on_raw_border(&self, c: Coord) -> bool {
        self.contains(c)
            && (c.0 == 0 || c.1 == 0 || c.0 as usize == self.spec.width - 1 || c.1 as usize == self.spec.height - 1)
    }

    /// Border points, clockwise from the origin.
    pub fn raw_border(&self) -> Vec<Coord> {
        let (w, h) = (self.spec.width as i32, self.spec.height as i32);
        let mut out = Vec::with_capacity(2 * (w + h) as usize);
        out.extend((0..h).map(|j| Coord(0, j)));
        out.extend((1..w).map(|i| Coord(i, h - 1)));
        out.extend((0..h - 1).rev().map(|j| Coord(w - 1, j)));
        out.extend((1..w - 1).rev().map(|i| Coord(i, 0)));
        out
    }

    pub fn corners(&self) -> [Coord; 4] {
        let (w, h) = (self.spec.width as i32 - 1, self.spec.height as i32 - 1);
        [Coord(0, 0), Coord(0, h), Coord(w, h), Coord(w, 0)]
    }

    /// The raw border with every mixed corner removed, clockwise.
    pub fn adjusted_border(&self) -> Result<Vec<Coord>> {
        if self.spec.topology != Topology::Khalimsky {
            return Err(Error::NotKhalimsky);
        }
        if self.spec.width < 3 || self.spec.height < 3 {
            return Err(Error::InvalidPlane(
                "adjusted border needs both dimensions at least 3".into(),
            ));
        }
        let corners = self.corners();
        Ok(self
            .raw_border()
            .into_iter()
            .filter(|c| !(corners.contains(c) && self.kind_at(*c) == PointKind::Mixed))
            .collect())
    }

    /// Points off the raw border: the centres whose adjacency sets fit.
    pub fn inner_points(&self) -> Vec<PointId> {
        (0..self.len())
            .filter(|&id| !self.on_raw_border(self.coord(id)))
            .collect()
    }

    pub fn dual(&self) -> Result<Self> {
        Self::new(self.spec.dual())
    }

    /// Classification grid, top row first (`C`, `O`, `M`).
    pub fn ascii_grid(&self) -> String {
        let mut s = String::new();
        for j in (0..self.spec.height as i32).rev() {
            let row: String = (0..self.spec.width as i32)
                .map(|i| self.kind_at(Coord(i, j)).symbol())
                .collect();
            s.push_str(&row);
            s.push('\n');
        }
        s
    }
}

fn marcus_wyse_space(spec: &PlaneSpec) -> FiniteSpace {
    let (w, h) = (spec.width as i32, spec.height as i32);
    let mut pairs = Vec::new();
    for j in 0..h {
        for i in 0..w {
            if ((i + j) as u8 % 2) != spec.mw_closed_parity {
                continue;
            }
            let closed = (j * w + i) as usize;
            for (di, dj) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (a, b) = (i + di, j + dj);
                if a >= 0 && b >= 0 && a < w && b < h {
                    pairs.push(((b * w + a) as usize, closed));
                }
            }
        }
    }
    FiniteSpace::from_pairs((w * h) as usize, pairs).expect("height-one order")
}
