//! Fences, arcs, and the path metric.
//!
//! Paths are sequences of point ids in some [`FiniteSpace`]. Distances are
//! taken inside a [`Subspace`], so `d_A` and `d_X` share one code path.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::{FiniteSpace, PointId, Subspace};

/// Upper bound on [`geodesics`] output.
pub const GEODESIC_CAP: usize = 100_000;

/// A continuous image of a COTS: consecutive points adjacent or equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CotsPath(Vec<PointId>);

impl CotsPath {
    pub fn new(space: &FiniteSpace, points: Vec<PointId>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        for &p in &points {
            if p >= space.len() {
                return Err(Error::UnknownPoint(p));
            }
        }
        if let Some(w) = points.windows(2).find(|w| !space.comparable(w[0], w[1])) {
            return Err(Error::NotPartialOrder(format!(
                "consecutive points {} and {} are not comparable",
                w[0], w[1]
            )));
        }
        Ok(Self(points))
    }

    pub fn points(&self) -> &[PointId] {
        &self.0
    }

    pub fn into_points(self) -> Vec<PointId> {
        self.0
    }

    pub fn first(&self) -> PointId {
        self.0[0]
    }

    pub fn last(&self) -> PointId {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

/// True iff the points are distinct, consecutive points are comparable and
/// no other pair is. A single point qualifies.
pub fn is_cots_arc(space: &FiniteSpace, points: &[PointId]) -> bool {
    if points.is_empty() || points.iter().any(|&p| p >= space.len()) {
        return false;
    }
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            let (x, y) = (points[a], points[b]);
            if x == y || space.comparable(x, y) != (b == a + 1) {
                return false;
            }
        }
    }
    true
}

/// Joins two paths sharing `last(p1) == first(p2)`.
pub fn concat(p1: &CotsPath, p2: &CotsPath) -> Result<CotsPath> {
    if p1.last() != p2.first() {
        return Err(Error::EndpointMismatch);
    }
    let mut pts = p1.0.clone();
    pts.extend_from_slice(&p2.0[1..]);
    Ok(CotsPath(pts))
}

/// Loop removal. For each `i` in increasing order, jump from `c_i` to the
/// last later point that equals or touches it.
///
/// Post: an arc with the same endpoints whose points are a subset of `path`.
pub fn extract_arc(space: &FiniteSpace, path: &CotsPath) -> CotsPath {
    let mut pts = path.0.clone();
    let mut i = 0;
    while i < pts.len() {
        let ci = pts[i];
        let hit = (i + 1..pts.len())
            .rev()
            .find(|&j| pts[j] == ci || space.comparable(pts[j], ci));
        if let Some(j) = hit {
            let cut_end = if pts[j] == ci { j + 1 } else { j };
            pts.drain(i + 1..cut_end);
        }
        i += 1;
    }
    CotsPath(pts)
}

/// Path-metric value; `Unreachable` sorts above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// Serialized as an integer or the string `"inf"`.
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u32(*d),
            Distance::Unreachable => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u32),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Distance::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(Distance::Unreachable),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad distance {s:?}"))),
        }
    }
}

fn check_member(sub: &Subspace<'_>, x: PointId) -> Result<()> {
    if sub.contains(x) {
        Ok(())
    } else {
        Err(Error::UnknownPoint(x))
    }
}

/// Breadth-first levels from `x`, indexed by parent id. `None` outside the
/// subspace or unreachable.
pub fn bfs_levels(sub: &Subspace<'_>, x: PointId) -> Result<Vec<Option<u32>>> {
    check_member(sub, x)?;
    let mut dist = vec![None; sub.parent().len()];
    dist[x] = Some(0);
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued points have a level");
        for v in sub.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

fn level(d: Option<u32>) -> Distance {
    d.map_or(Distance::Unreachable, Distance::Finite)
}

pub fn distance(sub: &Subspace<'_>, x: PointId, y: PointId) -> Result<Distance> {
    check_member(sub, y)?;
    Ok(level(bfs_levels(sub, x)?[y]))
}

/// `max` over `A x B` of the pointwise distance.
pub fn set_distance(sub: &Subspace<'_>, a: &[PointId], b: &[PointId]) -> Result<Distance> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    for &y in b {
        check_member(sub, y)?;
    }
    let mut worst = Distance::Finite(0);
    for &x in a {
        let lv = bfs_levels(sub, x)?;
        for &y in b {
            worst = worst.max(level(lv[y]));
        }
    }
    Ok(worst)
}

/// Members at distance exactly `n` from `x`.
pub fn sphere(sub: &Subspace<'_>, x: PointId, n: u32) -> Result<Vec<PointId>> {
    let lv = bfs_levels(sub, x)?;
    Ok(sub.members().iter().copied().filter(|&y| lv[y] == Some(n)).collect())
}

/// Members at distance at most `n` from `x`.
pub fn disk(sub: &Subspace<'_>, x: PointId, n: u32) -> Result<Vec<PointId>> {
    let lv = bfs_levels(sub, x)?;
    Ok(sub
        .members()
        .iter()
        .copied()
        .filter(|&y| lv[y].is_some_and(|d| d <= n))
        .collect())
}

/// Largest pairwise distance; `Finite(0)` for an empty subspace.
pub fn diameter(sub: &Subspace<'_>) -> Distance {
    let mut worst = Distance::Finite(0);
    for &x in sub.members() {
        let lv = bfs_levels(sub, x).expect("members are valid");
        for &y in sub.members() {
            worst = worst.max(level(lv[y]));
        }
    }
    worst
}

/// Every shortest arc from `x` to `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Geodesics {
    pub distance: Distance,
    pub arcs: Vec<Vec<PointId>>,
}

/// Enumerates all shortest fences `x -> y`. Each is chordless, hence an arc.
pub fn geodesics(sub: &Subspace<'_>, x: PointId, y: PointId) -> Result<Geodesics> {
    let from_x = bfs_levels(sub, x)?;
    let to_y = bfs_levels(sub, y)?;
    let Some(total) = from_x[y] else {
        return Ok(Geodesics {
            distance: Distance::Unreachable,
            arcs: Vec::new(),
        });
    };
    let on_geodesic = |v: PointId| matches!((from_x[v], to_y[v]), (Some(a), Some(b)) if a + b == total);
    let on_geodesic = &on_geodesic;
    let from_x_ref = &from_x;
    let step = move |u: PointId| {
        let from_x = from_x_ref;
        let du = from_x[u].expect("on geodesic");
        sub.neighbors(u)
            .filter(move |&v| from_x[v] == Some(du + 1) && on_geodesic(v))
    };

    // Count first so an oversized request fails before allocating.
    let mut order: Vec<PointId> = sub.members().iter().copied().filter(|&v| on_geodesic(v)).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(from_x[v]));
    let mut count = vec![0u64; sub.parent().len()];
    for &u in &order {
        count[u] = if u == y {
            1
        } else {
            step(u).map(|v| count[v]).fold(0u64, |a, b| a.saturating_add(b))
        };
    }
    if count[x] > GEODESIC_CAP as u64 {
        return Err(Error::TooManyGeodesics(GEODESIC_CAP));
    }

    let mut arcs = Vec::with_capacity(count[x] as usize);
    let mut stack = vec![x];
    walk(&step, y, &mut stack, &mut arcs);
    Ok(Geodesics {
        distance: Distance::Finite(total),
        arcs,
    })
}

fn walk<F, I>(step: &F, target: PointId, stack: &mut Vec<PointId>, out: &mut Vec<Vec<PointId>>)
where
    F: Fn(PointId) -> I,
    I: Iterator<Item = PointId>,
{
    let u = *stack.last().expect("nonempty");
    if u == target {
        out.push(stack.clone());
        return;
    }
    for v in step(u) {
        stack.push(v);
        walk(step, target, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::{Coord, DigitalPlane, PlaneSpec};

    fn ids(p: &DigitalPlane, cs: &[(i32, i32)]) -> Vec<PointId> {
        cs.iter().map(|&(i, j)| p.id(Coord(i, j)).unwrap()).collect()
    }

    fn open_corner_5() -> DigitalPlane {
        DigitalPlane::new(PlaneSpec::khalimsky_open_corner(5, 5)).unwrap()
    }

    const ACUTE: [(i32, i32); 7] = [(0, 3), (1, 3), (2, 2), (3, 3), (3, 2), (3, 1), (3, 0)];

    #[test]
    fn acute_turn_path_is_not_an_arc() {
        let p = open_corner_5();
        let pts = ids(&p, &ACUTE);
        assert!(CotsPath::new(p.space(), pts.clone()).is_ok());
        assert!(!is_cots_arc(p.space(), &pts));
    }

    #[test]
    fn loop_removal_of_acute_path() {
        let p = open_corner_5();
        let path = CotsPath::new(p.space(), ids(&p, &ACUTE)).unwrap();
        let arc = extract_arc(p.space(), &path);
        let keep = [ACUTE[0], ACUTE[1], ACUTE[2], ACUTE[5], ACUTE[6]];
        assert_eq!(arc.points(), ids(&p, &keep));
        assert!(is_cots_arc(p.space(), arc.points()));
    }

    #[test]
    fn single_points_and_pairs_are_arcs() {
        let p = DigitalPlane::khalimsky(3, 3).unwrap();
        assert!(is_cots_arc(p.space(), &[4]));
        assert!(is_cots_arc(p.space(), &[4, 0]));
        assert!(!is_cots_arc(p.space(), &[]));
        assert!(!is_cots_arc(p.space(), &[4, 4]));
    }

    #[test]
    fn extract_arc_fixes_arcs_and_handles_revisits() {
        let p = open_corner_5();
        let arc = CotsPath::new(p.space(), ids(&p, &[(0, 3), (1, 3), (2, 2)])).unwrap();
        assert_eq!(extract_arc(p.space(), &arc), arc);
        let round = CotsPath::new(p.space(), ids(&p, &[(1, 1), (2, 2), (1, 1)])).unwrap();
        assert_eq!(extract_arc(p.space(), &round).points(), ids(&p, &[(1, 1)]));
    }

    #[test]
    fn concat_rules() {
        let p = open_corner_5();
        let a = CotsPath::new(p.space(), ids(&p, &[(1, 1)])).unwrap();
        let ab = CotsPath::new(p.space(), ids(&p, &[(1, 1), (2, 2)])).unwrap();
        assert_eq!(concat(&a, &ab).unwrap(), ab);
        let pal = concat(&ab, &ab.reversed()).unwrap();
        assert_eq!(pal.points(), ids(&p, &[(1, 1), (2, 2), (1, 1)]));
        assert_eq!(concat(&ab, &ab), Err(Error::EndpointMismatch));
    }

    #[test]
    fn distance_basics() {
        let p = DigitalPlane::khalimsky(9, 9).unwrap();
        let all = p.space().whole();
        let o = p.id(Coord(0, 0)).unwrap();
        assert_eq!(distance(&all, o, o).unwrap(), Distance::Finite(0));
        assert_eq!(
            distance(&all, o, p.id(Coord(3, 3)).unwrap()).unwrap(),
            Distance::Finite(3)
        );
        assert_eq!(sphere(&all, o, 0).unwrap(), vec![o]);
        let c = p.id(Coord(4, 4)).unwrap();
        assert_eq!(disk(&all, c, 1).unwrap().len(), 9);
        assert_eq!(set_distance(&all, &[o], &[o]).unwrap(), Distance::Finite(0));
        assert_eq!(set_distance(&all, &[], &[o]), Err(Error::EmptySet));
    }

    #[test]
    fn disconnected_subspace_is_unreachable() {
        let p = DigitalPlane::khalimsky(5, 5).unwrap();
        let (a, b) = (p.id(Coord(0, 0)).unwrap(), p.id(Coord(4, 4)).unwrap());
        let sub = p.space().subspace([a, b]).unwrap();
        assert_eq!(distance(&sub, a, b).unwrap(), Distance::Unreachable);
        assert_eq!(diameter(&sub), Distance::Unreachable);
        let g = geodesics(&sub, a, b).unwrap();
        assert!(g.arcs.is_empty());
        assert_eq!(distance(&sub, a, 3), Err(Error::UnknownPoint(3)));
    }

    #[test]
    fn distance_json() {
        assert_eq!(serde_json::to_string(&Distance::Finite(4)).unwrap(), "4");
        assert_eq!(serde_json::to_string(&Distance::Unreachable).unwrap(), "\"inf\"");
        let back: Distance = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Distance::Unreachable);
    }

    #[test]
    fn cots_diameter() {
        let c = crate::plane::Cots::new(9, crate::plane::EndpointKind::Open).unwrap();
        assert_eq!(diameter(&c.space().whole()), Distance::Finite(8));
    }

    #[test]
    fn diagonal_geodesic_is_unique() {
        let p = DigitalPlane::khalimsky(9, 9).unwrap();
        let all = p.space().whole();
        let g = geodesics(&all, p.id(Coord(0, 0)).unwrap(), p.id(Coord(4, 4)).unwrap()).unwrap();
        assert_eq!(g.arcs, vec![ids(&p, &[(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)])]);
        let adj = geodesics(&all, 0, 1).unwrap();
        assert_eq!(adj.arcs, vec![vec![0, 1]]);
    }
}
