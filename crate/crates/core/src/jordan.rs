//! Digital Jordan curves: recognition, orientation, and regions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{bfs_levels, is_cots_arc};
use crate::plane::{Coord, DigitalPlane, PlaneSpec, PointKind};
use crate::poset::{FiniteSpace, PointId};

/// A Jordan curve in a fixed plane, stored in canonical cyclic form: the
/// lexicographically smallest rotation or reflection of its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CurveFile")]
pub struct JordanCurve {
    plane: PlaneSpec,
    points: Vec<Coord>,
}

#[derive(Deserialize)]
struct CurveFile {
    plane: PlaneSpec,
    points: Vec<Coord>,
}

impl TryFrom<CurveFile> for JordanCurve {
    type Error = Error;

    fn try_from(raw: CurveFile) -> Result<Self> {
        let plane = DigitalPlane::new(raw.plane)?;
        JordanCurve::new(&plane, &raw.points)
    }
}

impl JordanCurve {
    /// Validates `points` (any order) as a Jordan curve of `plane`.
    pub fn new(plane: &DigitalPlane, points: &[Coord]) -> Result<Self> {
        let ids = plane.ids(points)?;
        Self::from_ids(plane, &ids)
    }

    pub fn from_ids(plane: &DigitalPlane, ids: &[PointId]) -> Result<Self> {
        let order = cycle_order(plane.space(), ids).map_err(Error::NotJordanCurve)?;
        Ok(Self::from_cycle_unchecked(plane, &order))
    }

    /// `order` must already be a chordless cycle of `plane`.
    pub(crate) fn from_cycle_unchecked(plane: &DigitalPlane, order: &[PointId]) -> Self {
        let coords: Vec<Coord> = order.iter().map(|&id| plane.coord(id)).collect();
        Self {
            plane: *plane.spec(),
            points: canonical_rotation(&coords),
        }
    }

    pub fn plane(&self) -> &PlaneSpec {
        &self.plane
    }

    /// Canonical cyclic sequence.
    pub fn points(&self) -> &[Coord] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, c: Coord) -> bool {
        self.points.contains(&c)
    }

    /// Point ids in canonical order.
    pub fn ids(&self) -> Vec<PointId> {
        let w = self.plane.width;
        self.points.iter().map(|c| c.1 as usize * w + c.0 as usize).collect()
    }

    /// Starts at the smallest coordinate and runs clockwise, i.e. with
    /// negative signed area.
    pub fn cyclic_order(&self) -> Vec<Coord> {
        if signed_area2(&self.points) < 0 {
            self.points.clone()
        } else {
            let mut rev = self.points.clone();
            rev[1..].reverse();
            rev
        }
    }

    fn check_plane(&self, plane: &DigitalPlane) -> Result<()> {
        if &self.plane == plane.spec() {
            Ok(())
        } else {
            Err(Error::PlaneMismatch)
        }
    }

    /// Complement split into the part cut off from the raw border and the
    /// rest.
    pub fn regions(&self, plane: &DigitalPlane) -> Result<CurveRegions> {
        self.check_plane(plane)?;
        let mut on_curve = vec![false; plane.len()];
        for id in self.ids() {
            on_curve[id] = true;
        }
        let outside: Vec<PointId> = (0..plane.len()).filter(|&x| !on_curve[x]).collect();
        let complement = plane.space().subspace(outside)?;
        let mut reached = vec![false; plane.len()];
        let mut stack: Vec<PointId> = complement
            .members()
            .iter()
            .copied()
            .filter(|&x| plane.on_raw_border(plane.coord(x)))
            .collect();
        for &x in &stack {
            reached[x] = true;
        }
        while let Some(x) = stack.pop() {
            for y in complement.neighbors(x) {
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        let (mut interior, mut exterior) = (Vec::new(), Vec::new());
        for &x in complement.members() {
            if reached[x] {
                exterior.push(plane.coord(x));
            } else {
                interior.push(plane.coord(x));
            }
        }
        interior.sort();
        exterior.sort();
        Ok(CurveRegions { interior, exterior })
    }

    pub fn is_minimal(&self, plane: &DigitalPlane) -> Result<bool> {
        Ok(self.regions(plane)?.interior.len() == 1)
    }

    pub fn meets_raw_border(&self, plane: &DigitalPlane) -> bool {
        self.points.iter().any(|&c| plane.on_raw_border(c))
    }

    /// Stable short identifier: hex SHA-256 prefix of the canonical points.
    pub fn fingerprint(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        for c in &self.points {
            h.update(c.0.to_le_bytes());
            h.update(c.1.to_le_bytes());
        }
        h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Plane rendering, top row first: curve points by kind, `+` inside,
    /// `.` elsewhere.
    pub fn render(&self, plane: &DigitalPlane) -> Result<String> {
        let regions = self.regions(plane)?;
        let inside: BTreeSet<Coord> = regions.interior.into_iter().collect();
        let mut out = String::new();
        for j in (0..plane.height() as i32).rev() {
            for i in 0..plane.width() as i32 {
                let c = Coord(i, j);
                out.push(if self.contains(c) {
                    plane.classify(c)?.symbol()
                } else if inside.contains(&c) {
                    '+'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRegions {
    pub interior: Vec<Coord>,
    pub exterior: Vec<Coord>,
}

/// Orders `ids` along the induced cycle, or says why it is not one.
pub(crate) fn cycle_order(space: &FiniteSpace, ids: &[PointId]) -> std::result::Result<Vec<PointId>, String> {
    if ids.len() < 4 {
        return Err(format!("{} points, need at least 4", ids.len()));
    }
    let set: BTreeSet<PointId> = ids.iter().copied().collect();
    if set.len() != ids.len() {
        return Err("repeated point".into());
    }
    if let Some(&bad) = set.iter().find(|&&x| x >= space.len()) {
        return Err(format!("unknown point {bad}"));
    }
    let nbrs =
        |x: PointId| -> Vec<PointId> { space.neighbors(x).iter().copied().filter(|y| set.contains(y)).collect() };
    for &x in &set {
        let d = nbrs(x).len();
        if d != 2 {
            return Err(format!("point {x} has {d} neighbours on the curve"));
        }
    }
    let start = *set.iter().next().expect("nonempty");
    let mut order = vec![start];
    let (mut prev, mut cur) = (start, nbrs(start)[0]);
    while cur != start {
        order.push(cur);
        let n = nbrs(cur);
        let next = if n[0] == prev { n[1] } else { n[0] };
        prev = cur;
        cur = next;
    }
    if order.len() != set.len() {
        return Err("curve is not connected".into());
    }
    Ok(order)
}

/// Twice the shoelace area, positive for counterclockwise.
fn signed_area2(pts: &[Coord]) -> i64 {
    let n = pts.len();
    (0..n)
        .map(|k| {
            let (a, b) = (pts[k], pts[(k + 1) % n]);
            a.0 as i64 * b.1 as i64 - b.0 as i64 * a.1 as i64
        })
        .sum()
}

/// Smallest rotation or reflection of a cyclic list of distinct points.
fn canonical_rotation(cycle: &[Coord]) -> Vec<Coord> {
    let n = cycle.len();
    let (start, _) = cycle.iter().enumerate().min_by_key(|(_, c)| **c).expect("nonempty");
    let fwd = cycle[(start + 1) % n];
    let back = cycle[(start + n - 1) % n];
    if fwd <= back {
        (0..n).map(|k| cycle[(start + k) % n]).collect()
    } else {
        (0..n).map(|k| cycle[(start + n - k) % n]).collect()
    }
}

pub fn is_jordan_curve(plane: &DigitalPlane, points: &[Coord]) -> bool {
    match plane.ids(points) {
        Ok(ids) => cycle_order(plane.space(), &ids).is_ok(),
        Err(_) => false,
    }
}

/// The deletion characterization: at least four points, and removing any
/// one leaves a set that can be ordered as a COTS-arc.
pub fn is_jordan_curve_by_deletion(plane: &DigitalPlane, points: &[Coord]) -> bool {
    let Ok(ids) = plane.ids(points) else {
        return false;
    };
    let set: BTreeSet<PointId> = ids.iter().copied().collect();
    if set.len() != ids.len() || set.len() < 4 {
        return false;
    }
    set.iter().all(|&j| {
        let rest: Vec<PointId> = set.iter().copied().filter(|&x| x != j).collect();
        orderable_as_arc(plane.space(), &rest)
    })
}

/// Backtracking search for an ordering of `set` that is a COTS-arc.
fn orderable_as_arc(space: &FiniteSpace, set: &[PointId]) -> bool {
    fn extend(space: &FiniteSpace, set: &[PointId], used: &mut [bool], seq: &mut Vec<PointId>) -> bool {
        if seq.len() == set.len() {
            return is_cots_arc(space, seq);
        }
        for k in 0..set.len() {
            if used[k] {
                continue;
            }
            let x = set[k];
            let last = seq.len() - 1;
            let fits = space.comparable(seq[last], x) && seq[..last].iter().all(|&y| !space.comparable(y, x));
            if fits {
                used[k] = true;
                seq.push(x);
                if extend(space, set, used, seq) {
                    return true;
                }
                seq.pop();
                used[k] = false;
            }
        }
        false
    }
    (0..set.len()).any(|k| {
        let mut used = vec![false; set.len()];
        used[k] = true;
        extend(space, set, &mut used, &mut vec![set[k]])
    })
}

/// The adjacency set `A(c)` as a curve.
pub fn minimal_curve(plane: &DigitalPlane, c: Coord) -> Result<JordanCurve> {
    plane.id(c)?;
    if plane.on_raw_border(c) {
        return Err(Error::AdjacencyOutsidePlane(c));
    }
    JordanCurve::new(plane, &plane.adjacency(c)?)
}

/// The smallest pure interior point.
pub fn default_basepoint(plane: &DigitalPlane, regions: &CurveRegions) -> Option<Coord> {
    regions
        .interior
        .iter()
        .copied()
        .find(|&c| plane.classify(c).is_ok_and(PointKind::is_pure))
}

/// A point of the interior at maximal interior distance from `basepoint`:
/// pure candidates win, then the smallest coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FarPoint {
    pub point: Coord,
    pub distance: u32,
    /// Some pure point attains the maximum.
    pub pure_at_max: bool,
}

pub fn far_point(plane: &DigitalPlane, interior: &[Coord], basepoint: Coord) -> Result<FarPoint> {
    let ids = plane.ids(interior)?;
    let sub = plane.space().subspace(ids.iter().copied())?;
    let levels = bfs_levels(&sub, plane.id(basepoint)?)?;
    let reach: Vec<(Coord, u32)> = ids
        .iter()
        .filter_map(|&x| levels[x].map(|d| (plane.coord(x), d)))
        .collect();
    let max = reach.iter().map(|&(_, d)| d).max().expect("basepoint reaches itself");
    let at_max: Vec<Coord> = reach.iter().filter(|&&(_, d)| d == max).map(|&(c, _)| c).collect();
    let pure = at_max
        .iter()
        .copied()
        .filter(|&c| plane.classify(c).is_ok_and(PointKind::is_pure))
        .min();
    Ok(FarPoint {
        point: pure.unwrap_or_else(|| *at_max.iter().min().expect("nonempty")),
        distance: max,
        pure_at_max: pure.is_some(),
    })
}

/// Structural facts about one curve, each evaluated on this instance.
/// `None` marks a check that does not apply to minimal curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub size: usize,
    pub interior_size: usize,
    pub minimal: bool,
    pub even_size: bool,
    pub interior_has_pure_and_mixed: Option<bool>,
    /// Every run of `A(p) ∩ J` for pure interior `p` has odd length.
    pub odd_touching_runs: Option<bool>,
    /// Every proper subset and its complement in the curve have equally
    /// many components.
    pub complementary_components: bool,
    /// Minimal curves inside `J ∪ int(J)` have centres in `int(J)`.
    pub nested_interiors: bool,
    pub far_point: Option<FarPointReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FarPointReport {
    pub basepoint: Coord,
    pub point: Coord,
    pub kind: PointKind,
    pub distance: u32,
    pub touch_size: usize,
    pub touch_connected: bool,
    /// Size is odd and at least 3 when the rules require it.
    pub touch_size_ok: bool,
    pub weak_in_interior: bool,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        let far = self
            .far_point
            .as_ref()
            .is_none_or(|f| f.touch_connected && f.touch_size_ok && f.weak_in_interior);
        self.even_size
            && self.interior_has_pure_and_mixed != Some(false)
            && self.odd_touching_runs != Some(false)
            && self.complementary_components
            && self.nested_interiors
            && far
    }
}

pub fn lemma_checks(plane: &DigitalPlane, curve: &JordanCurve) -> Result<LemmaReport> {
    let regions = curve.regions(plane)?;
    let minimal = regions.interior.len() == 1;
    let kind = |c: Coord| plane.classify(c).expect("in plane");
    let on_curve: BTreeSet<Coord> = curve.points().iter().copied().collect();
    let inside: BTreeSet<Coord> = regions.interior.iter().copied().collect();

    let interior_has_pure_and_mixed = (!minimal).then(|| {
        let pure = regions.interior.iter().any(|&c| kind(c).is_pure());
        let mixed = regions.interior.iter().any(|&c| kind(c) == PointKind::Mixed);
        pure && mixed
    });

    let touch = |q: Coord| -> Vec<PointId> {
        plane
            .adjacency(q)
            .expect("in plane")
            .into_iter()
            .filter(|c| on_curve.contains(c))
            .map(|c| plane.id(c).expect("in plane"))
            .collect()
    };

    let odd_touching_runs = (!minimal).then(|| {
        regions.interior.iter().filter(|&&p| kind(p).is_pure()).all(|&p| {
            let t = touch(p);
            let sub = plane.space().subspace(t).expect("valid ids");
            sub.components().iter().all(|run| {
                let ends_pure = run.iter().all(|&x| {
                    let inner = sub.neighbors(x).count() == 2;
                    inner || plane.is_pure(x)
                });
                run.len() % 2 == 1 && ends_pure
            })
        })
    });

    let nested_interiors = on_curve.iter().chain(inside.iter()).all(|&c| {
        if plane.on_raw_border(c) {
            return true;
        }
        let a = plane.adjacency(c).expect("in plane");
        let enclosed = a.iter().all(|x| on_curve.contains(x) || inside.contains(x));
        !enclosed || inside.contains(&c)
    });

    let far_point = if minimal {
        None
    } else {
        let basepoint = default_basepoint(plane, &regions)
            .ok_or_else(|| Error::Invariant("non-minimal curve without pure interior point".into()))?;
        let far = far_point(plane, &regions.interior, basepoint)?;
        let t = touch(far.point);
        let connected = plane.space().subspace(t.iter().copied())?.is_connected();
        let need_three = kind(far.point).is_pure() || !far.pure_at_max;
        let size_ok = t.len() % 2 == 1 && (!need_three || t.len() >= 3);
        let int_sub = plane.space().subspace(plane.ids(&regions.interior)?)?;
        Some(FarPointReport {
            basepoint,
            point: far.point,
            kind: kind(far.point),
            distance: far.distance,
            touch_size: t.len(),
            touch_connected: connected,
            touch_size_ok: size_ok,
            weak_in_interior: int_sub.is_weak_point(plane.id(far.point)?)?,
        })
    };

    Ok(LemmaReport {
        size: curve.len(),
        interior_size: regions.interior.len(),
        minimal,
        even_size: curve.len().is_multiple_of(2),
        interior_has_pure_and_mixed,
        odd_touching_runs,
        complementary_components: complementary_components(plane, curve),
        nested_interiors,
        far_point,
    })
}

/// Exhaustive over subsets for curves up to 16 points; otherwise over
/// single runs and unions of two short runs.
fn complementary_components(plane: &DigitalPlane, curve: &JordanCurve) -> bool {
    let ids = curve.ids();
    let n = ids.len();
    let count = |mask: &dyn Fn(usize) -> bool| -> usize {
        let members = (0..n).filter(|&k| mask(k)).map(|k| ids[k]);
        plane.space().subspace(members).expect("valid ids").components().len()
    };
    let check = |mask: &dyn Fn(usize) -> bool| count(mask) == count(&|k| !mask(k));
    if n <= 16 {
        return (1..(1u32 << n) - 1).all(|bits| check(&|k| bits >> k & 1 == 1));
    }
    let run = move |s: usize, len: usize, k: usize| (k + n - s) % n < len;
    let singles = (0..n).all(|s| (1..n).all(|l| check(&|k| run(s, l, k))));
    let pairs = (0..n).all(|s1| {
        (1..=3).all(|l1| {
            (s1 + l1 + 1..s1 + n - 1).all(|s2| {
                (1..=3)
                    .filter(|&l2| s2 + l2 < s1 + n)
                    .all(|l2| check(&|k| run(s1, l1, k) || run(s2 % n, l2, k)))
            })
        })
    });
    singles && pairs
}
