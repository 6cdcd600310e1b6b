//! The order on Jordan curves and the moves that connect them.
//!
//! `J <= K` holds when some circle parameterizations `f` of `J` and `g` of
//! `K` satisfy `f(s) <= g(s)` everywhere. Only standard-type
//! parameterizations are considered: each curve point owns one arc of the
//! circle, traversed once.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{cycle_order, default_basepoint, far_point, minimal_curve, JordanCurve};
use crate::plane::{Coord, DigitalPlane, PlaneSpec};
use crate::poset::{FiniteSpace, PointId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    OpenInterval,
    ClosedInterval,
}

/// One arc of the circle and the curve point it maps to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub point: Coord,
    pub kind: CellKind,
}

/// Cyclic cell decomposition of the circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Parameterization {
    pub cells: Vec<Cell>,
}

impl Parameterization {
    pub fn points(&self) -> Vec<Coord> {
        self.cells.iter().map(|c| c.point).collect()
    }

    /// Cells follow `curve` once around, kinds alternate, and closed cells
    /// sit exactly on the relatively closed points.
    pub fn is_valid_for(&self, plane: &DigitalPlane, curve: &JordanCurve) -> bool {
        let n = self.cells.len();
        if n != curve.len() {
            return false;
        }
        let Ok(ids) = plane.ids(&self.points()) else {
            return false;
        };
        let distinct: BTreeSet<PointId> = ids.iter().copied().collect();
        if distinct.len() != n || !self.cells.iter().all(|c| curve.contains(c.point)) {
            return false;
        }
        let space = plane.space();
        (0..n).all(|k| {
            let (prev, cur, next) = (ids[(k + n - 1) % n], ids[k], ids[(k + 1) % n]);
            let closed = space.leq(prev, cur) && space.leq(next, cur);
            let expected = if closed {
                CellKind::ClosedInterval
            } else {
                CellKind::OpenInterval
            };
            space.comparable(cur, next)
                && self.cells[k].kind == expected
                && self.cells[k].kind != self.cells[(k + 1) % n].kind
        })
    }
}

/// One cell per point in clockwise order; a point gets a closed interval
/// iff it lies above both curve neighbours.
pub fn standard_parameterization(plane: &DigitalPlane, curve: &JordanCurve) -> Result<Parameterization> {
    if curve.plane() != plane.spec() {
        return Err(Error::PlaneMismatch);
    }
    let order = curve.cyclic_order();
    let ids = plane.ids(&order)?;
    Ok(Parameterization {
        cells: cells_for(plane.space(), &ids, &order),
    })
}

fn cells_for(space: &FiniteSpace, ids: &[PointId], coords: &[Coord]) -> Vec<Cell> {
    let n = ids.len();
    (0..n)
        .map(|k| {
            let closed = space.leq(ids[(k + n - 1) % n], ids[k]) && space.leq(ids[(k + 1) % n], ids[k]);
            Cell {
                point: coords[k],
                kind: if closed {
                    CellKind::ClosedInterval
                } else {
                    CellKind::OpenInterval
                },
            }
        })
        .collect()
}

/// `J <= K` for two curves of the same plane.
pub fn curve_leq(plane: &DigitalPlane, lower: &JordanCurve, upper: &JordanCurve) -> Result<bool> {
    if lower.plane() != plane.spec() || upper.plane() != plane.spec() {
        return Err(Error::PlaneMismatch);
    }
    Ok(cycles_leq(plane.space(), &lower.ids(), &upper.ids()))
}

/// Decision procedure on cyclic id sequences. Either orientation of `upper`
/// is tried against the fixed orientation of `lower`.
pub fn cycles_leq(space: &FiniteSpace, lower: &[PointId], upper: &[PointId]) -> bool {
    let reversed: Vec<PointId> = upper.iter().rev().copied().collect();
    aligned_leq(space, lower, upper) || aligned_leq(space, lower, &reversed)
}

/// Searches the lifted product automaton. State `(a, b)` means cell `a` of
/// `lower` overlaps cell `b` of `upper` (shifted by the start alignment);
/// acceptance at `(n, m)` closes a loop winding once around both.
fn aligned_leq(space: &FiniteSpace, lower: &[PointId], upper: &[PointId]) -> bool {
    let (n, m) = (lower.len(), upper.len());
    let owner = |a: PointId, b: PointId| if space.leq(a, b) { b } else { a };
    let width = m + 1;
    let mut seen = vec![false; (n + 1) * width];
    let mut stack = Vec::new();
    for start in 0..m {
        if !space.leq(lower[0], upper[start]) {
            continue;
        }
        let up = |t: usize| upper[(start + t) % m];
        let low = |t: usize| lower[t % n];
        seen.fill(false);
        seen[0] = true;
        stack.clear();
        stack.push((0usize, 0usize));
        while let Some((a, b)) = stack.pop() {
            if a == n && b == m {
                return true;
            }
            let mut visit = |a2: usize, b2: usize, stack: &mut Vec<(usize, usize)>| {
                let slot = a2 * width + b2;
                if !seen[slot] {
                    seen[slot] = true;
                    stack.push((a2, b2));
                }
            };
            if a < n && space.leq(low(a + 1), up(b)) {
                visit(a + 1, b, &mut stack);
            }
            if b < m && space.leq(low(a), up(b + 1)) {
                visit(a, b + 1, &mut stack);
            }
            if a < n
                && b < m
                && space.leq(low(a + 1), up(b + 1))
                && space.leq(owner(low(a), low(a + 1)), owner(up(b), up(b + 1)))
            {
                visit(a + 1, b + 1, &mut stack);
            }
        }
    }
    false
}

/// Relation between consecutive fence entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// previous <= next
    #[serde(rename = "<=")]
    Up,
    /// previous >= next
    #[serde(rename = ">=")]
    Down,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Up => "<=",
            Direction::Down => ">=",
        })
    }
}

/// A path in the curve space: consecutive curves comparable as recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fence {
    curves: Vec<JordanCurve>,
    directions: Vec<Direction>,
}

#[derive(Serialize)]
struct FenceFile<'a> {
    plane: &'a PlaneSpec,
    curves: Vec<&'a [Coord]>,
    directions: &'a [Direction],
}

impl Serialize for Fence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FenceFile {
            plane: self.curves[0].plane(),
            curves: self.curves.iter().map(|c| c.points()).collect(),
            directions: &self.directions,
        }
        .serialize(s)
    }
}

impl Fence {
    pub fn single(curve: JordanCurve) -> Self {
        Self {
            curves: vec![curve],
            directions: Vec::new(),
        }
    }

    pub fn push(&mut self, curve: JordanCurve, direction: Direction) {
        self.curves.push(curve);
        self.directions.push(direction);
    }

    pub fn curves(&self) -> &[JordanCurve] {
        &self.curves
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn first(&self) -> &JordanCurve {
        &self.curves[0]
    }

    pub fn last(&self) -> &JordanCurve {
        &self.curves[self.curves.len() - 1]
    }

    pub fn reversed(&self) -> Self {
        Self {
            curves: self.curves.iter().rev().cloned().collect(),
            directions: self.directions.iter().rev().map(|d| d.flip()).collect(),
        }
    }

    /// Appends `other`, whose first curve must equal this fence's last.
    pub fn extend(&mut self, other: Fence) -> Result<()> {
        if other.first() != self.last() {
            return Err(Error::EndpointMismatch);
        }
        self.curves.extend(other.curves.into_iter().skip(1));
        self.directions.extend(other.directions);
        Ok(())
    }

    /// Index of the first step whose recorded direction fails under `leq`.
    pub fn first_invalid_step<F>(&self, mut leq: F) -> Option<usize>
    where
        F: FnMut(&JordanCurve, &JordanCurve) -> bool,
    {
        (0..self.directions.len()).find(|&k| {
            let (a, b) = (&self.curves[k], &self.curves[k + 1]);
            !match self.directions[k] {
                Direction::Up => leq(a, b),
                Direction::Down => leq(b, a),
            }
        })
    }

    pub fn validate(&self, plane: &DigitalPlane) -> Result<()> {
        let mut err = None;
        let bad = self.first_invalid_step(|a, b| match curve_leq(plane, a, b) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                false
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        match bad {
            Some(k) => Err(Error::Invariant(format!(
                "fence step {k} is not comparable as recorded"
            ))),
            None => Ok(()),
        }
    }
}

/// Result of one shrink move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShrinkStep {
    pub curve: JordanCurve,
    pub parameterization: Parameterization,
    pub basepoint: Coord,
    /// The interior point absorbed into the curve; `None` when the input
    /// was already minimal.
    pub absorbed: Option<Coord>,
    /// Relation from the input curve to `curve`.
    pub direction: Option<Direction>,
}

fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}

/// Pushes the curve inward across the interior point farthest from `p`, so
/// the interior loses exactly one point and keeps `p`.
pub fn shrink(plane: &DigitalPlane, curve: &JordanCurve, param: &Parameterization, p: Coord) -> Result<ShrinkStep> {
    if curve.plane() != plane.spec() {
        return Err(Error::PlaneMismatch);
    }
    let regions = curve.regions(plane)?;
    if !plane.classify(p)?.is_pure() || regions.interior.binary_search(&p).is_err() {
        return Err(Error::BadBasepoint(p));
    }
    if regions.interior.len() == 1 {
        return Ok(ShrinkStep {
            curve: curve.clone(),
            parameterization: param.clone(),
            basepoint: p,
            absorbed: None,
            direction: None,
        });
    }

    let q = far_point(plane, &regions.interior, p)?.point;
    let int_ids = plane.ids(&regions.interior)?;
    let int_sub = plane.space().subspace(int_ids.iter().copied())?;
    if !int_sub.is_weak_point(plane.id(q)?)? {
        return Err(invariant(format!("{q} is not a weak point of the interior")));
    }

    let order = curve.cyclic_order();
    let n = order.len();
    let near: BTreeSet<Coord> = plane.adjacency(q)?.into_iter().filter(|c| curve.contains(*c)).collect();
    let touched: Vec<bool> = order.iter().map(|c| near.contains(c)).collect();
    let size = near.len();
    if size < 3 || size.is_multiple_of(2) {
        return Err(invariant(format!("{q} touches the curve in {size} points")));
    }
    // The touched points must form one run of the cycle.
    let starts: Vec<usize> = (0..n).filter(|&k| touched[k] && !touched[(k + n - 1) % n]).collect();
    if starts.len() != 1 {
        return Err(invariant(format!("curve points next to {q} are not connected")));
    }
    let s = starts[0];
    let inner: BTreeSet<Coord> = (1..size - 1).map(|t| order[(s + t) % n]).collect();

    let mut new_order = Vec::with_capacity(n - size + 3);
    for t in 0..n {
        let c = order[(s + t) % n];
        if t == 1 {
            new_order.push(q);
        }
        if !inner.contains(&c) {
            new_order.push(c);
        }
    }
    let new_ids = plane.ids(&new_order)?;
    let cycle =
        cycle_order(plane.space(), &new_ids).map_err(|e| invariant(format!("result is not a Jordan curve: {e}")))?;
    let next = JordanCurve::from_cycle_unchecked(plane, &cycle);

    let next_regions = next.regions(plane)?;
    if next_regions.interior.len() + 1 != regions.interior.len() {
        return Err(invariant("interior did not shrink by exactly one point"));
    }
    if next_regions.interior.binary_search(&p).is_err() {
        return Err(invariant(format!("basepoint {p} left the interior")));
    }
    let direction = if cycles_leq(plane.space(), &curve.ids(), &next.ids()) {
        Direction::Up
    } else if cycles_leq(plane.space(), &next.ids(), &curve.ids()) {
        Direction::Down
    } else {
        return Err(invariant("shrunk curve is not comparable to its input"));
    };

    let parameterization = collapse_cells(plane, param, &inner, q, &next)?;
    Ok(ShrinkStep {
        curve: next,
        parameterization,
        basepoint: p,
        absorbed: Some(q),
        direction: Some(direction),
    })
}

/// Replaces the contiguous cells of `inner` by one cell for `q`, with the
/// kind `q` has on the new curve.
fn collapse_cells(
    plane: &DigitalPlane,
    param: &Parameterization,
    inner: &BTreeSet<Coord>,
    q: Coord,
    next: &JordanCurve,
) -> Result<Parameterization> {
    let cells = &param.cells;
    let n = cells.len();
    let hit = |k: usize| inner.contains(&cells[k % n].point);
    let start = (0..n)
        .find(|&k| hit(k) && !hit(k + n - 1))
        .ok_or_else(|| invariant("parameterization does not cover the replaced points"))?;
    let mut out = Vec::with_capacity(n);
    let mut placed = false;
    for t in 0..n {
        let k = (start + t) % n;
        if hit(k) {
            if !placed {
                out.push(Cell {
                    point: q,
                    kind: CellKind::OpenInterval,
                });
                placed = true;
            }
        } else {
            out.push(cells[k]);
        }
    }
    let coords: Vec<Coord> = out.iter().map(|c| c.point).collect();
    let ids = plane.ids(&coords)?;
    let kinds = cells_for(plane.space(), &ids, &coords);
    let g = Parameterization { cells: kinds };
    if !g.is_valid_for(plane, next) {
        return Err(invariant("collapsed parameterization is not valid"));
    }
    Ok(g)
}

/// Fence of shrink moves ending at the minimal curve around the basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Minimalization {
    pub basepoint: Coord,
    pub absorbed: Vec<Coord>,
    pub fence: Fence,
}

/// Shrinks until one interior point remains. The default basepoint is the
/// smallest pure interior point; a minimal curve is returned as is, centred
/// on its only interior point.
pub fn minimalize(plane: &DigitalPlane, curve: &JordanCurve, basepoint: Option<Coord>) -> Result<Minimalization> {
    let regions = curve.regions(plane)?;
    if regions.interior.len() == 1 && basepoint.is_none() {
        return Ok(Minimalization {
            basepoint: regions.interior[0],
            absorbed: Vec::new(),
            fence: Fence::single(curve.clone()),
        });
    }
    let p = match basepoint {
        Some(p) => p,
        None => default_basepoint(plane, &regions).ok_or_else(|| invariant("curve has no pure interior point"))?,
    };
    let mut param = standard_parameterization(plane, curve)?;
    let mut current = curve.clone();
    let mut fence = Fence::single(curve.clone());
    let mut absorbed = Vec::new();
    loop {
        let step = shrink(plane, &current, &param, p)?;
        let (Some(q), Some(dir)) = (step.absorbed, step.direction) else {
            break;
        };
        absorbed.push(q);
        fence.push(step.curve.clone(), dir);
        current = step.curve;
        param = step.parameterization;
    }
    if current != minimal_curve(plane, p)? {
        return Err(invariant(format!("shrinking did not end at the ring around {p}")));
    }
    Ok(Minimalization {
        basepoint: p,
        absorbed,
        fence,
    })
}

/// Minimal curves along a shortest fence of centres in the inner plane.
/// `A(a) <= A(b)` for adjacent centres exactly when `a > b`.
pub fn minimal_path(plane: &DigitalPlane, from: Coord, to: Coord) -> Result<Fence> {
    let start = minimal_curve(plane, from)?;
    minimal_curve(plane, to)?;
    let inner = plane.space().subspace(plane.inner_points())?;
    let (a, b) = (plane.id(from)?, plane.id(to)?);
    let mut parent = vec![usize::MAX; plane.len()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for y in inner.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[b] == usize::MAX {
        return Err(Error::Disconnected(from, to));
    }
    let mut centres = vec![b];
    while *centres.last().expect("nonempty") != a {
        centres.push(parent[*centres.last().expect("nonempty")]);
    }
    centres.reverse();
    let mut fence = Fence::single(start);
    for w in centres.windows(2) {
        let dir = if plane.space().lt(w[1], w[0]) {
            Direction::Up
        } else {
            Direction::Down
        };
        fence.push(minimal_curve(plane, plane.coord(w[1]))?, dir);
    }
    Ok(fence)
}

/// Fence from `from` to `to`: shrink the first, walk between minimal
/// curves, then grow into the second.
pub fn morph(plane: &DigitalPlane, from: &JordanCurve, to: &JordanCurve) -> Result<Fence> {
    if from.plane() != plane.spec() || to.plane() != plane.spec() {
        return Err(Error::PlaneMismatch);
    }
    if from == to {
        return Ok(Fence::single(from.clone()));
    }
    let down = minimalize(plane, from, None)?;
    let up = minimalize(plane, to, None)?;
    let mut fence = down.fence;
    fence.extend(minimal_path(plane, down.basepoint, up.basepoint)?)?;
    fence.extend(up.fence.reversed())?;
    Ok(fence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5() -> DigitalPlane {
        DigitalPlane::new(PlaneSpec::khalimsky_open_corner(5, 5)).unwrap()
    }

    fn ring(p: &DigitalPlane, i: i32, j: i32) -> JordanCurve {
        minimal_curve(p, Coord(i, j)).unwrap()
    }

    #[test]
    fn mixed_ring_alternates() {
        let p = DigitalPlane::khalimsky(5, 5).unwrap();
        let c = ring(&p, 2, 1);
        let f = standard_parameterization(&p, &c).unwrap();
        assert_eq!(f.cells.len(), 4);
        assert!(f.cells.windows(2).all(|w| w[0].kind != w[1].kind));
        assert!(f.is_valid_for(&p, &c));
    }

    #[test]
    fn open_centre_ring_closes_on_closed_points() {
        let p = DigitalPlane::khalimsky(5, 5).unwrap();
        let c = ring(&p, 1, 1);
        let f = standard_parameterization(&p, &c).unwrap();
        for cell in &f.cells {
            let closed = p.classify(cell.point).unwrap() == crate::plane::PointKind::Closed;
            assert_eq!(closed, cell.kind == CellKind::ClosedInterval);
        }
    }

    #[test]
    fn mixed_points_on_closed_rings_are_open_cells() {
        let p = DigitalPlane::khalimsky(5, 5).unwrap();
        let f = standard_parameterization(&p, &ring(&p, 1, 1)).unwrap();
        for cell in &f.cells {
            if !p.classify(cell.point).unwrap().is_pure() {
                assert_eq!(cell.kind, CellKind::OpenInterval);
            }
        }
    }

    #[test]
    fn order_is_reflexive_and_follows_centres() {
        let p = DigitalPlane::khalimsky(7, 7).unwrap();
        let closed = ring(&p, 2, 2);
        let mixed = ring(&p, 3, 2);
        assert!(curve_leq(&p, &closed, &closed).unwrap());
        assert!(curve_leq(&p, &closed, &mixed).unwrap());
        assert!(!curve_leq(&p, &mixed, &closed).unwrap());
        let far = ring(&p, 4, 4);
        assert!(!curve_leq(&p, &closed, &far).unwrap());
        assert!(!curve_leq(&p, &far, &closed).unwrap());
    }

    #[test]
    fn plane_mismatch_is_reported() {
        let a = DigitalPlane::khalimsky(5, 5).unwrap();
        let b = k5();
        assert_eq!(
            curve_leq(&a, &ring(&a, 2, 2), &ring(&b, 2, 2)),
            Err(Error::PlaneMismatch)
        );
    }

    #[test]
    fn minimal_curves_do_not_shrink() {
        let p = k5();
        let c = ring(&p, 1, 1);
        let f = standard_parameterization(&p, &c).unwrap();
        let step = shrink(&p, &c, &f, Coord(1, 1)).unwrap();
        assert_eq!(step.curve, c);
        assert_eq!(step.absorbed, None);
        assert_eq!(
            shrink(&p, &c, &f, Coord(2, 2)).unwrap_err(),
            Error::BadBasepoint(Coord(2, 2))
        );
    }

    #[test]
    fn border_shrinks_by_one() {
        let p = k5();
        let b = JordanCurve::new(&p, &p.adjusted_border().unwrap()).unwrap();
        let f = standard_parameterization(&p, &b).unwrap();
        let step = shrink(&p, &b, &f, Coord(1, 1)).unwrap();
        assert_eq!(step.curve.regions(&p).unwrap().interior.len(), 8);
        assert!(step.parameterization.is_valid_for(&p, &step.curve));
    }

    #[test]
    fn seven_point_contact_is_replaced_by_centre() {
        let p = DigitalPlane::khalimsky(7, 7).unwrap();
        let mut rect: Vec<Coord> = (0..=4).map(|j| Coord(2, j)).collect();
        rect.extend((0..=4).map(|j| Coord(4, j)));
        rect.extend([Coord(3, 0), Coord(3, 4)]);
        let j = JordanCurve::new(&p, &rect).unwrap();
        let f = standard_parameterization(&p, &j).unwrap();
        let step = shrink(&p, &j, &f, Coord(3, 1)).unwrap();
        let q = step.absorbed.unwrap();
        assert_eq!(q, Coord(3, 3));
        let touching = p.adjacency(q).unwrap().into_iter().filter(|c| j.contains(*c)).count();
        assert_eq!(touching, 7);
        assert_eq!(step.curve.len(), j.len() - 5 + 1);
        assert!(step.curve.contains(Coord(2, 2)) && step.curve.contains(Coord(4, 2)));
        assert_eq!(step.curve.regions(&p).unwrap().interior, vec![Coord(3, 1), Coord(3, 2)]);
    }

    #[test]
    fn border_first_move_takes_a_far_corner() {
        let p = k5();
        let b = JordanCurve::new(&p, &p.adjusted_border().unwrap()).unwrap();
        let f = standard_parameterization(&p, &b).unwrap();
        let step = shrink(&p, &b, &f, Coord(1, 1)).unwrap();
        assert_eq!(step.absorbed, Some(Coord(1, 3)));
        assert_eq!(step.curve.len(), 14);
    }

    #[test]
    fn border_minimalizes_in_eight_moves() {
        let p = k5();
        let b = JordanCurve::new(&p, &p.adjusted_border().unwrap()).unwrap();
        let m = minimalize(&p, &b, None).unwrap();
        assert_eq!(m.fence.len(), 9);
        assert_eq!(m.fence.last(), &ring(&p, m.basepoint.0, m.basepoint.1));
        m.fence.validate(&p).unwrap();
    }

    #[test]
    fn minimal_paths() {
        let p = DigitalPlane::khalimsky(7, 7).unwrap();
        assert_eq!(minimal_path(&p, Coord(2, 2), Coord(2, 2)).unwrap().len(), 1);
        let step = minimal_path(&p, Coord(2, 2), Coord(3, 2)).unwrap();
        assert_eq!(step.directions(), &[Direction::Up]);
        step.validate(&p).unwrap();
        let long = minimal_path(&p, Coord(1, 1), Coord(5, 5)).unwrap();
        assert_eq!(long.len(), 5);
        long.validate(&p).unwrap();
    }

    #[test]
    fn morph_endpoints() {
        let p = k5();
        let a = ring(&p, 1, 1);
        assert_eq!(morph(&p, &a, &a).unwrap().len(), 1);
        let b = ring(&p, 2, 1);
        let f = morph(&p, &a, &b).unwrap();
        assert_eq!(f.len(), 2);
        f.validate(&p).unwrap();
        let border = JordanCurve::new(&p, &p.adjusted_border().unwrap()).unwrap();
        let g = morph(&p, &border, &b).unwrap();
        assert_eq!((g.first(), g.last()), (&border, &b));
        g.validate(&p).unwrap();
    }

    #[test]
    fn fence_json_shape() {
        let p = k5();
        let f = morph(&p, &ring(&p, 1, 1), &ring(&p, 2, 1)).unwrap();
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["curves"].as_array().unwrap().len(), 2);
        assert!(v["directions"][0] == "<=" || v["directions"][0] == ">=");
        assert_eq!(v["plane"]["width"], 5);
    }
}
