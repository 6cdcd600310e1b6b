//! The space of all Jordan curves of a plane, ordered by [`curve_leq`].
//!
//! [`curve_leq`]: crate::homotopy::curve_leq

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{map_range, Exec};
use crate::homotopy::cycles_leq;
use crate::jordan::{minimal_curve, JordanCurve};
use crate::plane::{Coord, DigitalPlane, PlaneSpec, Topology};
use crate::poset::{FiniteSpace, PointId};

/// Largest side accepted by [`enumerate_curves`].
pub const ENUMERATION_CAP: usize = 12;

/// Largest `n` accepted by [`count_grid_cycles`].
pub const GRID_CYCLE_CAP: usize = 5;

/// Every Jordan curve of `plane`, canonical and sorted.
///
/// Chordless cycles of length at least 4 are listed once each by rooting
/// them at their smallest vertex and fixing the orientation by the second
/// and last vertex.
pub fn enumerate_curves(plane: &DigitalPlane) -> Result<Vec<JordanCurve>> {
    if plane.width() > ENUMERATION_CAP || plane.height() > ENUMERATION_CAP {
        return Err(Error::PlaneTooLarge {
            width: plane.width(),
            height: plane.height(),
            cap: ENUMERATION_CAP,
        });
    }
    let space = plane.space();
    let mut found = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; space.len()];
    for root in space.points() {
        path.push(root);
        on_path[root] = true;
        for &v in space.neighbors(root) {
            if v > root {
                path.push(v);
                on_path[v] = true;
                extend_chordless(space, &mut path, &mut on_path, &mut found);
                on_path[v] = false;
                path.pop();
            }
        }
        on_path[root] = false;
        path.pop();
    }
    let mut curves: Vec<JordanCurve> = found
        .iter()
        .map(|cycle| JordanCurve::from_cycle_unchecked(plane, cycle))
        .collect();
    curves.sort_by(|a, b| a.points().cmp(b.points()));
    curves.dedup();
    Ok(curves)
}

/// `path` is an induced path starting at its minimum `path[0]`.
fn extend_chordless(space: &FiniteSpace, path: &mut Vec<PointId>, on_path: &mut [bool], found: &mut Vec<Vec<PointId>>) {
    let root = path[0];
    let last = *path.last().expect("nonempty");
    let before_last = path.len() - 1;
    for &w in space.neighbors(last) {
        if w <= root || on_path[w] {
            continue;
        }
        // Only the root may also touch w; anything else is a chord.
        if path[1..before_last].iter().any(|&x| space.comparable(x, w)) {
            continue;
        }
        if space.comparable(root, w) {
            if path.len() >= 3 && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                found.push(cycle);
            }
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend_chordless(space, path, on_path, found);
        on_path[w] = false;
        path.pop();
    }
}

/// Curves with the transitive closure of the pairwise order.
#[derive(Clone, Debug)]
pub struct CurvePoset {
    plane: PlaneSpec,
    curves: Vec<JordanCurve>,
    direct: Vec<bool>,
    order: FiniteSpace,
    covers: Vec<(usize, usize)>,
    closure_added: usize,
}

/// Pairwise order on `curves`, closed under transitivity. Fails if two
/// distinct curves end up below each other.
pub fn build_poset(plane: &DigitalPlane, curves: Vec<JordanCurve>, exec: Exec) -> Result<CurvePoset> {
    if curves.iter().any(|c| c.plane() != plane.spec()) {
        return Err(Error::PlaneMismatch);
    }
    let n = curves.len();
    let ids: Vec<Vec<PointId>> = curves.iter().map(|c| c.ids()).collect();
    let rows = map_range(exec, n, |a| {
        (0..n)
            .map(|b| a == b || cycles_leq(plane.space(), &ids[a], &ids[b]))
            .collect::<Vec<bool>>()
    });
    let direct: Vec<bool> = rows.concat();
    let mut closed = direct.clone();
    for k in 0..n {
        for a in 0..n {
            if closed[a * n + k] {
                for b in 0..n {
                    if closed[k * n + b] {
                        closed[a * n + b] = true;
                    }
                }
            }
        }
    }
    let closure_added = closed.iter().zip(&direct).filter(|(c, d)| **c && !**d).count();
    for a in 0..n {
        for b in a + 1..n {
            if closed[a * n + b] && closed[b * n + a] {
                return Err(Error::NotPartialOrder(format!(
                    "curves {a} and {b} are below each other"
                )));
            }
        }
    }
    let order = FiniteSpace::from_matrix_unchecked(n, closed);
    let covers = order.covers();
    Ok(CurvePoset {
        plane: *plane.spec(),
        curves,
        direct,
        order,
        covers,
        closure_added,
    })
}

impl CurvePoset {
    pub fn plane(&self) -> &PlaneSpec {
        &self.plane
    }

    pub fn curves(&self) -> &[JordanCurve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// The closed order as a finite space on curve indices.
    pub fn order(&self) -> &FiniteSpace {
        &self.order
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    /// The pairwise relation before closure.
    pub fn direct_leq(&self, a: usize, b: usize) -> bool {
        self.direct[a * self.len() + b]
    }

    /// Hasse edges `(upper, lower)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Pairs the transitive closure added to the pairwise relation.
    pub fn closure_added(&self) -> usize {
        self.closure_added
    }

    pub fn index_of(&self, curve: &JordanCurve) -> Option<usize> {
        self.curves.binary_search_by(|c| c.points().cmp(curve.points())).ok()
    }

    /// Maximal and minimal elements, ascending.
    pub fn extremal_elements(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let maximal = (0..n).filter(|&a| !(0..n).any(|b| self.order.lt(a, b))).collect();
        let minimal = (0..n).filter(|&a| !(0..n).any(|b| self.order.lt(b, a))).collect();
        (maximal, minimal)
    }

    pub fn report(&self) -> SpaceReport {
        let (maximal, minimal) = self.extremal_elements();
        let heights = self.order.heights();
        let height = heights.iter().copied().max().unwrap_or(0);
        let mut per_level = vec![0usize; if self.is_empty() { 0 } else { height + 1 }];
        for h in heights {
            per_level[h] += 1;
        }
        let (core, _) = self.order.core();
        let strict = (0..self.len())
            .map(|a| (0..self.len()).filter(|&b| self.order.lt(a, b)).count())
            .sum();
        SpaceReport {
            curves: self.len(),
            comparable_pairs: strict,
            covers: self.covers.len(),
            maximal: maximal.len(),
            minimal: minimal.len(),
            connected: self.order.is_connected(),
            contractible: self.order.is_contractible(),
            core_size: core.len(),
            height,
            per_level,
            closure_added: self.closure_added,
        }
    }

    /// DOT digraph; edges run from each curve to the curves it covers.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph curves {\n  rankdir=TB;\n");
        for (k, c) in self.curves.iter().enumerate() {
            s.push_str(&format!("  c{} [label=\"{k}\"];\n", c.fingerprint()));
        }
        for &(hi, lo) in &self.covers {
            s.push_str(&format!(
                "  c{} -> c{};\n",
                self.curves[hi].fingerprint(),
                self.curves[lo].fingerprint()
            ));
        }
        s.push_str("}\n");
        s
    }

    /// `leq_pairs` lists strict `[lower, upper]`; `covers` lists
    /// `[lower, upper]` Hasse edges.
    pub fn dump(&self) -> SpaceDump {
        let n = self.len();
        let leq_pairs = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.order.lt(a, b))
            .map(|(a, b)| [a, b])
            .collect();
        let mut covers: Vec<[usize; 2]> = self.covers.iter().map(|&(hi, lo)| [lo, hi]).collect();
        covers.sort_unstable();
        SpaceDump {
            plane: self.plane,
            curves: self.curves.iter().map(|c| c.points().to_vec()).collect(),
            leq_pairs,
            covers,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub curves: usize,
    pub comparable_pairs: usize,
    pub covers: usize,
    pub maximal: usize,
    pub minimal: usize,
    pub connected: bool,
    pub contractible: bool,
    pub core_size: usize,
    pub height: usize,
    /// Number of curves at each height.
    pub per_level: Vec<usize>,
    pub closure_added: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceDump {
    pub plane: PlaneSpec,
    pub curves: Vec<Vec<Coord>>,
    pub leq_pairs: Vec<[usize; 2]>,
    pub covers: Vec<[usize; 2]>,
}

/// The minimal curves `A(c)` of a Khalimsky plane, one per inner point.
#[derive(Clone, Debug)]
pub struct MinimalCurveSpace {
    pub poset: CurvePoset,
    /// `centres[k]` is the centre of curve `k` of the poset.
    pub centres: Vec<Coord>,
    /// `A(a) <= A(b)` exactly when `b <= a` among the inner points.
    pub dual_isomorphic: bool,
}

pub fn minimal_curve_space(plane: &DigitalPlane, exec: Exec) -> Result<MinimalCurveSpace> {
    if plane.topology() != Topology::Khalimsky {
        return Err(Error::NotKhalimsky);
    }
    let inner = plane.inner_points();
    if inner.is_empty() {
        return Err(Error::EmptyMinimalSpace);
    }
    let mut pairs: Vec<(JordanCurve, Coord)> = inner
        .iter()
        .map(|&id| {
            let c = plane.coord(id);
            minimal_curve(plane, c).map(|curve| (curve, c))
        })
        .collect::<Result<_>>()?;
    pairs.sort_by(|a, b| a.0.points().cmp(b.0.points()));
    let (curves, centres): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let poset = build_poset(plane, curves, exec)?;
    let centre_ids = plane.ids(&centres)?;
    let n = centres.len();
    let dual_isomorphic = (0..n).all(|a| {
        (0..n).all(|b| {
            let dual = plane.space().leq(centre_ids[b], centre_ids[a]);
            poset.leq(a, b) == dual && poset.direct_leq(a, b) == dual
        })
    });
    Ok(MinimalCurveSpace {
        poset,
        centres,
        dual_isomorphic,
    })
}

/// Simple cycles of the `(n+1) x (n+1)` grid graph.
pub fn count_grid_cycles(n: usize, exec: Exec) -> Result<u64> {
    if n > GRID_CYCLE_CAP {
        return Err(Error::GridTooLarge(n));
    }
    let side = n + 1;
    let total = side * side;
    let nbrs: Vec<Vec<usize>> = (0..total)
        .map(|v| {
            let (x, y) = (v % side, v / side);
            let mut out = Vec::with_capacity(4);
            if x > 0 {
                out.push(v - 1);
            }
            if x + 1 < side {
                out.push(v + 1);
            }
            if y > 0 {
                out.push(v - side);
            }
            if y + 1 < side {
                out.push(v + side);
            }
            out
        })
        .collect();
    let per_root = map_range(exec, total, |root| {
        let mut on_path = vec![false; total];
        on_path[root] = true;
        let mut count = 0u64;
        for &v in &nbrs[root] {
            if v > root {
                on_path[v] = true;
                grid_walk(&nbrs, root, v, v, 2, &mut on_path, &mut count);
                on_path[v] = false;
            }
        }
        count
    });
    Ok(per_root.iter().sum())
}

fn grid_walk(
    nbrs: &[Vec<usize>],
    root: usize,
    second: usize,
    last: usize,
    len: usize,
    on_path: &mut [bool],
    count: &mut u64,
) {
    for &w in &nbrs[last] {
        if w == root {
            if len >= 3 && last > second {
                *count += 1;
            }
        } else if w > root && !on_path[w] {
            on_path[w] = true;
            grid_walk(nbrs, root, second, w, len + 1, on_path, count);
            on_path[w] = false;
        }
    }
}

/// Number of Jordan curves in the Khalimsky plane of width `n` and height
/// 3, with the short side's end points closed or open.
pub fn count_3xn(n: usize, closed_ends: bool) -> Result<usize> {
    let y_parity = if closed_ends { 0 } else { 1 };
    let plane = DigitalPlane::new(PlaneSpec::khalimsky(n, 3).with_parities(0, y_parity))?;
    Ok(enumerate_curves(&plane)?.len())
}

/// Independent cycles of the comparability graph, counted as edges left
/// over by a spanning forest.
pub fn cycle_rank(space: &FiniteSpace) -> usize {
    let mut parent: Vec<usize> = space.points().collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut extra = 0;
    for a in space.points() {
        for &b in space.neighbors(a) {
            if b > a {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    extra += 1;
                } else {
                    parent[ra] = rb;
                }
            }
        }
    }
    extra
}
