//! Finite T0 spaces stored as explicit partial orders.
//!
//! A point `y` lies in the minimal open neighbourhood of `x` exactly when
//! `y <= x`, so down-sets are minimal open sets and up-sets are closures.
//! Open points are therefore the minimal elements of the order.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense index of a point inside a [`FiniteSpace`].
pub type PointId = usize;

/// A finite T0 space, i.e. a finite poset.
///
/// The order is kept as a full boolean matrix; the spaces handled here have
/// at most a few thousand points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    n: usize,
    leq: Vec<bool>,
    adjacency: Vec<Vec<PointId>>,
}

impl FiniteSpace {
    /// Builds the smallest partial order containing `pairs` (each `(a, b)`
    /// meaning `a <= b`). Fails if the closure is not antisymmetric.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (PointId, PointId)>) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for (a, b) in pairs {
            if a >= n {
                return Err(Error::UnknownPoint(a));
            }
            if b >= n {
                return Err(Error::UnknownPoint(b));
            }
            leq[a * n + b] = true;
        }
        transitive_closure(n, &mut leq);
        Self::from_matrix(n, leq)
    }

    /// Wraps an explicit order matrix (`leq[a * n + b]` iff `a <= b`),
    /// rejecting anything that is not reflexive, transitive and antisymmetric.
    pub fn from_matrix(n: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::NotPartialOrder(format!(
                "matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        for a in 0..n {
            if !leq[a * n + a] {
                return Err(Error::NotPartialOrder(format!("{a} is not <= itself")));
            }
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::NotPartialOrder(format!(
                        "{a} and {b} are mutually below each other"
                    )));
                }
                if !leq[a * n + b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b * n + c] && !leq[a * n + c] {
                        return Err(Error::NotPartialOrder(format!("{a} <= {b} <= {c} but not {a} <= {c}")));
                    }
                }
            }
        }
        Ok(Self::from_matrix_unchecked(n, leq))
    }

    pub(crate) fn from_matrix_unchecked(n: usize, leq: Vec<bool>) -> Self {
        let adjacency = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| y != x && (leq[x * n + y] || leq[y * n + x]))
                    .collect()
            })
            .collect();
        Self { n, leq, adjacency }
    }

    /// The discrete space on `n` points.
    pub fn discrete(n: usize) -> Self {
        Self::from_pairs(n, []).expect("discrete order is a partial order")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn points(&self) -> std::ops::Range<PointId> {
        0..self.n
    }

    fn check(&self, x: PointId) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::UnknownPoint(x))
        }
    }

    /// `a <= b`. Panics on out-of-range ids.
    #[inline]
    pub fn leq(&self, a: PointId, b: PointId) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn lt(&self, a: PointId, b: PointId) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: PointId, b: PointId) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// The order matrix, row-major.
    pub fn matrix(&self) -> &[bool] {
        &self.leq
    }

    /// `x^↓ = {y | y <= x}`, the minimal open set of `x`.
    pub fn down_set(&self, x: PointId) -> Result<Vec<PointId>> {
        self.check(x)?;
        Ok(self.points().filter(|&y| self.leq(y, x)).collect())
    }

    /// `x^↑ = {y | y >= x}`, the closure of `x`.
    pub fn up_set(&self, x: PointId) -> Result<Vec<PointId>> {
        self.check(x)?;
        Ok(self.points().filter(|&y| self.leq(x, y)).collect())
    }

    /// Points comparable to `x`, excluding `x`.
    pub fn adjacency(&self, x: PointId) -> Result<&[PointId]> {
        self.check(x)?;
        Ok(&self.adjacency[x])
    }

    /// Same as [`adjacency`](Self::adjacency) without the bounds check.
    #[inline]
    pub fn neighbors(&self, x: PointId) -> &[PointId] {
        &self.adjacency[x]
    }

    pub fn is_open_point(&self, x: PointId) -> bool {
        self.neighbors(x).iter().all(|&y| self.leq(x, y))
    }

    pub fn is_closed_point(&self, x: PointId) -> bool {
        self.neighbors(x).iter().all(|&y| self.leq(y, x))
    }

    pub fn whole(&self) -> Subspace<'_> {
        Subspace {
            parent: self,
            mask: vec![true; self.n],
            members: self.points().collect(),
        }
    }

    pub fn subspace(&self, members: impl IntoIterator<Item = PointId>) -> Result<Subspace<'_>> {
        Subspace::new(self, members)
    }

    pub fn is_connected(&self) -> bool {
        self.whole().is_connected()
    }

    pub fn components(&self) -> Vec<Vec<PointId>> {
        self.whole().components()
    }

    /// The subspace on `members` as a standalone space. Point `k` of the
    /// result corresponds to `members[k]`.
    pub fn induced(&self, members: &[PointId]) -> FiniteSpace {
        let m = members.len();
        let mut leq = vec![false; m * m];
        for (a, &x) in members.iter().enumerate() {
            for (b, &y) in members.iter().enumerate() {
                leq[a * m + b] = self.leq(x, y);
            }
        }
        Self::from_matrix_unchecked(m, leq)
    }

    /// Same points, reversed order: open and closed sets trade places.
    pub fn dual(&self) -> FiniteSpace {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq(b, a);
            }
        }
        Self::from_matrix_unchecked(n, leq)
    }

    /// Product with the componentwise order. The pair `(a, b)` gets id
    /// `b * self.len() + a`, matching row-major lattice coordinates.
    pub fn product(&self, other: &FiniteSpace) -> FiniteSpace {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut leq = vec![false; n * n];
        for b in 0..n2 {
            for a in 0..n1 {
                let p = b * n1 + a;
                for d in 0..n2 {
                    if !other.leq(b, d) {
                        continue;
                    }
                    for c in 0..n1 {
                        if self.leq(a, c) {
                            leq[p * n + d * n1 + c] = true;
                        }
                    }
                }
            }
        }
        Self::from_matrix_unchecked(n, leq)
    }

    /// Whether `x` is a down beat or up beat point of the whole space.
    pub fn is_beat_point(&self, x: PointId) -> Result<bool> {
        self.check(x)?;
        let alive = vec![true; self.n];
        Ok(is_beat(self, &alive, x))
    }

    pub fn beat_points(&self) -> Vec<PointId> {
        let alive = vec![true; self.n];
        self.points().filter(|&x| is_beat(self, &alive, x)).collect()
    }

    /// Removes beat points, scanning ids in ascending order each pass, until
    /// none remain. Returns the core and the original ids of its points.
    pub fn core(&self) -> (FiniteSpace, Vec<PointId>) {
        let order: Vec<PointId> = self.points().collect();
        self.core_in_order(&order)
    }

    /// Like [`core`](Self::core), but every pass scans points in `order`
    /// (which must be a permutation of the point ids).
    pub fn core_in_order(&self, order: &[PointId]) -> (FiniteSpace, Vec<PointId>) {
        let mut alive = vec![true; self.n];
        loop {
            let mut removed = false;
            for &x in order {
                if alive[x] && is_beat(self, &alive, x) {
                    alive[x] = false;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        let kept: Vec<PointId> = self.points().filter(|&x| alive[x]).collect();
        (self.induced(&kept), kept)
    }

    /// A finite T0 space is contractible iff its core is a single point.
    pub fn is_contractible(&self) -> bool {
        !self.is_empty() && self.core().0.len() == 1
    }

    /// `x` is weak when its punctured down-set or punctured up-set is
    /// contractible.
    pub fn is_weak_point(&self, x: PointId) -> Result<bool> {
        self.check(x)?;
        let below: Vec<PointId> = self.points().filter(|&y| self.lt(y, x)).collect();
        if self.induced(&below).is_contractible() {
            return Ok(true);
        }
        let above: Vec<PointId> = self.points().filter(|&y| self.lt(x, y)).collect();
        Ok(self.induced(&above).is_contractible())
    }

    /// Length of the longest chain ending at each point (minimal points have
    /// height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<PointId> = self.points().collect();
        let below_count: Vec<usize> = self
            .points()
            .map(|x| self.points().filter(|&y| self.lt(y, x)).count())
            .collect();
        order.sort_by_key(|&x| below_count[x]);
        let mut height = vec![0usize; self.n];
        for (k, &x) in order.iter().enumerate() {
            height[x] = order[..k]
                .iter()
                .filter(|&&y| self.lt(y, x))
                .map(|&y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Covering pairs `(upper, lower)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(PointId, PointId)> {
        let mut out = Vec::new();
        for hi in self.points() {
            for lo in self.points() {
                if self.lt(lo, hi) && !self.points().any(|z| self.lt(lo, z) && self.lt(z, hi)) {
                    out.push((hi, lo));
                }
            }
        }
        out
    }

    pub fn dump(&self) -> PosetDump {
        let mut leq = Vec::new();
        for a in self.points() {
            for b in self.points() {
                if self.lt(a, b) {
                    leq.push([a, b]);
                }
            }
        }
        PosetDump {
            points: self.points().collect(),
            leq,
        }
    }

    pub fn from_dump(dump: &PosetDump) -> Result<Self> {
        let n = dump.points.len();
        let index = |p: usize| dump.points.iter().position(|&q| q == p).ok_or(Error::UnknownPoint(p));
        let mut pairs = Vec::with_capacity(dump.leq.len());
        for &[a, b] in &dump.leq {
            pairs.push((index(a)?, index(b)?));
        }
        Self::from_pairs(n, pairs)
    }
}

/// Debug serialization: strict relations only, reflexivity implied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDump {
    pub points: Vec<usize>,
    pub leq: Vec<[usize; 2]>,
}

fn transitive_closure(n: usize, leq: &mut [bool]) {
    for k in 0..n {
        for i in 0..n {
            if !leq[i * n + k] {
                continue;
            }
            for j in 0..n {
                if leq[k * n + j] {
                    leq[i * n + j] = true;
                }
            }
        }
    }
}

/// Beat test restricted to the points flagged in `alive`.
fn is_beat(space: &FiniteSpace, alive: &[bool], x: PointId) -> bool {
    let below: Vec<PointId> = space
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| alive[y] && space.leq(y, x))
        .collect();
    if unique_extreme(&below, |a, b| space.lt(a, b)) {
        return true;
    }
    let above: Vec<PointId> = space
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| alive[y] && space.leq(x, y))
        .collect();
    unique_extreme(&above, |a, b| space.lt(b, a))
}

/// True iff `set` has exactly one element with nothing `above` it.
fn unique_extreme(set: &[PointId], above: impl Fn(PointId, PointId) -> bool) -> bool {
    let mut found = 0;
    for &a in set {
        if !set.iter().any(|&b| above(a, b)) {
            found += 1;
            if found > 1 {
                return false;
            }
        }
    }
    found == 1
}

/// A subset of a [`FiniteSpace`] carrying the induced order. Borrowing the
/// parent keeps distances "within A" cheap.
#[derive(Clone, Debug)]
pub struct Subspace<'a> {
    parent: &'a FiniteSpace,
    mask: Vec<bool>,
    members: Vec<PointId>,
}

impl<'a> Subspace<'a> {
    pub fn new(parent: &'a FiniteSpace, members: impl IntoIterator<Item = PointId>) -> Result<Self> {
        let mut mask = vec![false; parent.len()];
        for x in members {
            parent.check(x)?;
            mask[x] = true;
        }
        let members = parent.points().filter(|&x| mask[x]).collect();
        Ok(Self { parent, mask, members })
    }

    pub fn parent(&self) -> &'a FiniteSpace {
        self.parent
    }

    pub fn members(&self) -> &[PointId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: PointId) -> bool {
        x < self.mask.len() && self.mask[x]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Neighbours of `x` that are members.
    pub fn neighbors(&self, x: PointId) -> impl Iterator<Item = PointId> + '_ {
        self.parent.neighbors(x).iter().copied().filter(move |&y| self.mask[y])
    }

    /// Fence-connected components, each sorted, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<PointId>> {
        let mut seen = vec![false; self.parent.len()];
        let mut out = Vec::new();
        for &start in &self.members {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Standalone copy of this subspace; point `k` is `members()[k]`.
    pub fn to_space(&self) -> FiniteSpace {
        self.parent.induced(&self.members)
    }

    /// Weak-point test carried out inside the subspace.
    pub fn is_weak_point(&self, x: PointId) -> Result<bool> {
        let k = self.members.binary_search(&x).map_err(|_| Error::UnknownPoint(x))?;
        self.to_space().is_weak_point(k)
    }
}

/// The `length`-point COTS as a bare poset: consecutive indices are
/// comparable and the closed points are the indices with parity
/// `closed_parity`.
pub(crate) fn cots_space(length: usize, closed_parity: usize) -> FiniteSpace {
    let pairs = (0..length.saturating_sub(1)).map(|k| if k % 2 == closed_parity { (k + 1, k) } else { (k, k + 1) });
    FiniteSpace::from_pairs(length, pairs).expect("a fence is a partial order")
}
