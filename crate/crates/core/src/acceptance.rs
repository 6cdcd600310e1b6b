//! End-to-end checks of the headline results, each with a time budget.
//!
//! Shared by the `acceptance` test target and the CLI `verify` command.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::curve_space::{
    build_poset, count_3xn, count_grid_cycles, cycle_rank, enumerate_curves, minimal_curve_space, CurvePoset,
};
use crate::exec::{map_range, Exec};
use crate::homotopy::{curve_leq, minimalize, morph, Direction};
use crate::jordan::{is_jordan_curve, is_jordan_curve_by_deletion, JordanCurve};
use crate::paths::{bfs_levels, geodesics, is_cots_arc, Distance};
use crate::plane::{Coord, Cots, DigitalPlane, EndpointKind, PlaneSpec, PointKind};

type Check = fn(Exec) -> Result<String, String>;

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub limit: Duration,
    check: Check,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub within_limit: bool,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
    pub detail: String,
}

impl Outcome {
    pub fn ok(&self) -> bool {
        self.passed && self.within_limit
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2} {:<34} {:>8} ms / {:>6} ms  {}",
            self.id, self.name, self.elapsed_ms, self.limit_ms, self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self, exec: Exec) -> Outcome {
        let start = Instant::now();
        let result = (self.check)(exec);
        let elapsed = start.elapsed();
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Outcome {
            id: self.id,
            name: self.name,
            passed,
            within_limit: elapsed <= self.limit,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: self.limit.as_millis(),
            detail,
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    let c = |id, name, limit, check: Check| Criterion { id, name, limit, check };
    vec![
        c(1, "4x4 curve space", secs(5), four_by_four),
        c(2, "5x5 curve space", secs(60), five_by_five),
        c(3, "3xn curve counts", secs(30), three_by_n),
        c(4, "9x9 metric suite", secs(60), metric_suite),
        c(5, "shrink and minimalize, 5x5", secs(60), shrink_all),
        c(6, "morph all 5x5 pairs", secs(300), morph_all),
        c(
            7,
            "antisymmetry and extremal curves",
            secs(60),
            antisymmetry_and_extremes,
        ),
        c(8, "minimal curves vs dual inner plane", secs(10), minimal_space_iso),
        c(9, "grid cycle counts", secs(60), grid_cycles),
        c(10, "Marcus-Wyse 5x5", secs(30), marcus_wyse),
        c(11, "curve definitions agree", secs(120), definitions),
        c(12, "duals of products", secs(5), duals),
    ]
}

pub fn run_all(exec: Exec) -> Vec<Outcome> {
    criteria().iter().map(|c| c.run(exec)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn plane(spec: PlaneSpec) -> Result<DigitalPlane, String> {
    DigitalPlane::new(spec).map_err(|e| e.to_string())
}

fn space_of(spec: PlaneSpec, exec: Exec) -> Result<(DigitalPlane, CurvePoset), String> {
    let p = plane(spec)?;
    let curves = enumerate_curves(&p).map_err(|e| e.to_string())?;
    let poset = build_poset(&p, curves, exec).map_err(|e| e.to_string())?;
    Ok((p, poset))
}

fn four_by_four(exec: Exec) -> Result<String, String> {
    let (_, poset) = space_of(PlaneSpec::khalimsky(4, 4), exec)?;
    let r = poset.report();
    ensure!(r.curves == 11, "{} curves, expected 11", r.curves);
    ensure!(r.maximal == 1, "{} maximal curves, expected 1", r.maximal);
    ensure!(r.contractible && r.core_size == 1, "core has {} points", r.core_size);
    Ok(format!(
        "11 curves, 1 maximal, core 1, closure added {}",
        r.closure_added
    ))
}

fn five_by_five(exec: Exec) -> Result<String, String> {
    let (_, poset) = space_of(PlaneSpec::khalimsky_open_corner(5, 5), exec)?;
    let r = poset.report();
    let (maximal, _) = poset.extremal_elements();
    ensure!(r.curves == 87, "{} curves, expected 87", r.curves);
    ensure!(
        r.maximal == 1 && r.minimal == 13,
        "{} maximal, {} minimal",
        r.maximal,
        r.minimal
    );
    let top = maximal[0];
    let below = poset.covers().iter().filter(|&&(hi, _)| hi == top).count();
    ensure!(below == 4, "maximal curve has {below} lower covers");
    ensure!(r.connected, "curve space is disconnected");
    ensure!(r.contractible, "core has {} points", r.core_size);
    Ok(format!(
        "87 curves, 1 max (4 lower covers), 13 min, {} covers, height {}, closure added {}",
        r.covers, r.height, r.closure_added
    ))
}

fn three_by_n(_: Exec) -> Result<String, String> {
    let mut mismatched_open = Vec::new();
    for n in 3..=12 {
        let closed = count_3xn(n, true).map_err(|e| e.to_string())?;
        let expected = (n - 1) * (n - 2) / 2;
        ensure!(closed == expected, "3x{n}: {closed} curves, expected {expected}");
        let open = count_3xn(n, false).map_err(|e| e.to_string())?;
        if open != expected {
            mismatched_open.push(format!("3x{n}:{open}"));
        }
    }
    Ok(if mismatched_open.is_empty() {
        "n=3..12 match; open-end variant matches too".into()
    } else {
        format!(
            "n=3..12 match; open-end variant differs at {}",
            mismatched_open.join(",")
        )
    })
}

fn metric_suite(_: Exec) -> Result<String, String> {
    let p = plane(PlaneSpec::khalimsky(9, 9))?;
    let all = p.space().whole();
    let n = p.len();
    let dist: Vec<Vec<Option<u32>>> = (0..n)
        .map(|x| bfs_levels(&all, x).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let d = |x: usize, y: usize| dist[x][y].expect("plane is connected");
    for x in 0..n {
        for y in 0..n {
            ensure!((d(x, y) == 0) == (x == y), "identity fails at {x},{y}");
            ensure!(d(x, y) == d(y, x), "symmetry fails at {x},{y}");
            for z in 0..n {
                ensure!(d(x, z) <= d(x, y) + d(y, z), "triangle fails at {x},{y},{z}");
            }
        }
    }
    let pure: Vec<usize> = (0..n).filter(|&x| p.is_pure(x)).collect();
    for &a in &pure {
        for &b in &pure {
            let cheb = p.coord(a).chebyshev(p.coord(b));
            ensure!(d(a, b) == cheb, "pure pair {a},{b}: {} vs {cheb}", d(a, b));
        }
        for q in (0..n).filter(|&q| p.kind(q) == PointKind::Open) {
            for r in (0..n).filter(|&r| p.kind(r) == PointKind::Closed) {
                ensure!(d(a, q) != d(a, r), "parity clash from {a}: {q} and {r}");
            }
        }
        for y in 0..n {
            ensure!(
                p.coord(a).chebyshev(p.coord(y)) <= d(a, y),
                "ball bound fails at {a},{y}"
            );
        }
    }
    let mut arcs = 0usize;
    for x in 0..n {
        for y in 0..n {
            let g = geodesics(&all, x, y).map_err(|e| e.to_string())?;
            ensure!(g.distance == Distance::Finite(d(x, y)), "geodesic length at {x},{y}");
            for arc in &g.arcs {
                ensure!(is_cots_arc(p.space(), arc), "geodesic {x}->{y} is not an arc");
                for (i, &c) in arc.iter().enumerate() {
                    ensure!(d(x, c) as usize == i, "geodesic {x}->{y} is not distance-monotone");
                }
            }
            arcs += g.arcs.len();
            let (a, b) = (p.coord(x), p.coord(y));
            let diagonal = (a.0 - b.0).abs() == (a.1 - b.1).abs();
            if p.is_pure(x) && p.is_pure(y) && diagonal {
                ensure!(g.arcs.len() == 1, "{} geodesics between {a} and {b}", g.arcs.len());
                let on_diag = g.arcs[0].iter().all(|&c| {
                    let c = p.coord(c);
                    (c.0 - a.0).abs() == (c.1 - a.1).abs()
                });
                ensure!(on_diag, "geodesic {a}->{b} leaves the diagonal");
            }
        }
    }
    Ok(format!("{n} points, {arcs} geodesics checked"))
}

fn weak_touch(p: &DigitalPlane, curve: &JordanCurve, q: Coord) -> Result<bool, String> {
    let on: Vec<usize> = p
        .adjacency(q)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|c| curve.contains(*c))
        .map(|c| p.id(c).expect("in plane"))
        .collect();
    let connected = p
        .space()
        .subspace(on.iter().copied())
        .map_err(|e| e.to_string())?
        .is_connected();
    Ok(connected && on.len() % 2 == 1 && on.len() >= 3)
}

fn shrink_all(_: Exec) -> Result<String, String> {
    let p = plane(PlaneSpec::khalimsky_open_corner(5, 5))?;
    let curves = enumerate_curves(&p).map_err(|e| e.to_string())?;
    let mut moves = 0;
    for curve in &curves {
        let m = minimalize(&p, curve, None).map_err(|e| e.to_string())?;
        let fence = &m.fence;
        ensure!(fence.first() == curve, "fence does not start at its curve");
        for (k, w) in fence.curves().windows(2).enumerate() {
            let (j, next) = (&w[0], &w[1]);
            ensure!(is_jordan_curve(&p, next.points()), "step {k} is not a Jordan curve");
            let ij = j.regions(&p).map_err(|e| e.to_string())?.interior;
            let ik = next.regions(&p).map_err(|e| e.to_string())?.interior;
            ensure!(
                ik.len() + 1 == ij.len(),
                "step {k} changes the interior by {}",
                ij.len() as i64 - ik.len() as i64
            );
            let ok = match fence.directions()[k] {
                Direction::Up => curve_leq(&p, j, next),
                Direction::Down => curve_leq(&p, next, j),
            }
            .map_err(|e| e.to_string())?;
            ensure!(ok, "step {k} is not comparable as recorded");
            let q = m.absorbed[k];
            ensure!(weak_touch(&p, j, q)?, "absorbed {q} touches the curve badly");
            let mut int_ids = p.ids(&ij).map_err(|e| e.to_string())?;
            int_ids.sort_unstable();
            let local = int_ids
                .binary_search(&p.id(q).expect("in plane"))
                .expect("q is interior");
            let weak = p
                .space()
                .induced(&int_ids)
                .is_weak_point(local)
                .map_err(|e| e.to_string())?;
            ensure!(weak, "absorbed {q} is not weak in the interior");
            moves += 1;
        }
        let last = fence.last().regions(&p).map_err(|e| e.to_string())?.interior;
        ensure!(last == vec![m.basepoint], "fence ends with interior {last:?}");
    }
    Ok(format!("{} curves, {moves} moves", curves.len()))
}

fn morph_all(exec: Exec) -> Result<String, String> {
    let (p, poset) = space_of(PlaneSpec::khalimsky_open_corner(5, 5), exec)?;
    let n = poset.len();
    let leq = |a: &JordanCurve, b: &JordanCurve| match (poset.index_of(a), poset.index_of(b)) {
        (Some(x), Some(y)) => poset.direct_leq(x, y),
        _ => false,
    };
    let rows = map_range(exec, n, |a| -> Result<usize, String> {
        let mut longest = 0;
        for b in 0..n {
            let (from, to) = (&poset.curves()[a], &poset.curves()[b]);
            let f = morph(&p, from, to).map_err(|e| format!("morph {a}->{b}: {e}"))?;
            ensure!(
                f.first() == from && f.last() == to,
                "morph {a}->{b} has wrong endpoints"
            );
            ensure!(
                f.first_invalid_step(leq).is_none(),
                "morph {a}->{b} has an invalid step"
            );
            longest = longest.max(f.len());
        }
        Ok(longest)
    });
    let longest = rows
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    Ok(format!("{} pairs, longest fence {longest}", n * n))
}

fn antisymmetry_and_extremes(exec: Exec) -> Result<String, String> {
    let mut notes = Vec::new();
    for (label, spec) in [
        ("4x4", PlaneSpec::khalimsky(4, 4)),
        ("5x5", PlaneSpec::khalimsky_open_corner(5, 5)),
    ] {
        let (p, poset) = space_of(spec, exec)?;
        let n = poset.len();
        for a in 0..n {
            for b in a + 1..n {
                ensure!(
                    !(poset.direct_leq(a, b) && poset.direct_leq(b, a)),
                    "{label}: curves {a},{b} equivalent"
                );
            }
        }
        let (maximal, minimal) = poset.extremal_elements();
        let kinds = |c: &JordanCurve| -> BTreeSet<PointKind> {
            c.points().iter().map(|&x| p.classify(x).expect("in plane")).collect()
        };
        let no_open: Vec<usize> = (0..n)
            .filter(|&k| !kinds(&poset.curves()[k]).contains(&PointKind::Open))
            .collect();
        let no_closed: Vec<usize> = (0..n)
            .filter(|&k| !kinds(&poset.curves()[k]).contains(&PointKind::Closed))
            .collect();
        ensure!(
            no_open.iter().all(|k| maximal.contains(k)),
            "{label}: a curve without open points is not maximal"
        );
        ensure!(
            no_closed.iter().all(|k| minimal.contains(k)),
            "{label}: a curve without closed points is not minimal"
        );
        notes.push(format!(
            "{label}: max {}/{} no-open, min {}/{} no-closed",
            no_open.len(),
            maximal.len(),
            no_closed.len(),
            minimal.len()
        ));
    }
    Ok(notes.join("; "))
}

fn minimal_space_iso(exec: Exec) -> Result<String, String> {
    let mut sizes = Vec::new();
    for size in 5..=7 {
        for spec in [
            PlaneSpec::khalimsky(size, size),
            PlaneSpec::khalimsky_open_corner(size, size),
        ] {
            let p = plane(spec)?;
            let m = minimal_curve_space(&p, exec).map_err(|e| e.to_string())?;
            ensure!(
                m.dual_isomorphic,
                "{size}x{size}: order does not match the dual inner plane"
            );
            ensure!(
                m.poset.len() == (size - 2) * (size - 2),
                "{size}x{size}: {} minimal curves",
                m.poset.len()
            );
        }
        sizes.push(format!("{size}x{size}"));
    }
    Ok(format!("{} (both parities)", sizes.join(", ")))
}

fn grid_cycles(exec: Exec) -> Result<String, String> {
    let expected = [0u64, 1, 13, 213, 9349];
    for (n, &e) in expected.iter().enumerate() {
        let got = count_grid_cycles(n, exec).map_err(|e| e.to_string())?;
        ensure!(got == e, "c({n}) = {got}, expected {e}");
    }
    Ok("c(0..4) = 0, 1, 13, 213, 9349".into())
}

fn marcus_wyse(exec: Exec) -> Result<String, String> {
    let (p, poset) = space_of(PlaneSpec::marcus_wyse(5, 5), exec)?;
    let n = poset.len();
    ensure!(n >= 2, "only {n} curves");
    let comparable = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && poset.direct_leq(a, b))
        .count();
    ensure!(comparable == 0, "{comparable} comparable pairs");
    ensure!(!poset.report().connected, "curve space is connected");
    let s = p.space();
    let edges: usize = s.points().map(|x| s.neighbors(x).len()).sum::<usize>() / 2;
    ensure!(s.is_connected(), "plane is disconnected");
    let rank = cycle_rank(s);
    ensure!(
        rank == edges + 1 - s.len(),
        "cycle rank {rank} vs E - V + 1 = {}",
        edges + 1 - s.len()
    );
    Ok(format!("{n} curves, none comparable; cycle rank {rank}"))
}

fn definitions(_: Exec) -> Result<String, String> {
    let p4 = plane(PlaneSpec::khalimsky(4, 4))?;
    let coords: Vec<Coord> = p4.coords().collect();
    let mut subsets = 0;
    let mut curves4 = 0;
    for bits in 0u32..1 << 16 {
        if bits.count_ones() > 12 {
            continue;
        }
        let set: Vec<Coord> = (0..16).filter(|k| bits >> k & 1 == 1).map(|k| coords[k]).collect();
        let a = is_jordan_curve(&p4, &set);
        ensure!(
            a == is_jordan_curve_by_deletion(&p4, &set),
            "4x4 definitions disagree on {set:?}"
        );
        subsets += 1;
        curves4 += a as usize;
    }
    ensure!(curves4 == 11, "{curves4} curve subsets of 4x4");

    let p5 = plane(PlaneSpec::khalimsky_open_corner(5, 5))?;
    let curves5 = enumerate_curves(&p5).map_err(|e| e.to_string())?;
    for c in &curves5 {
        ensure!(
            is_jordan_curve_by_deletion(&p5, c.points()),
            "{:?} fails the deletion test",
            c.points()
        );
        ensure!(c.len() % 2 == 0, "odd curve {:?}", c.points());
    }

    let mut avoiding = 0;
    for size in [5usize, 6, 7] {
        let p = plane(PlaneSpec::khalimsky(size, size))?;
        for c in enumerate_curves(&p).map_err(|e| e.to_string())? {
            ensure!(c.len() % 2 == 0, "odd curve {:?}", c.points());
            if c.meets_raw_border(&p) {
                continue;
            }
            let ids = c.ids();
            let rest: Vec<usize> = (0..p.len()).filter(|x| !ids.contains(x)).collect();
            let parts = p.space().subspace(rest).map_err(|e| e.to_string())?.components().len();
            ensure!(
                parts == 2,
                "{size}x{size}: complement of {:?} has {parts} parts",
                c.points()
            );
            avoiding += 1;
        }
    }

    let regions: Vec<(BTreeSet<Coord>, BTreeSet<Coord>)> = curves5
        .iter()
        .map(|c| {
            let r = c.regions(&p5).expect("same plane");
            let inside: BTreeSet<Coord> = r.interior.into_iter().collect();
            let closure = inside.iter().copied().chain(c.points().iter().copied()).collect();
            (inside, closure)
        })
        .collect();
    let mut nested = 0;
    for (j, (inside_j, closure_j)) in regions.iter().enumerate() {
        for (k, (inside_k, _)) in regions.iter().enumerate() {
            if j != k && curves5[k].points().iter().all(|x| closure_j.contains(x)) {
                ensure!(
                    inside_k.is_subset(inside_j),
                    "curve {k} inside {j} has a larger interior"
                );
                nested += 1;
            }
        }
    }
    Ok(format!(
        "{subsets} subsets of 4x4, {} curves of 5x5, {avoiding} border-free curves, {nested} nested pairs",
        curves5.len()
    ))
}

fn duals(_: Exec) -> Result<String, String> {
    let ends = [EndpointKind::Open, EndpointKind::Closed];
    let mut pairs = 0;
    for lx in 3..=6 {
        for ly in 3..=6 {
            for ex in ends {
                for ey in ends {
                    let x = Cots::new(lx, ex).map_err(|e| e.to_string())?;
                    let y = Cots::new(ly, ey).map_err(|e| e.to_string())?;
                    let prod = x.space().product(y.space());
                    ensure!(
                        prod.dual() == x.space().dual().product(&y.space().dual()),
                        "dual does not distribute over {lx}x{ly}"
                    );
                    let px = (ex == EndpointKind::Open) as u8;
                    let py = (ey == EndpointKind::Open) as u8;
                    let d = plane(PlaneSpec::khalimsky(lx, ly).with_parities(px, py))?;
                    ensure!(d.space() == &prod, "plane {lx}x{ly} is not the COTS product");
                    let flipped = plane(d.spec().dual())?;
                    ensure!(flipped.space() == &d.space().dual(), "dual plane {lx}x{ly} differs");
                    for id in 0..d.len() {
                        let swapped = match d.kind(id) {
                            PointKind::Open => PointKind::Closed,
                            PointKind::Closed => PointKind::Open,
                            PointKind::Mixed => PointKind::Mixed,
                        };
                        ensure!(flipped.kind(id) == swapped, "kinds not swapped at {}", d.coord(id));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} COTS pairs"))
}
