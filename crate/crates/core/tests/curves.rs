#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use digitop::curve_space::{build_poset, enumerate_curves, minimal_curve_space};
use digitop::jordan::{is_jordan_curve_by_deletion, lemma_checks, minimal_curve};
use digitop::{Coord, DigitalPlane, Exec, FiniteSpace, JordanCurve, PlaneSpec, PointKind};

/// Every connected vertex set whose induced graph has maximum degree two,
/// listed once each by extension-set growth from its smallest vertex.
fn connected_low_degree_sets(space: &FiniteSpace) -> Vec<Vec<usize>> {
    fn grow(space: &FiniteSpace, root: usize, set: &mut Vec<usize>, ext: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(set.clone());
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            let degree_ok = set.iter().all(|&x| {
                let d =
                    set.iter().filter(|&&y| space.comparable(x, y) && x != y).count() + space.comparable(x, w) as usize;
                d <= 2
            }) && set.iter().filter(|&&y| space.comparable(w, y)).count() <= 2;
            if !degree_ok {
                continue;
            }
            // New extension: current ext plus exclusive neighbours of w.
            let mut next = ext.clone();
            for &u in space.neighbors(w) {
                let exclusive = u > root
                    && !set.contains(&u)
                    && u != w
                    && !ext.contains(&u)
                    && !set.iter().any(|&s| space.comparable(s, u));
                if exclusive && !next.contains(&u) {
                    next.push(u);
                }
            }
            set.push(w);
            grow(space, root, set, next, out);
            set.pop();
        }
    }
    let mut out = Vec::new();
    for root in space.points() {
        let ext: Vec<usize> = space.neighbors(root).iter().copied().filter(|&u| u > root).collect();
        grow(space, root, &mut vec![root], ext, &mut out);
    }
    out
}

fn oracle_curves(plane: &DigitalPlane) -> BTreeSet<Vec<Coord>> {
    connected_low_degree_sets(plane.space())
        .into_iter()
        .filter(|s| s.len() >= 4)
        .map(|s| s.iter().map(|&x| plane.coord(x)).collect::<Vec<_>>())
        .filter(|pts| is_jordan_curve_by_deletion(plane, pts))
        .map(|pts| JordanCurve::new(plane, &pts).unwrap().points().to_vec())
        .collect()
}

#[test]
fn extension_oracle_finds_small_sets_once() {
    let p = DigitalPlane::khalimsky(3, 3).unwrap();
    let sets = connected_low_degree_sets(p.space());
    let distinct: BTreeSet<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort();
            s
        })
        .collect();
    assert_eq!(distinct.len(), sets.len());
    assert_eq!(sets.iter().filter(|s| s.len() == 1).count(), 9);
}

#[test]
fn enumeration_matches_oracle() {
    let specs = [
        PlaneSpec::khalimsky(4, 4),
        PlaneSpec::khalimsky(5, 5),
        PlaneSpec::khalimsky_open_corner(5, 5),
        PlaneSpec::khalimsky(5, 4).with_parities(1, 0),
        PlaneSpec::marcus_wyse(4, 4),
    ];
    for spec in specs {
        let p = DigitalPlane::new(spec).unwrap();
        let listed: BTreeSet<Vec<Coord>> = enumerate_curves(&p)
            .unwrap()
            .iter()
            .map(|c| c.points().to_vec())
            .collect();
        assert_eq!(listed, oracle_curves(&p), "{spec:?}");
    }
}

#[test]
fn enumeration_is_sorted_and_deterministic() {
    let p = DigitalPlane::new(PlaneSpec::khalimsky_open_corner(5, 5)).unwrap();
    let a = enumerate_curves(&p).unwrap();
    let b = enumerate_curves(&p).unwrap();
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[0].points() < w[1].points()));
}

#[test]
fn every_curve_passes_the_structural_report() {
    // Every 5x5 curve, and every seventh 6x6 curve to bound the run time.
    for (spec, stride) in [
        (PlaneSpec::khalimsky_open_corner(5, 5), 1),
        (PlaneSpec::khalimsky(6, 6), 7),
    ] {
        let p = DigitalPlane::new(spec).unwrap();
        for c in enumerate_curves(&p).unwrap().into_iter().step_by(stride) {
            let r = lemma_checks(&p, &c).unwrap();
            assert!(r.all_hold(), "{:?}: {r:?}", c.points());
            if let Some(f) = r.far_point {
                if f.kind.is_pure() {
                    assert!([3, 5, 7].contains(&f.touch_size));
                }
            }
        }
    }
}

#[test]
fn complementary_components_over_border_arcs() {
    let p = DigitalPlane::new(PlaneSpec::khalimsky_open_corner(5, 5)).unwrap();
    let border = JordanCurve::new(&p, &p.adjusted_border().unwrap()).unwrap();
    let order = border.cyclic_order();
    let n = order.len();
    for start in 0..n {
        for len in 1..n {
            let arc: BTreeSet<Coord> = (0..len).map(|t| order[(start + t) % n]).collect();
            let ids = |keep: bool| -> Vec<usize> {
                order
                    .iter()
                    .filter(|c| arc.contains(c) == keep)
                    .map(|&c| p.id(c).unwrap())
                    .collect()
            };
            let a = p.space().subspace(ids(true)).unwrap().components().len();
            let b = p.space().subspace(ids(false)).unwrap().components().len();
            assert_eq!((a, b), (1, 1));
        }
    }
}

#[test]
fn regions_partition_the_plane() {
    let p = DigitalPlane::khalimsky(6, 6).unwrap();
    for c in enumerate_curves(&p).unwrap() {
        let r = c.regions(&p).unwrap();
        let mut all: Vec<Coord> = r
            .interior
            .iter()
            .chain(&r.exterior)
            .copied()
            .chain(c.points().iter().copied())
            .collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), p.len());
        assert_eq!(r.interior.len() + r.exterior.len() + c.len(), p.len());
        assert!(!r.interior.is_empty());
        assert!(r.interior.iter().all(|&x| !p.on_raw_border(x)));
    }
}

#[test]
fn four_by_four_border_keeps_two_corners() {
    let p = DigitalPlane::khalimsky(4, 4).unwrap();
    let b = p.adjusted_border().unwrap();
    assert_eq!(b.len(), 10);
    let curve = JordanCurve::new(&p, &b).unwrap();
    assert_eq!(curve.regions(&p).unwrap().interior.len(), 4);
    let three = DigitalPlane::khalimsky(3, 3).unwrap();
    assert_eq!(three.adjusted_border().unwrap().len(), 8);
}

#[test]
fn border_curve_has_the_largest_interior() {
    let p = DigitalPlane::new(PlaneSpec::khalimsky_open_corner(5, 5)).unwrap();
    let border = JordanCurve::new(&p, &p.adjusted_border().unwrap()).unwrap();
    let curves = enumerate_curves(&p).unwrap();
    let best = curves
        .iter()
        .max_by_key(|c| c.regions(&p).unwrap().interior.len())
        .unwrap();
    assert_eq!(best, &border);
    let sizes: Vec<usize> = curves.iter().map(|c| c.regions(&p).unwrap().interior.len()).collect();
    assert_eq!(sizes.iter().filter(|&&s| s == 9).count(), 1);
}

#[test]
fn poset_dump_and_reduction() {
    let p = DigitalPlane::khalimsky(4, 4).unwrap();
    let poset = build_poset(&p, enumerate_curves(&p).unwrap(), Exec::Sequential).unwrap();
    let dump = poset.dump();
    let json = serde_json::to_value(&dump).unwrap();
    assert_eq!(json["curves"].as_array().unwrap().len(), 11);
    // Covers generate the order and none is implied by the others.
    let n = poset.len();
    let mut reach = vec![vec![false; n]; n];
    for (a, row) in reach.iter_mut().enumerate() {
        row[a] = true;
    }
    for &[lo, hi] in &dump.covers {
        reach[lo][hi] = true;
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if reach[a][k] && reach[k][b] {
                    reach[a][b] = true;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            assert_eq!(reach[a][b], poset.leq(a, b));
        }
    }
    for &[a, b] in &dump.leq_pairs {
        assert!(poset.leq(a, b) && a != b);
    }
}

#[test]
fn parallel_and_sequential_posets_agree() {
    let p = DigitalPlane::new(PlaneSpec::khalimsky_open_corner(5, 5)).unwrap();
    let curves = enumerate_curves(&p).unwrap();
    let a = build_poset(&p, curves.clone(), Exec::Sequential).unwrap();
    let b = build_poset(&p, curves, Exec::Parallel).unwrap();
    assert_eq!(a.dump(), b.dump());
    assert_eq!(a.to_dot(), b.to_dot());
}

#[test]
fn six_by_six_space_is_connected_and_contractible() {
    let p = DigitalPlane::khalimsky(6, 6).unwrap();
    let poset = build_poset(&p, enumerate_curves(&p).unwrap(), Exec::Parallel).unwrap();
    let r = poset.report();
    assert!(r.connected && r.contractible);
    assert_eq!(r.closure_added, 0);
}

#[test]
fn minimal_space_of_four_by_four() {
    let p = DigitalPlane::khalimsky(4, 4).unwrap();
    let m = minimal_curve_space(&p, Exec::Sequential).unwrap();
    assert_eq!(m.poset.len(), 4);
    assert!(m.dual_isomorphic);
    let tiny = DigitalPlane::khalimsky(2, 2).unwrap();
    assert!(minimal_curve_space(&tiny, Exec::Sequential).is_err());
}

#[test]
fn nested_curves_have_nested_interiors() {
    let p = DigitalPlane::khalimsky(6, 6).unwrap();
    let curves = enumerate_curves(&p).unwrap();
    let regions: Vec<BTreeSet<Coord>> = curves
        .iter()
        .map(|c| c.regions(&p).unwrap().interior.into_iter().collect())
        .collect();
    for (j, cj) in curves.iter().enumerate() {
        for (k, ck) in curves.iter().enumerate() {
            if ck.points().iter().all(|x| cj.contains(*x) || regions[j].contains(x)) {
                assert!(regions[k].is_subset(&regions[j]));
            }
        }
    }
    let ring = minimal_curve(&p, Coord(2, 2)).unwrap();
    assert_eq!(regions[curves.iter().position(|c| c == &ring).unwrap()].len(), 1);
}

#[test]
fn strictly_lower_curves_trade_closed_for_open_points() {
    let p = DigitalPlane::khalimsky(4, 4).unwrap();
    let poset = build_poset(&p, enumerate_curves(&p).unwrap(), Exec::Sequential).unwrap();
    let count =
        |c: &JordanCurve, kind: PointKind| c.points().iter().filter(|&&x| p.classify(x).unwrap() == kind).count();
    let mut strict = 0;
    for (a, ca) in poset.curves().iter().enumerate() {
        for (b, cb) in poset.curves().iter().enumerate() {
            if a != b && poset.leq(a, b) {
                strict += 1;
                let fewer_closed = count(ca, PointKind::Closed) < count(cb, PointKind::Closed);
                let more_open = count(ca, PointKind::Open) > count(cb, PointKind::Open);
                assert!(fewer_closed || more_open, "{:?} < {:?}", ca.points(), cb.points());
            }
        }
    }
    assert!(strict > 0);
}
