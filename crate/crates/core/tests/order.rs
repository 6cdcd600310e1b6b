use std::collections::BTreeSet;

use digitop::curve_space::enumerate_curves;
use digitop::homotopy::{curve_leq, minimal_path, minimalize, morph, shrink, standard_parameterization};
use digitop::jordan::minimal_curve;
use digitop::{Coord, DigitalPlane, Direction, JordanCurve, PlaneSpec, Topology};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Searches for a pair of order-preserving maps from one even finite circle
/// onto `lower` and `upper`, each winding once without backtracking, with the
/// first pointwise below the second. Even circle points are local maxima.
fn circle_maps_leq(plane: &DigitalPlane, lower: &JordanCurve, upper: &JordanCurve) -> bool {
    let space = plane.space();
    let j = plane.ids(&lower.cyclic_order()).unwrap();
    let k_fwd = plane.ids(&upper.cyclic_order()).unwrap();
    let k_rev: Vec<usize> = k_fwd.iter().rev().copied().collect();
    let (n, m) = (j.len(), k_fwd.len());
    for k in [&k_fwd, &k_rev] {
        for shift in 0..m {
            let f = |a: usize| j[a % n];
            let g = |b: usize| k[(b + shift) % m];
            for start_parity in 0..2usize {
                if !space.leq(f(0), g(0)) {
                    continue;
                }
                let mut seen = BTreeSet::new();
                let mut stack = vec![(0usize, 0usize, start_parity)];
                seen.insert(stack[0]);
                while let Some((a, b, s)) = stack.pop() {
                    if a == n && b == m && s == start_parity {
                        return true;
                    }
                    for (da, db) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                        let (a2, b2) = (a + da, b + db);
                        if a2 > n || b2 > m {
                            continue;
                        }
                        // Continuity along the edge s -> s+1 for both maps.
                        let ok = |x: usize, y: usize| if s == 0 { space.leq(y, x) } else { space.leq(x, y) };
                        if !ok(f(a), f(a2)) || !ok(g(b), g(b2)) || !space.leq(f(a2), g(b2)) {
                            continue;
                        }
                        let next = (a2, b2, 1 - s);
                        if seen.insert(next) {
                            stack.push(next);
                        }
                    }
                }
            }
        }
    }
    false
}

fn check_all_pairs(spec: PlaneSpec) {
    let p = DigitalPlane::new(spec).unwrap();
    let curves = enumerate_curves(&p).unwrap();
    let mut related = 0;
    for a in &curves {
        for b in &curves {
            let expected = circle_maps_leq(&p, a, b);
            related += expected as usize;
            assert_eq!(
                curve_leq(&p, a, b).unwrap(),
                expected,
                "{:?} vs {:?}",
                a.points(),
                b.points()
            );
        }
    }
    if spec.topology == Topology::Khalimsky {
        assert!(related > curves.len());
    } else {
        assert_eq!(related, curves.len());
    }
}

#[test]
fn order_matches_circle_maps_on_four_by_four() {
    check_all_pairs(PlaneSpec::khalimsky(4, 4));
    check_all_pairs(PlaneSpec::khalimsky_open_corner(4, 4));
}

#[test]
fn order_matches_circle_maps_on_five_by_five() {
    check_all_pairs(PlaneSpec::khalimsky_open_corner(5, 5));
}

#[test]
fn order_matches_circle_maps_on_marcus_wyse() {
    check_all_pairs(PlaneSpec::marcus_wyse(4, 4));
}

#[test]
fn minimal_curves_reverse_the_plane_order() {
    for spec in [
        PlaneSpec::khalimsky(5, 5),
        PlaneSpec::khalimsky_open_corner(6, 6),
        PlaneSpec::khalimsky(7, 7),
    ] {
        let p = DigitalPlane::new(spec).unwrap();
        let inner: Vec<Coord> = p.inner_points().into_iter().map(|x| p.coord(x)).collect();
        let rings: Vec<JordanCurve> = inner.iter().map(|&c| minimal_curve(&p, c).unwrap()).collect();
        for (x, cx) in inner.iter().zip(&rings) {
            for (y, cy) in inner.iter().zip(&rings) {
                let (ix, iy) = (p.id(*x).unwrap(), p.id(*y).unwrap());
                assert_eq!(curve_leq(&p, cx, cy).unwrap(), p.space().leq(iy, ix), "{x:?} {y:?}");
            }
        }
    }
}

#[test]
fn minimal_path_is_a_valid_fence() {
    let p = DigitalPlane::khalimsky(7, 7).unwrap();
    let inner: Vec<Coord> = p.inner_points().into_iter().map(|x| p.coord(x)).collect();
    for &a in &inner {
        for &b in &inner {
            let fence = minimal_path(&p, a, b).unwrap();
            fence.validate(&p).unwrap();
            assert_eq!(fence.first(), &minimal_curve(&p, a).unwrap());
            assert_eq!(fence.last(), &minimal_curve(&p, b).unwrap());
            assert!(fence.curves().iter().all(|c| c.is_minimal(&p).unwrap()));
        }
    }
}

#[test]
fn random_morphs_validate() {
    let p = DigitalPlane::khalimsky(6, 6).unwrap();
    let curves = enumerate_curves(&p).unwrap();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let a = curves.choose(&mut rng).unwrap();
        let b = curves.choose(&mut rng).unwrap();
        let fence = morph(&p, a, b).unwrap();
        fence.validate(&p).unwrap();
        assert_eq!((fence.first(), fence.last()), (a, b));
        for (w, d) in fence.curves().windows(2).zip(fence.directions()) {
            let expected = match d {
                Direction::Up => curve_leq(&p, &w[0], &w[1]).unwrap(),
                Direction::Down => curve_leq(&p, &w[1], &w[0]).unwrap(),
            };
            assert!(expected);
        }
    }
}

#[test]
fn shrink_keeps_parameterizations_valid() {
    let p = DigitalPlane::new(PlaneSpec::khalimsky_open_corner(5, 5)).unwrap();
    for curve in enumerate_curves(&p).unwrap() {
        let regions = curve.regions(&p).unwrap();
        if regions.interior.len() < 2 {
            continue;
        }
        let param = standard_parameterization(&p, &curve).unwrap();
        assert!(param.is_valid_for(&p, &curve));
        for &x in regions.interior.iter().filter(|&&x| p.classify(x).unwrap().is_pure()) {
            let step = shrink(&p, &curve, &param, x).unwrap();
            assert!(step.parameterization.is_valid_for(&p, &step.curve));
            let after = step.curve.regions(&p).unwrap().interior;
            assert_eq!(after.len() + 1, regions.interior.len());
            assert!(after.contains(&x));
            assert!(!after.contains(&step.absorbed.unwrap()));
            assert!(after.iter().all(|c| regions.interior.contains(c)));
        }
    }
}

#[test]
fn minimalize_ends_at_the_basepoint_ring() {
    let p = DigitalPlane::khalimsky(6, 6).unwrap();
    for curve in enumerate_curves(&p).unwrap().iter().step_by(3) {
        let m = minimalize(&p, curve, None).unwrap();
        m.fence.validate(&p).unwrap();
        assert_eq!(m.fence.first(), curve);
        assert_eq!(m.fence.last(), &minimal_curve(&p, m.basepoint).unwrap());
        let size = curve.regions(&p).unwrap().interior.len();
        assert_eq!(m.absorbed.len() + 1, size);
    }
}

#[test]
fn explicit_basepoint_is_respected() {
    let p = DigitalPlane::khalimsky(7, 7).unwrap();
    let border = JordanCurve::new(&p, &p.adjusted_border().unwrap()).unwrap();
    for x in border.regions(&p).unwrap().interior {
        if p.classify(x).unwrap().is_pure() {
            let m = minimalize(&p, &border, Some(x)).unwrap();
            assert_eq!(m.basepoint, x);
            assert_eq!(m.fence.last(), &minimal_curve(&p, x).unwrap());
        } else {
            assert!(minimalize(&p, &border, Some(x)).is_err());
        }
    }
}

#[test]
fn morph_between_distinct_planes_is_rejected() {
    let a = DigitalPlane::khalimsky(5, 5).unwrap();
    let b = DigitalPlane::khalimsky(6, 6).unwrap();
    let ca = minimal_curve(&a, Coord(2, 2)).unwrap();
    let cb = minimal_curve(&b, Coord(2, 2)).unwrap();
    assert!(morph(&a, &ca, &cb).is_err());
}
