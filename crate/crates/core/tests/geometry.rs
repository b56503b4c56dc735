use harborth::geometry::*;
use harborth::golden::GoldenTable;
use harborth_algebra::algnum::{zero_test, AlgebraicNumber, ZeroTest};
use harborth_algebra::dyadic::parse_decimal;
use harborth_algebra::DyadicInterval;
use num_rational::BigRational;

fn q(s: &str) -> BigRational {
    parse_decimal(s).unwrap()
}

fn golden_t(prec: u32) -> DyadicInterval {
    DyadicInterval::from_rational(&q(&GoldenTable::get().numerics.t), prec)
}

fn close(iv: &DyadicInterval, v: &BigRational, tol: &BigRational) -> bool {
    &iv.lo_rational() - tol <= *v && *v <= &iv.hi_rational() + tol
}

#[test]
fn equilateral_and_disjoint_circles() {
    let p = |x: i64, y: i64| Point::new(Num::new(DyadicInterval::from_int(x, 128)), Num::new(DyadicInterval::from_int(y, 128)));
    let one = BigRational::from_integer(1.into());
    let r = circ_circ(&p(0, 0), &one, &p(1, 0), &one, Branch::Left).unwrap();
    assert!(r.x.iv.contains_rational(&q("0.5")));
    assert!((r.y.mid_f64() - 3f64.sqrt() / 2.0).abs() < 1e-15);
    assert_eq!(circ_circ(&p(0, 0), &one, &p(3, 0), &one, Branch::Left).unwrap_err(), GeomError::NoIntersection);
}

#[test]
fn numeric_block_matches() {
    let g = GoldenTable::get();
    let cfg = build_config(&golden_t(200), 200).unwrap();
    let tol = q("0.000000000001");
    for name in ['B', 'D', 'E', 'F', 'G', 'H', 'J'] {
        let (x, y) = g.point(&name.to_string()).unwrap();
        let p = cfg.point(name).unwrap();
        assert!(close(&p.x.iv, &x, &tol), "{name}.x {}", p.x.iv);
        assert!(close(&p.y.iv, &y, &tol), "{name}.y {}", p.y.iv);
    }
    // the 15-digit height only makes the last constraint small
    let mut cs = cfg.constraints().unwrap();
    let (_, ortho) = cs.pop().unwrap();
    assert!(ortho.mid_f64().abs() < 1e-13);
    for (label, r) in cs {
        assert!(r.iv.contains_zero(), "{label}");
        assert!(r.iv.width_at_most_pow2(5 - 190), "{label}");
    }
}

#[test]
fn degenerate_and_infeasible_heights() {
    let cfg = build_config(&DyadicInterval::from_int(0, 128), 128).unwrap();
    assert!(cfg.point('B').unwrap().y.iv.contains_zero());
    let far = DyadicInterval::from_rational(&q("0.14"), 128);
    assert_eq!(build_config(&far, 128).unwrap_err(), GeomError::NoIntersection);
}

#[test]
fn frames_round_trip_and_anchor_points() {
    let cfg = build_config(&golden_t(256), 256).unwrap();
    let k = cfg.transform(Frame::K).unwrap();
    let a = k.point('A').unwrap();
    assert!((a.x.mid_f64() - 0.995049481192288).abs() < 1e-14);
    let back = k.transform(Frame::A).unwrap().transform(Frame::K).unwrap();
    for (n, p) in &k.points {
        let r = back.point(*n).unwrap();
        assert!(p.x.iv.sub(&r.x.iv).width_at_most_pow2(-200));
        assert!(p.x.iv.intersect(&r.x.iv).is_some() && p.y.iv.intersect(&r.y.iv).is_some());
    }
    let f = cfg.transform(Frame::F).unwrap();
    let d = f.point('D').unwrap();
    assert!(d.y.iv.contains_zero());
    assert!(f.point('F').unwrap().x.iv.contains_zero());
    let mirrored = cfg.transform(Frame::JMirror).unwrap();
    assert!(mirrored.point('H').unwrap().y.mid_f64().abs() < 1e-13);
    assert!(mirrored.point('J').unwrap().x.iv.contains_zero());
    for f in [Frame::F, Frame::K, Frame::JMirror] {
        let c = cfg.transform(f).unwrap();
        for (label, r) in c.constraints().unwrap() {
            if !label.starts_with('(') {
                assert!(r.iv.contains_zero(), "{f:?} {label}");
            }
        }
    }
    let mut partial = cfg.clone();
    partial.points.remove(&'J');
    assert_eq!(partial.transform(Frame::K).unwrap_err(), GeomError::MissingAnchor('J'));
}

#[test]
fn exact_construction_at_rational_height() {
    let cfg = tower_build_rational(&q("0.125")).unwrap();
    for (label, r) in cfg.constraints().unwrap().into_iter().take(13) {
        assert_eq!(zero_test(&r), ZeroTest::ProvedZero, "{label}");
    }
    let (_, last) = cfg.constraints().unwrap().pop().unwrap();
    assert!(matches!(zero_test(&last), ZeroTest::ProvedNonzero(_)));
}

#[test]
fn exact_construction_over_pt_field() {
    let pt = GoldenTable::get().minpoly("P_T").unwrap();
    let t = AlgebraicNumber::root_in(&pt, &q("0.12"), &q("0.13")).unwrap();
    let cfg = tower_build(&t).unwrap();
    for (label, r) in cfg.constraints().unwrap() {
        assert_eq!(zero_test(&r), ZeroTest::ProvedZero, "{label}");
    }
}
