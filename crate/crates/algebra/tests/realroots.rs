use harborth_algebra::realroots::{cauchy_bound, isolate, refine, signature, sturm_count, RootError, Signature};
use harborth_algebra::{Dyadic, DyadicInterval, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn zp(c: &[i64]) -> ZPoly {
    ZPoly::from_i64s(c)
}

fn d(n: i64) -> Dyadic {
    Dyadic::from_int(n)
}

#[test]
fn counts() {
    assert_eq!(sturm_count(&zp(&[-2, 0, 1]), &d(-10), &d(10)), Ok(2));
    assert_eq!(sturm_count(&zp(&[1, 0, 1]), &d(-10), &d(10)), Ok(0));
    // endpoint at a root is nudged outward
    assert_eq!(sturm_count(&zp(&[-1, 1]), &d(1), &d(2)), Ok(1));
}

#[test]
fn isolation() {
    let iso = isolate(&zp(&[-2, 0, 1]));
    assert_eq!(iso.len(), 2);
    let (lo, hi) = &iso.intervals[1];
    assert!(lo.to_f64() < 1.4143 && hi.to_f64() > 1.4142);
    let iso = isolate(&zp(&[0, 0, 1]));
    assert_eq!(iso.len(), 1);
    assert_eq!(iso.polynomial, zp(&[0, 1]));
}

#[test]
fn refinement() {
    let iso = isolate(&zp(&[-2, 0, 1]));
    let (lo, hi) = refine(&iso, 1, 100);
    assert!(hi.sub(&lo) <= Dyadic::from_int(1).mul_pow2(-100));
    let x = DyadicInterval::new(lo.clone(), hi.clone(), 200);
    assert!(zp(&[-2, 0, 1]).eval_interval(&x).contains_zero());
    assert!(lo.to_f64() > 1.414213562373 && hi.to_f64() < 1.414213562374);
    // a wide target leaves the interval alone
    let (a, b) = refine(&iso, 1, -10);
    assert_eq!((a, b), iso.intervals[1].clone());
}

#[test]
fn signatures() {
    assert_eq!(signature(&zp(&[1, 0, 1])), Ok(Signature { real_count: 0, complex_pairs: 1 }));
    assert_eq!(signature(&zp(&[-2, 0, 0, 0, 0, 1])), Ok(Signature { real_count: 1, complex_pairs: 2 }));
    assert_eq!(signature(&zp(&[1, 2, 1])), Err(RootError::NotSquarefree));
}

/// Independent counter: interval subdivision; a box counts one root when
/// the derivative keeps its sign and the endpoint signs differ.
fn subdivision_count(p: &ZPoly, lo: Dyadic, hi: Dyadic, depth: u32) -> Option<usize> {
    let prec = 256;
    let x = DyadicInterval::new(lo.clone(), hi.clone(), prec);
    if !p.eval_interval(&x).contains_zero() {
        return Some(0);
    }
    let dp = p.derivative();
    if !dp.eval_interval(&x).contains_zero() {
        let a = p.eval_interval(&DyadicInterval::point(lo.clone(), prec));
        let b = p.eval_interval(&DyadicInterval::point(hi.clone(), prec));
        if a.contains_zero() || b.contains_zero() {
            return None;
        }
        return Some(usize::from(a.is_positive() != b.is_positive()));
    }
    if depth == 0 {
        return None;
    }
    let mid = lo.add(&hi).mul_pow2(-1);
    if p.eval_interval(&DyadicInterval::point(mid.clone(), prec)).contains_zero() {
        return None;
    }
    Some(subdivision_count(p, lo, mid.clone(), depth - 1)? + subdivision_count(p, mid, hi, depth - 1)?)
}

fn squarefree_poly() -> impl Strategy<Value = ZPoly> {
    (1usize..=10)
        .prop_flat_map(|deg| (prop::collection::vec(-30i64..=30, deg), 1i64..=10))
        .prop_map(|(mut cs, l)| {
            cs.push(l);
            ZPoly::from_i64s(&cs)
        })
        .prop_filter("squarefree", |p| p.is_squarefree())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(220))]

    #[test]
    fn sturm_agrees_with_subdivision(p in squarefree_poly()) {
        let b = cauchy_bound(&p);
        let s = sturm_count(&p, &b.neg(), &b).unwrap();
        if let Some(o) = subdivision_count(&p, b.neg(), b.clone(), 80) {
            prop_assert_eq!(s, o);
        }
        let iso = isolate(&p);
        prop_assert_eq!(iso.len(), s);
        for w in iso.intervals.windows(2) {
            prop_assert!(w[0].1 <= w[1].0);
        }
        for i in 0..iso.len() {
            let (lo, hi) = refine(&iso, i, 60);
            prop_assert!(p.eval_interval(&DyadicInterval::new(lo, hi, 128)).contains_zero());
        }
    }

    #[test]
    fn real_count_invariant_under_reflection_and_scaling(p in squarefree_poly(), c in 1i64..=7) {
        let r = signature(&p).unwrap().real_count;
        prop_assert_eq!(signature(&p.reflect()).unwrap().real_count, r);
        // x -> c x
        let scaled = ZPoly::new(p.coeffs().iter().enumerate().map(|(i, a)| a * BigInt::from(c).pow(i as u32)).collect());
        prop_assert_eq!(signature(&scaled).unwrap().real_count, r);
    }
}
