use harborth_algebra::algnum::*;
use harborth_algebra::poly::ZPoly;
use harborth_algebra::ring::rat;
use proptest::prelude::*;

fn sqrt_int(n: i64) -> AlgebraicNumber {
    AlgebraicNumber::from_int(n).sqrt().unwrap()
}

#[test]
fn sqrt2_sum_and_product() {
    let r2 = sqrt_int(2);
    assert_eq!(r2.minpoly(), &ZPoly::from_i64s(&[-2, 0, 1]));
    let z = alg_arith(&r2, &r2.neg(), ArithOp::Add).unwrap();
    assert!(z.is_zero());
    assert_eq!(z.minpoly(), &ZPoly::from_i64s(&[0, 1]));
    let two = alg_arith(&r2, &r2, ArithOp::Mul).unwrap();
    assert_eq!(two.minpoly(), &ZPoly::from_i64s(&[-2, 1]));
    assert_eq!(two.as_rational(), Some(&rat(2, 1)));
}

#[test]
fn nested_radical_extremal_value() {
    // (1/4)·√(7 − 3√5)
    let r5 = sqrt_int(5);
    let inner = alg_arith(&AlgebraicNumber::from_int(7), &alg_arith(&AlgebraicNumber::from_int(3), &r5, ArithOp::Mul).unwrap(), ArithOp::Sub).unwrap();
    let b = alg_arith(&inner.sqrt().unwrap(), &AlgebraicNumber::from_int(4), ArithOp::Div).unwrap();
    assert_eq!(b.minpoly(), &ZPoly::from_i64s(&[1, 0, -56, 0, 64]));
    assert_eq!(b.to_decimal(12), "0.135045378369");
}

#[test]
fn division_and_errors() {
    let r3 = sqrt_int(3);
    let q = alg_arith(&AlgebraicNumber::from_int(1), &r3, ArithOp::Div).unwrap();
    assert_eq!(q.minpoly(), &ZPoly::from_i64s(&[-1, 0, 3]));
    assert!(q.signum() > 0);
    assert_eq!(alg_arith(&r3, &AlgebraicNumber::zero(), ArithOp::Div).unwrap_err(), AlgError::DivisionByZero);
    assert_eq!(AlgebraicNumber::from_int(-2).sqrt().unwrap_err(), AlgError::NegativeRadicand);
    let p = ZPoly::from_i64s(&[-1, 0, 1]);
    assert_eq!(AlgebraicNumber::new(&p, &rat(0, 1), &rat(2, 1)).unwrap_err(), AlgError::NotIrreducible);
    let p = ZPoly::from_i64s(&[-2, 0, 1]);
    assert_eq!(AlgebraicNumber::new(&p, &rat(-2, 1), &rat(2, 1)).unwrap_err(), AlgError::NotIsolating(2));
}

#[test]
fn root_in_picks_the_factor() {
    // (x² − 2)(x² − 3)
    let p = ZPoly::from_i64s(&[6, 0, -5, 0, 1]);
    let x = AlgebraicNumber::root_in(&p, &rat(16, 10), &rat(18, 10)).unwrap();
    assert_eq!(x.minpoly(), &ZPoly::from_i64s(&[-3, 0, 1]));
    assert_eq!(AlgebraicNumber::real_roots(&p).len(), 4);
}

#[test]
fn radicals_examples() {
    let v = radicals_criterion(&ZPoly::from_i64s(&[-2, 0, 0, 0, 0, 1])).unwrap();
    assert_eq!(v.verdict, Verdict::SolvableByRadicals);
    assert_eq!(v.real_root_count, 1);
    let v = radicals_criterion(&ZPoly::from_i64s(&[-2, 0, 0, 0, 1])).unwrap();
    assert_eq!(v.verdict, Verdict::CriterionInapplicable);
    // x⁵ − 4x + 2: Eisenstein at 2, three real roots
    let v = radicals_criterion(&ZPoly::from_i64s(&[2, -4, 0, 0, 0, 1])).unwrap();
    assert_eq!((v.real_root_count, v.verdict), (3, Verdict::NotSolvable));
    assert!(matches!(radicals_criterion(&ZPoly::from_i64s(&[-1, 0, 1])), Err(AlgError::NotIrreducible)));
}

fn shift(p: &ZPoly, c: i64) -> ZPoly {
    p.compose(&ZPoly::from_i64s(&[c, 1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn radicals_verdict_is_shift_and_reflection_invariant(c in -6i64..6, neg in any::<bool>()) {
        let p = ZPoly::from_i64s(&[2, -4, 0, 0, 0, 1]);
        let mut q = shift(&p, c);
        if neg { q = q.reflect(); }
        let a = radicals_criterion(&p).unwrap();
        let b = radicals_criterion(&q).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
    }

    #[test]
    fn sum_minpoly_vanishes_at_sum(a in 2i64..30, b in 2i64..30) {
        let x = sqrt_int(a);
        let y = sqrt_int(b);
        let s = alg_arith(&x, &y, ArithOp::Add).unwrap();
        let e = s.enclosure(200);
        prop_assert!(s.minpoly().eval_interval(&e.with_precision(260)).contains_zero());
        let f = (a as f64).sqrt() + (b as f64).sqrt();
        prop_assert!((s.approx() - f).abs() < 1e-9);
    }
}

#[test]
fn tower_folds_over_rational_base() {
    // T = 1/2: √(1 − T²) = √3/2 already lies in Q(√3)
    let field = BaseField::rational(rat(1, 2));
    let tower = Tower::new(&field);
    let t = TowerElement::from_base(&tower, LElem::gen(&field));
    let one = TowerElement::from_int(&tower, 1);
    let s = one.sub(&t.square()).sqrt(1).unwrap();
    assert_eq!(s.tower().depth(), 0);
    assert_eq!(s.as_base().unwrap(), &LElem::sqrt3(&field).scale(&rat(1, 2)));
    assert_eq!(zero_test(&s.square().add(&t.square()).sub(&one)), ZeroTest::ProvedZero);
}

#[test]
fn tower_adjoins_and_tests_zero() {
    let field = BaseField::rational(rat(1, 8));
    let tower = Tower::new(&field);
    let big_t = TowerElement::from_base(&tower, LElem::gen(&field));
    let one = TowerElement::from_int(&tower, 1);
    let t = one.sub(&big_t.square()).sqrt(1).unwrap();
    assert_eq!(t.tower().depth(), 1);
    let res = t.square().add(&big_t.square()).sub(&one);
    assert_eq!(zero_test(&res), ZeroTest::ProvedZero);
    // √(t + 2) needs a second layer; its square folds back
    let u = t.add(&TowerElement::from_int(&tower, 2)).sqrt(-1).unwrap();
    assert_eq!(u.tower().depth(), 2);
    assert!(u.interval(64).is_negative());
    assert_eq!(zero_test(&u.square().sub(&t).sub(&TowerElement::from_int(&tower, 2))), ZeroTest::ProvedZero);
    // (3 + t)² has an exact root
    let sq = t.add(&TowerElement::from_int(&tower, 3)).square();
    let r = sq.sqrt(1).unwrap();
    assert_eq!(r.tower().depth(), 1);
    assert_eq!(zero_test(&r.sub(&t).sub(&TowerElement::from_int(&tower, 3))), ZeroTest::ProvedZero);
    match zero_test(&t.sub(&TowerElement::from_rational(&tower, rat(999, 1000)))) {
        ZeroTest::ProvedNonzero(iv) => assert!(iv.is_negative()),
        other => panic!("{other:?}"),
    }
    let inv = u.inv().unwrap();
    assert_eq!(zero_test(&inv.mul(&u).sub(&one)), ZeroTest::ProvedZero);
    let neg = TowerElement::from_int(&tower, -1).sqrt(1);
    assert!(matches!(neg, Err(TowerError::NegativeRadicand(_))));
}

#[test]
fn sqrt_in_quadratic_and_quartic_fields() {
    // K = Q(√2): (1 + T)² = 3 + 2T
    let g = AlgebraicNumber::from_int(2).sqrt().unwrap();
    let field = BaseField::new(g);
    let t = LElem::gen(&field);
    let one = LElem::one(&field);
    let x = &one + &t;
    let sq = x.square();
    let r = sq.sqrt_signed(1, 64).unwrap();
    assert_eq!(r, x);
    assert!(LElem::from_int(&field, 3).sqrt_any().is_some());
    assert!(t.sqrt_any().is_none());
    // (T + √3)² = 5 + 2√3·T
    let y = &t + &LElem::sqrt3(&field);
    let r = y.square().sqrt_signed(-1, 64).unwrap();
    assert_eq!(r, -&y);
    let mp = y.minpoly();
    assert_eq!(mp, ZPoly::from_i64s(&[1, 0, -10, 0, 1]));
    let a = y.to_algebraic().unwrap();
    assert!((a.approx() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-12);
}
