use harborth_algebra::elim::{
    eliminate, groebner, is_groebner_basis, normal_form, resultant, subresultant, subresultant_primitive,
    sylvester_resultant_oracle,
};
use harborth_algebra::{ElimError, MultiPoly, Poly, QuadInt, ZPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

type Z = MultiPoly<BigInt>;
type Q = MultiPoly<BigRational>;

fn z(p: &str, vars: &[&str]) -> Z {
    Z::parse(p, vars).unwrap()
}

#[test]
fn small_resultants() {
    let v = ["x"];
    assert_eq!(resultant(&z("x - 2", &v), &z("x - 3", &v), "x").unwrap(), z("-1", &v));
    assert_eq!(resultant(&z("x^2 + 1", &v), &z("x^2 - 2", &v), "x").unwrap(), z("9", &v));
    assert_eq!(resultant(&z("x^2 - 1", &v), &z("x - 1", &v), "x").unwrap(), z("0", &v));
    assert_eq!(resultant(&z("0", &v), &z("x", &v), "x"), Err(ElimError::ZeroInput));
    assert_eq!(resultant(&z("3", &v), &z("x", &v), "x"), Err(ElimError::NotInVariable("x".into())));
}

#[test]
fn oracle_examples() {
    let p = ZPoly::from_i64s(&[-2, 1]);
    let q = ZPoly::from_i64s(&[-3, 1]);
    assert_eq!(sylvester_resultant_oracle(&p, &q).unwrap(), BigInt::from(-1));
    let p = ZPoly::from_i64s(&[1, 0, 1]);
    let q = ZPoly::from_i64s(&[-2, 0, 1]);
    assert_eq!(sylvester_resultant_oracle(&p, &q).unwrap(), BigInt::from(9));
    let p = ZPoly::from_i64s(&[-1, 0, 1]);
    let q = ZPoly::from_i64s(&[-1, 1]);
    assert_eq!(sylvester_resultant_oracle(&p, &q).unwrap(), BigInt::from(0));
    let big = ZPoly::monomial(BigInt::from(1), 9);
    assert_eq!(sylvester_resultant_oracle(&big, &q), Err(ElimError::DegreeTooLarge(9)));
}

#[test]
fn bivariate_resultant_eliminates() {
    // circle and line: x^2 + y^2 - 1, y - x  →  2x^2 - 1 after eliminating y
    let v = ["y", "x"];
    let r = resultant(&z("x^2 + y^2 - 1", &v), &z("y - x", &v), "y").unwrap();
    assert_eq!(r, z("2x^2 - 1", &v));
    // nested dense path agrees
    let a = z("x^2 + y^2 - 1", &v).to_nested(0, 1).unwrap();
    let b = z("y - x", &v).to_nested(0, 1).unwrap();
    assert_eq!(subresultant(&a, &b), Poly::from_i64s(&[-1, 0, 2]));
    assert_eq!(subresultant_primitive(&a, &b), Poly::from_i64s(&[-1, 0, 2]));
}

#[test]
fn resultant_over_zsqrt3() {
    let v = ["x", "T"];
    let p = MultiPoly::<QuadInt>::parse("x^2 - 3", &v).unwrap();
    let q = MultiPoly::<QuadInt>::parse("x - r3*T", &v).unwrap();
    let r = resultant(&p, &q, "x").unwrap();
    assert_eq!(r, MultiPoly::<QuadInt>::parse("3T^2 - 3", &v).unwrap());
}

#[test]
fn groebner_trivial_cases() {
    let v = ["x"];
    let q = |s: &str| Q::parse(s, &v).unwrap();
    assert_eq!(groebner(&[q("x - 1"), q("x - 2")], &v), vec![q("1")]);
    assert_eq!(groebner(&[q("x")], &v), vec![q("x")]);
    assert!(groebner(&[q("0")], &v).is_empty());
}

#[test]
fn groebner_trapezoid_relation() {
    let order = ["t", "xD", "yD", "T"];
    let gens: Vec<Q> = ["t^2 + T^2 - 1", "-t*(xD - 2t) + T*yD - 3/2", "(xD - 2t)^2 + yD^2 - 9"]
        .iter()
        .map(|s| Q::parse(s, &order).unwrap())
        .collect();
    let basis = groebner(&gens, &order);
    assert!(is_groebner_basis(&basis));
    for g in &gens {
        assert!(normal_form(g, &basis).is_zero());
    }
    let target = Q::parse("27 - 36T^2 + 12T*yD - 4yD^2", &order).unwrap();
    let monic_target = target.scale(&BigRational::new((-1).into(), 4.into()));
    assert!(basis.contains(&monic_target), "basis: {:?}", basis.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    let step = eliminate(&gens, &order, &["t", "xD"]);
    assert!(step.is_clean());
    assert!(step.output.contains(&monic_target));
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = ZPoly> {
    (1..=max_deg).prop_flat_map(|d| {
        (prop::collection::vec(-50i64..=50, d), (1i64..=50, any::<bool>())).prop_map(|(mut cs, (l, s))| {
            cs.push(if s { l } else { -l });
            ZPoly::from_i64s(&cs)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn subresultant_matches_sylvester(p in small_poly(6), q in small_poly(6)) {
        let fast = subresultant(&p, &q);
        prop_assert_eq!(&fast, &sylvester_resultant_oracle(&p, &q).unwrap());
        prop_assert_eq!(&fast, &subresultant_primitive(&p, &q));
    }

    #[test]
    fn common_factor_kills_resultant(p in small_poly(3), q in small_poly(3), r in small_poly(3)) {
        prop_assert_eq!(subresultant(&p.mul(&r), &q.mul(&r)), BigInt::from(0));
    }

    #[test]
    fn resultant_is_multiplicative(p in small_poly(3), r in small_poly(3), q in small_poly(3)) {
        let lhs = subresultant(&p.mul(&r), &q);
        prop_assert_eq!(lhs, subresultant(&p, &q) * subresultant(&r, &q));
    }
}
