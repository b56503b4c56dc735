use harborth_algebra::factor::{
    certify_irreducible, factor_z, factor_zsqrt3, minpoly_reconstruct, select_factor, trial_small_divisor, CertMethod,
    SelectError,
};
use harborth_algebra::{DyadicInterval, QuadInt, QuadRat, ZPoly, Zs3Poly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn zp(c: &[i64]) -> ZPoly {
    ZPoly::from_i64s(c)
}

fn zs3(c: &[(i64, i64)]) -> Zs3Poly {
    Zs3Poly::new(c.iter().map(|&(a, b)| QuadInt::new(a, b)).collect())
}

fn reassemble_z(r: &harborth_algebra::factor::FactorizationResult<ZPoly, BigInt>) -> ZPoly {
    r.factors.iter().fold(ZPoly::constant(r.content.clone()), |a, (f, m)| a.mul(&f.pow(*m)))
}

#[test]
fn x4_minus_1() {
    let r = factor_z(&zp(&[-1, 0, 0, 0, 1]));
    let fs: Vec<ZPoly> = r.factors.iter().map(|(f, _)| f.clone()).collect();
    assert_eq!(fs, vec![zp(&[-1, 1]), zp(&[1, 1]), zp(&[1, 0, 1])]);
    assert_eq!(r.content, BigInt::from(1));
    assert!(r.all_certified());
}

#[test]
fn content_is_pulled_out() {
    let r = factor_z(&zp(&[-6, 0, 6]));
    assert_eq!(r.content, BigInt::from(6));
    assert_eq!(r.factors.len(), 2);
    let r = factor_z(&zp(&[6, 0, -6]));
    assert_eq!(r.content, BigInt::from(-6));
    assert_eq!(reassemble_z(&r), zp(&[6, 0, -6]));
}

#[test]
fn multiplicities_and_x_factor() {
    let f = zp(&[0, 1]).mul(&zp(&[1, 1]).pow(3)).mul(&zp(&[2, 0, 1]).pow(2));
    let r = factor_z(&f);
    assert_eq!(reassemble_z(&r), f);
    assert_eq!(r.degrees(), vec![(1, 1), (1, 3), (2, 2)]);
}

#[test]
fn swinnerton_dyer_like_needs_recombination() {
    // x^4 + 1 splits modulo every prime
    let r = factor_z(&zp(&[1, 0, 0, 0, 1]));
    assert_eq!(r.factors.len(), 1);
    assert_eq!(r.certificates[0].method, CertMethod::Recombination);
    assert!(r.certificates[0].is_irreducible());
    // x^4 - 10x^2 + 1, minimal polynomial of √2 + √3
    let r = factor_z(&zp(&[1, 0, -10, 0, 1]));
    assert_eq!(r.factors.len(), 1);
}

#[test]
fn degree_pattern_certificate() {
    let c = certify_irreducible(&zp(&[-2, 0, 0, 0, 0, 1]));
    assert_eq!(c.method, CertMethod::DegreePattern);
    assert!(c.is_irreducible());
}

#[test]
fn zsqrt3_examples() {
    let r = factor_zsqrt3(&zs3(&[(-3, 0), (0, 0), (4, 0)]));
    let fs: Vec<Zs3Poly> = r.factors.iter().map(|(f, _)| f.clone()).collect();
    assert_eq!(fs, vec![zs3(&[(0, -1), (2, 0)]), zs3(&[(0, 1), (2, 0)])]);
    assert_eq!(r.content, QuadRat::from_quad_int(QuadInt::new(1, 0)));
    let r = factor_zsqrt3(&zs3(&[(-3, 0), (0, 0), (1, 0)]));
    assert_eq!(r.factors.len(), 2);
    assert!(r.certificates.iter().all(|c| c.via_norm && c.is_irreducible()));
}

#[test]
fn zsqrt3_irreducible_over_q_splits() {
    // (x^2 - √3 x + 1)(x^2 + √3 x + 1) = x^4 - x^2 + 1
    let r = factor_zsqrt3(&zs3(&[(1, 0), (0, 0), (-1, 0), (0, 0), (1, 0)]));
    assert_eq!(r.degrees(), vec![(2, 1), (2, 1)]);
    assert_eq!(factor_z(&zp(&[1, 0, -1, 0, 1])).factors.len(), 1);
}

#[test]
fn select_by_interval() {
    let fs = vec![zp(&[-1, 1]), zp(&[1, 1])];
    let near_one = |p: u32| vec![DyadicInterval::from_rational(&BigRational::new(10000.into(), 10001.into()), p).hull(&DyadicInterval::from_int(1, p))];
    assert_eq!(select_factor(&fs, near_one, 32, 256), Ok(0));
    let dup = vec![zp(&[-1, 1]), zp(&[-1, 1])];
    assert_eq!(select_factor(&dup, |p| vec![DyadicInterval::from_int(1, p)], 32, 128), Err(SelectError::Ambiguous(vec![0, 1])));
}

#[test]
fn reconstruct_small_numbers() {
    let sqrt2 = |p: u32| DyadicInterval::from_int(2, p + 8).sqrt().unwrap();
    assert_eq!(minpoly_reconstruct(sqrt2, 4, 8), Ok(zp(&[-2, 0, 1])));
    let half = |p: u32| DyadicInterval::from_rational(&BigRational::new(1.into(), 2.into()), p);
    assert_eq!(minpoly_reconstruct(half, 3, 8), Ok(zp(&[-1, 2])));
}

#[test]
fn trial_sweep_finds_small_divisors() {
    let f = zp(&[-3, 2]).mul(&zp(&[1, 0, 0, 0, 1]));
    assert!(trial_small_divisor(&f, 64).is_some());
    assert!(trial_small_divisor(&zp(&[1, 0, 0, 0, 1]), 64).is_none());
}

fn nonconst(max_deg: usize) -> impl Strategy<Value = ZPoly> {
    (1..=max_deg).prop_flat_map(|d| {
        (prop::collection::vec(-20i64..=20, d), 1i64..=6).prop_map(|(mut cs, l)| {
            cs.push(l);
            ZPoly::from_i64s(&cs)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(220))]

    #[test]
    fn reassembly_of_random_products(a in nonconst(4), b in nonconst(4), c in nonconst(3), k in -5i64..=5) {
        prop_assume!(k != 0);
        let f = a.mul(&b).mul(&c).scale(&BigInt::from(k));
        let r = factor_z(&f);
        prop_assert_eq!(reassemble_z(&r), f);
        prop_assert!(r.all_certified());
        for (g, _) in &r.factors {
            prop_assert!(g.deg() >= 1);
            if g.deg() >= 2 {
                let small = trial_small_divisor(g, 32);
                prop_assert!(small.is_none() || small.as_ref().map(|s| s.deg()) == Some(g.deg()));
            }
        }
    }

    #[test]
    fn zsqrt3_reassembly_and_conjugation(a in prop::collection::vec((-9i64..=9, -9i64..=9), 2..4), b in prop::collection::vec((-9i64..=9, -9i64..=9), 2..4)) {
        let pa = Zs3Poly::new(a.iter().map(|&(x, y)| QuadInt::new(x, y)).collect());
        let pb = Zs3Poly::new(b.iter().map(|&(x, y)| QuadInt::new(x, y)).collect());
        prop_assume!(pa.deg() >= 1 && pb.deg() >= 1);
        let f = pa.mul(&pb);
        let r = factor_zsqrt3(&f);
        let back = r.factors.iter().fold(f.to_qs3().map(|_| QuadRat::from_quad_int(QuadInt::new(0, 0))).add(&harborth_algebra::Qs3Poly::constant(r.content.clone())), |acc, (g, m)| acc.mul(&g.to_qs3().pow(*m)));
        prop_assert_eq!(back, f.to_qs3());
        let rc = factor_zsqrt3(&f.conj());
        prop_assert_eq!(rc.degrees().len(), r.degrees().len());
        let mut d1 = r.degrees(); d1.sort();
        let mut d2 = rc.degrees(); d2.sort();
        prop_assert_eq!(d1, d2);
    }
}

mod bivariate {
    use harborth_algebra::factor::factor_bivariate;
    use harborth_algebra::{MultiPoly, QuadInt};

    fn m(s: &str) -> MultiPoly<QuadInt> {
        MultiPoly::parse(s, &["x", "T"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = factor_bivariate(&m("x^2 - T^2"), "x", "T").unwrap();
        let mut fs: Vec<String> = r.factors.iter().map(|(f, _)| f.to_string()).collect();
        fs.sort();
        let mut want = vec![m("x - T").to_string(), m("x + T").to_string()];
        want.sort();
        assert_eq!(fs, want);
    }

    #[test]
    fn conjugate_quadratic_pair() {
        let a = m("-1 + 28T^2 - 12r3*T*x + 4x^2");
        let b = m("-1 + 28T^2 + 12r3*T*x + 4x^2");
        let r = factor_bivariate(&a.mul(&b), "x", "T").unwrap();
        assert_eq!(r.factors.len(), 2);
        assert!(r.factors.iter().any(|(f, _)| *f == a));
        assert!(r.factors.iter().any(|(f, _)| *f == b));
    }

    #[test]
    fn content_in_parameter() {
        let f = m("(2T - r3)(x^2 - 3T)");
        let r = factor_bivariate(&f, "x", "T").unwrap();
        assert_eq!(r.factors.len(), 2);
        let back = r.factors.iter().fold(f.constant_like(QuadInt::new(1, 0)), |a, (g, e)| a.mul(&g.pow(*e)));
        assert_eq!(back.map(|c| harborth_algebra::QuadRat::from_quad_int(c.clone())).scale(&r.content), f.map(|c| harborth_algebra::QuadRat::from_quad_int(c.clone())));
    }
}
