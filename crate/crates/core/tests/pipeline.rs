//! One full derivation shared by every test in this file.

use harborth::certify::{certify, CertificationReport};
use harborth::golden::{GoldenTable, MINPOLY_NAMES};
use harborth::stages::{Pipeline, DEFAULT_BITS};
use harborth_algebra::algnum::{radicals_criterion, AlgebraicNumber, Verdict};
use harborth_algebra::ring::rat;
use num_bigint::BigInt;
use std::sync::OnceLock;

fn run() -> &'static (Pipeline, CertificationReport) {
    static RUN: OnceLock<(Pipeline, CertificationReport)> = OnceLock::new();
    RUN.get_or_init(|| {
        let mut p = Pipeline::new(DEFAULT_BITS, None);
        p.run_through(7).expect("stages 1-7");
        let r = certify(&p).expect("certify");
        (p, r)
    })
}

#[test]
fn every_minimal_polynomial_matches_the_table() {
    let (p, r) = run();
    let g = GoldenTable::get();
    for name in MINPOLY_NAMES {
        let derived = p.store.get(name).univariate().expect(name);
        assert_eq!(derived, g.minpoly(name).unwrap(), "{name}");
    }
    assert!(r.polynomials_pass());
    assert!(r.overall);
}

#[test]
fn y_h_constant_term() {
    let (p, _) = run();
    let yh = p.store.get("P_yH").univariate().unwrap();
    assert_eq!(yh.coeff(0), "-12148787578527675".parse::<BigInt>().unwrap());
}

#[test]
fn signatures_and_radicals() {
    let (p, r) = run();
    assert_eq!(r.signature_of("P_xB"), Some((6, 8)));
    for row in &r.signatures {
        assert!(row.even && row.pass, "{}", row.name);
        assert_eq!((row.decomposed_degree, row.decomposed_real, row.decomposed_complex_pairs), (11, 3, 4));
    }
    let fxa = p.store.get("P_xA").univariate().unwrap().even_decompose().unwrap();
    assert_eq!(radicals_criterion(&fxa).unwrap().verdict, Verdict::NotSolvable);
}

#[test]
fn stage5_factor_accounting() {
    let (p, r) = run();
    let a = &r.stage5.accounting;
    assert_eq!((a.total_degree, a.quartic_power, a.cofactor_degree), (156, 6, 108));
    assert!(a.linear_factors_divide && a.quartic_divides && a.pt_divides);
    assert_eq!(a.cofactor_factor_degrees, vec![28, 80]);
    let pt = p.store.get("P_T").univariate().unwrap();
    let c28 = p.store.get("stage5_cofactor_28").univariate().unwrap();
    let c80 = p.store.get("stage5_cofactor_80").univariate().unwrap();
    // T itself is a root of P_T only
    let t = AlgebraicNumber::root_in(&pt, &rat(12, 100), &rat(13, 100)).unwrap().enclosure(256);
    for f in [&c28, &c80] {
        assert!(!f.eval_interval(&t).contains_zero());
        assert_ne!(f, &pt);
    }
}

#[test]
fn roots_and_constraints() {
    let (_, r) = run();
    assert!(r.roots_pass());
    assert_eq!(r.constraints.len(), 14);
    assert!(r.constraints.iter().all(|c| c.pass && c.result == "ProvedZero"));
    assert!(r.extremal.pass);
}

#[test]
fn report_is_deterministic() {
    let (p, r) = run();
    assert_eq!(certify(p).unwrap().to_json(), r.to_json());
    assert!(!r.to_json().contains("timings"));
}
