use harborth::angles::*;
use harborth::geometry::{build_config, GeomError};
use harborth_algebra::dyadic::parse_decimal;
use harborth_algebra::DyadicInterval;
use num_rational::BigRational;

fn q(s: &str) -> BigRational {
    parse_decimal(s).unwrap()
}

#[test]
fn endpoint_angles() {
    let r = extremal(256).unwrap();
    assert!((r.phi_at_0 - 85.884964999269942).abs() < 1e-12, "{}", r.phi_at_0);
    assert!((r.phi_at_b - 94.590425288952345).abs() < 1e-12, "{}", r.phi_at_b);
    assert!(r.residual_0() < 1e-12 && r.residual_b() < 1e-12, "{r:?}");
    assert!(q(&r.b_residual) < q("0.000000000000000000000000000001"));
    assert!(r.b_decimal.starts_with("0.135045378368863226800771578525"));
}

#[test]
fn beta_is_sixty_degrees_at_zero() {
    let r = phi(&DyadicInterval::from_int(0, 128)).unwrap();
    assert!((r.beta - 60.0).abs() < 1e-12);
    assert!(r.closed_form_agrees());
}

#[test]
fn golden_height_is_orthogonal() {
    let t = DyadicInterval::from_rational(&q("0.120725337054926"), 200);
    let r = phi(&t).unwrap();
    assert!((r.phi - 90.0).abs() < 1e-9);
    assert!((r.phi - r.alpha - r.beta).abs() < 1e-12);
    assert!(r.closed_form_agrees());
}

#[test]
fn bisection_brackets_the_height() {
    let coarse = solve_t(&q("0.00001"));
    assert!(coarse.contains_rational(&q("0.12072533")));
    let fine = solve_t(&q("0.000000000000001"));
    let w = fine.hi_rational() - fine.lo_rational();
    assert!(w <= q("0.000000000000001"));
    assert!((fine.mid_f64() - 0.120725337054926).abs() < 1e-15);
    let cfg = build_config(&fine, 128).unwrap();
    let d = cfg.point('H').unwrap().x.iv.sub(&cfg.point('J').unwrap().x.iv);
    assert!(d.mid_f64().abs() < 1e-13);
}

#[test]
fn grid_is_monotone_and_consistent() {
    let rows = explore(64, 160).unwrap();
    assert_eq!(rows.len(), 64);
    for w in rows.windows(2) {
        assert!(w[0].1.phi < w[1].1.phi);
    }
    for (t, r) in &rows[..63] {
        assert!(r.closed_form_agrees(), "{t}");
        let cfg = build_config(t, 160).unwrap();
        for (label, res) in cfg.constraints().unwrap().into_iter().take(13) {
            assert!(res.iv.contains_zero(), "{label} at {t}");
        }
    }
    assert!((rows[0].1.phi - 85.88496).abs() < 1e-5);
    assert!((rows[63].1.phi - 94.59043).abs() < 1e-5);
}

#[test]
fn past_the_extremal_height_fails() {
    assert_eq!(phi(&DyadicInterval::from_rational(&q("0.14"), 128)).unwrap_err(), GeomError::NoIntersection);
}
