//! The angle φ between AC and HJ, its decomposition φ = α + β, the
//! bisection for φ = 90°, and the endpoint values at T = 0 and T = b.

use crate::geometry::{build, Configuration, GeomError, Num, Scalar};
use harborth_algebra::algnum::{AlgError, AlgebraicNumber};
use harborth_algebra::dyadic::{format_decimal, sqrt3_interval};
use harborth_algebra::{Dyadic, DyadicInterval, ZPoly};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

/// Angles in degrees (reporting only) and certified slope enclosures.
#[derive(Clone, Debug)]
pub struct AngleReport {
    pub phi: f64,
    pub alpha: f64,
    pub beta: f64,
    /// slope of HJ measured against DF
    pub m_alpha: DyadicInterval,
    /// slope of DF measured against AC
    pub m_beta: DyadicInterval,
    /// `3√3 / (4s² + √3·√(−9 + 40s² − 16s⁴))` with `4s² = X² + Y²`
    pub m_alpha_closed: DyadicInterval,
    /// `m_α·m_β − 1`, negative exactly when φ < 90°
    pub orthogonality: DyadicInterval,
}

impl AngleReport {
    /// Geometric and closed-form m_α overlap.
    pub fn closed_form_agrees(&self) -> bool {
        self.m_alpha.intersect(&self.m_alpha_closed).is_some()
    }
}

fn atan2_deg(y: &Num, x: &Num) -> f64 {
    y.mid_f64().atan2(x.mid_f64()).to_degrees()
}

fn slopes(cfg: &Configuration<Num>) -> Result<(Num, Num, Num, Num, Num), GeomError> {
    let d = cfg.point('D')?;
    let f = cfg.point('F')?;
    let hj = cfg.point('H')?.sub(cfg.point('J')?);
    let x = d.x.sub(&f.x);
    let y = d.y.sub(&f.y);
    // HJ rotated into the frame where FD is the x-axis; the norm cancels
    let along = x.mul(&hj.x).add(&y.mul(&hj.y));
    let across = x.mul(&hj.y).sub(&y.mul(&hj.x));
    let m_alpha = across.div(&along)?;
    let m_beta = y.div(&x)?;
    Ok((m_alpha, m_beta, x, y, hj.x))
}

/// Certified `m_α·m_β − 1` at an A-frame configuration.
pub fn orthogonality(cfg: &Configuration<Num>) -> Result<DyadicInterval, GeomError> {
    let (ma, mb, ..) = slopes(cfg)?;
    Ok(ma.mul(&mb).sub(&ma.int(1)).iv)
}

/// φ(T). The configuration is built tangent-tolerant so that T = b works.
pub fn phi(t: &DyadicInterval) -> Result<AngleReport, GeomError> {
    let cfg = build(&Num::tolerant(t.clone()))?;
    phi_of(&cfg)
}

pub fn phi_of(cfg: &Configuration<Num>) -> Result<AngleReport, GeomError> {
    let (ma, mb, x, y, _) = slopes(cfg)?;
    let hj = cfg.point('H')?.sub(cfg.point('J')?);
    let phi = atan2_deg(&hj.y, &hj.x);
    let beta = atan2_deg(&y, &x);
    let s4 = x.square().add(&y.square());
    let r3 = s4.sqrt3();
    let rad = s4.mul(&s4.int(10)).sub(&s4.square()).sub(&s4.int(9));
    let closed = r3.mul(&s4.int(3)).div(&s4.add(&r3.mul(&rad.sqrt_branch(1)?)))?;
    Ok(AngleReport {
        phi,
        alpha: phi - beta,
        beta,
        orthogonality: ma.mul(&mb).sub(&ma.int(1)).iv,
        m_alpha: ma.iv,
        m_beta: mb.iv,
        m_alpha_closed: closed.iv,
    })
}

fn sign_at(t: &Dyadic, prec: u32) -> Option<i32> {
    let mut p = prec;
    while p <= 4 * prec {
        let cfg = build(&Num::new(DyadicInterval::point(t.clone(), p))).ok()?;
        let g = orthogonality(&cfg).ok()?;
        if g.is_positive() {
            return Some(1);
        }
        if g.is_negative() {
            return Some(-1);
        }
        p *= 2;
    }
    None
}

fn bits_for(tol: &BigRational) -> u32 {
    let d = Dyadic::from_rational_floor(tol, 64);
    (-d.log2_floor().unwrap_or(-64)).max(8) as u32
}

/// Interval of width ≤ `tolerance` on which φ − 90° changes sign.
pub fn solve_t(tolerance: &BigRational) -> DyadicInterval {
    let bits = bits_for(tolerance);
    let prec = bits + 48;
    let mut lo = Dyadic::zero();
    let mut hi = Dyadic::from_rational_ceil(&BigRational::new(135.into(), 1000.into()), 64);
    let tol = Dyadic::from_rational_floor(tolerance, bits + 8);
    while hi.sub(&lo) > tol {
        let mid = lo.add(&hi).mul_pow2(-1);
        match sign_at(&mid, prec) {
            Some(s) if s < 0 => lo = mid,
            Some(_) => hi = mid,
            None => break,
        }
    }
    DyadicInterval::new(lo, hi, prec)
}

/// Points of the φ table on `[0, b]`: `n` equally spaced heights.
pub fn explore(n: usize, prec: u32) -> Result<Vec<(DyadicInterval, AngleReport)>, GeomError> {
    let b = extremal_b().expect("64T⁴−56T²+1 has a root in (0.13, 0.14)");
    let bi = b.enclosure(prec);
    let n = n.max(2);
    (0..n)
        .into_par_iter()
        .map(|i| {
            let t = if i == n - 1 {
                bi.clone()
            } else {
                bi.scale_rational(&BigRational::new((i as i64).into(), ((n - 1) as i64).into()))
            };
            phi(&t).map(|r| (t, r))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    #[serde(skip)]
    pub b: AlgebraicNumber,
    pub b_decimal: String,
    /// `|b − (1/4)√(7−3√5)|`, an upper bound
    pub b_residual: String,
    pub phi_at_0: f64,
    pub phi_at_b: f64,
    pub phi_at_0_closed: f64,
    pub phi_at_b_closed: f64,
    pub alpha_at_b_closed: f64,
    pub beta_at_b_closed: f64,
}

impl ExtremalReport {
    pub fn residual_0(&self) -> f64 {
        (self.phi_at_0 - self.phi_at_0_closed).abs()
    }

    pub fn residual_b(&self) -> f64 {
        (self.phi_at_b - self.phi_at_b_closed).abs()
    }
}

/// The largest admissible height, a root of 64T⁴ − 56T² + 1.
pub fn extremal_b() -> Result<AlgebraicNumber, AlgError> {
    let p = ZPoly::from_i64s(&[1, 0, -56, 0, 64]);
    AlgebraicNumber::root_in(&p, &BigRational::new(13.into(), 100.into()), &BigRational::new(14.into(), 100.into()))
}

fn iv(n: i64, prec: u32) -> DyadicInterval {
    DyadicInterval::from_int(n, prec)
}

fn sqrt(x: &DyadicInterval) -> DyadicInterval {
    x.sqrt().expect("positive radicand")
}

fn quot(a: &DyadicInterval, b: &DyadicInterval) -> DyadicInterval {
    a.div(b).expect("nonzero denominator")
}

pub fn extremal(prec: u32) -> Result<ExtremalReport, GeomError> {
    let b = extremal_b().map_err(|_| GeomError::Degenerate)?;
    let r5 = sqrt(&iv(5, prec));
    let r3 = sqrt3_interval(prec);
    let quarter = BigRational::new(1.into(), 4.into());
    let b_closed = sqrt(&iv(7, prec).sub(&r5.mul(&iv(3, prec)))).scale_rational(&quarter);
    let diff = b.enclosure(prec).sub(&b_closed);
    let bound = if diff.lo().abs() > diff.hi().abs() { diff.lo().abs() } else { diff.hi().abs() };

    // sin φ(0) = ¼(7+3√5)√(3/(22+6√5))
    let seven_3r5 = iv(7, prec).add(&r5.mul(&iv(3, prec)));
    let sin0 = seven_3r5.scale_rational(&quarter).mul(&sqrt(&quot(&iv(3, prec), &iv(22, prec).add(&r5.mul(&iv(6, prec))))));
    // cos β(b) = √3/8(√(3+√5) − √(7−3√5))
    let cos_b = r3
        .scale_rational(&BigRational::new(1.into(), 8.into()))
        .mul(&sqrt(&iv(3, prec).add(&r5)).sub(&sqrt(&iv(7, prec).sub(&r5.mul(&iv(3, prec))))));
    // cos α(b)
    let w = sqrt(&iv(230, prec).add(&r5.mul(&iv(34, prec))));
    let num = iv(68, prec).add(&w.mul(&iv(3, prec))).add(&r5.mul(&iv(9, prec)).mul(&iv(8, prec).add(&w)));
    let den = iv(23, prec)
        .add(&r5.mul(&iv(3, prec)))
        .mul(&iv(2, prec))
        .mul(&sqrt(&iv(97, prec).sub(&r5.mul(&iv(3, prec))).add(&w.mul(&iv(3, prec)))));
    let cos_a = quot(&num, &den);
    let alpha_b = cos_a.mid_f64().acos().to_degrees();
    let beta_b = cos_b.mid_f64().acos().to_degrees();

    let phi0 = phi(&iv(0, prec))?;
    let phib = phi(&b.enclosure(prec))?;
    Ok(ExtremalReport {
        b_decimal: b.to_decimal(30),
        b_residual: format_decimal(&bound.to_rational(), 40),
        phi_at_0: phi0.phi,
        phi_at_b: phib.phi,
        phi_at_0_closed: sin0.mid_f64().asin().to_degrees(),
        phi_at_b_closed: alpha_b + beta_b,
        alpha_at_b_closed: alpha_b,
        beta_at_b_closed: beta_b,
        b,
    })
}
