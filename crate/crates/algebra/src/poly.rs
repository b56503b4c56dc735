//! Dense univariate polynomials over a generic coefficient ring.

use crate::dyadic::{sqrt3_interval, DyadicInterval};
use crate::quad::{QuadInt, QuadRat};
use crate::ring::{Domain, Field, GcdDomain, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("polynomial has a nonzero odd-degree coefficient")]
    NotEven,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Coefficients ascending by degree; no trailing zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type ZPoly = Poly<BigInt>;
pub type QPoly = Poly<BigRational>;
pub type Zs3Poly = Poly<QuadInt>;
pub type Qs3Poly = Poly<QuadRat>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    pub fn monomial(c: R, deg: usize) -> Self {
        let mut v = vec![R::zero(); deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = −∞ mapped to 0 (use only where harmless).
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn tc(&self) -> R {
        self.coeff(0)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    /// `self(−x)`.
    pub fn reflect(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// `x^deg · self(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// `F` with `F(x²) = self(x)`.
    pub fn even_decompose(&self) -> Result<Self, PolyError> {
        if !self.is_even() {
            return Err(PolyError::NotEven);
        }
        Ok(Poly::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// `self(x²)`.
    pub fn compose_x2(&self) -> Self {
        let mut v = Vec::with_capacity(2 * self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            v.push(c.clone());
            if i + 1 < self.coeffs.len() {
                v.push(R::zero());
            }
        }
        Poly::new(v)
    }

    /// Pseudo-division: `lc(d)^(deg a − deg d + 1) · a = q·d + r`.
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "pseudo division by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Poly::zero(), self.clone());
        }
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        let n = self.deg() - dd + 1;
        let mut q = vec![R::zero(); n];
        for k in (0..n).rev() {
            let c = r[k + dd].clone();
            for qi in q.iter_mut() {
                *qi = qi.mul(&lc);
            }
            q[k] = c.clone();
            for ri in r.iter_mut().take(k + dd + 1) {
                *ri = ri.mul(&lc);
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dj));
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Pseudo-remainder only; scales by `lc(d)^(deg a − deg d + 1)`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo division by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return self.clone();
        }
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        let steps = self.deg() - dd + 1;
        for k in (0..steps).rev() {
            let c = r[k + dd].clone();
            for ri in r.iter_mut().take(k + dd + 1) {
                *ri = ri.mul(&lc);
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dj));
            }
            r.truncate(k + dd);
        }
        Poly::new(r)
    }
}

impl<R: Domain> Poly<R> {
    /// Exact division `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let dd = d.deg();
        if self.deg() < dd {
            return Err(PolyError::NotDivisible);
        }
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        let n = self.deg() - dd + 1;
        let mut q = vec![R::zero(); n];
        for k in (0..n).rev() {
            let c = &r[k + dd];
            if c.is_zero() {
                continue;
            }
            let qk = c.div_exact(&lc).ok_or(PolyError::NotDivisible)?;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&qk.mul(dj));
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(Poly::new(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_ok()
    }

    /// Exact division of every coefficient by a scalar.
    pub fn div_scalar_exact(&self, c: &R) -> Option<Self> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a.div_exact(c)?);
        }
        Some(Poly::new(v))
    }
}

impl<R: Field> Poly<R> {
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < d.deg() {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lc().inv().expect("nonzero leading coefficient");
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        let n = self.deg() - dd + 1;
        let mut q = vec![R::zero(); n];
        for k in (0..n).rev() {
            let c = r[k + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dj));
            }
            q[k] = c;
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lc().inv().unwrap();
        self.scale(&inv)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv().unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }
}

impl<R: GcdDomain> Poly<R> {
    /// gcd of the coefficients, normalized so that the primitive part has a
    /// nonnegative leading coefficient.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative_unit_normal() {
            g.neg()
        } else {
            g
        }
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        self.div_scalar_exact(&c).expect("content divides")
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }
}

impl ZPoly {
    pub fn from_strs(cs: &[&str]) -> Self {
        Poly::new(cs.iter().map(|c| c.parse::<BigInt>().expect("integer literal")).collect())
    }

    pub fn to_q(&self) -> QPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_zs3(&self) -> Zs3Poly {
        self.map(|c| QuadInt::rational(c.clone()))
    }

    /// Sum of |coefficients| bound style height: max |aᵢ|.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Exact evaluation at a rational.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = <BigRational as Zero>::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at `n / 2^k` (exact, without building rationals).
    pub fn sign_at_dyadic(&self, n: &BigInt, k: u64) -> i32 {
        // 2^(k·deg)·p(n/2^k) = Σ aⱼ nʲ 2^(k(deg−j))
        let d = self.deg();
        let mut acc = BigInt::from(0);
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * n + (c << (k as usize * (d - j)));
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Horner evaluation in interval arithmetic.
    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let prec = x.precision();
        let mut acc = DyadicInterval::from_int(0, prec);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(x)
                .add(&DyadicInterval::from_rational(&BigRational::from_integer(c.clone()), prec));
        }
        acc
    }

    pub fn gcd_z(&self, other: &Self) -> Self {
        let g = self.to_q().gcd(&other.to_q());
        q_to_primitive_z(&g)
    }

    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return self.primitive_part();
        }
        let g = self.gcd_z(&self.derivative());
        self.primitive_part().div_exact(&g).expect("gcd divides").primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd_z(&self.derivative()).deg() == 0
    }
}

/// Clear denominators and take the primitive part.
pub fn q_to_primitive_z(p: &QPoly) -> ZPoly {
    if p.is_zero() {
        return ZPoly::zero();
    }
    let mut l = BigInt::from(1);
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let z: ZPoly = p.map(|c| c.numer() * (&l / c.denom()));
    z.primitive_part()
}

/// Clear denominators of a Q(√3) polynomial and remove the integer content.
pub fn qs3_to_primitive_zs3(p: &Qs3Poly) -> Zs3Poly {
    if p.is_zero() {
        return Zs3Poly::zero();
    }
    let mut l = BigInt::from(1);
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let z: Zs3Poly = p.map(|c| c.numer().scale(&(&l / c.denom())));
    z.primitive_part()
}

impl Zs3Poly {
    pub fn to_qs3(&self) -> Qs3Poly {
        self.map(|c| QuadRat::from_quad_int(c.clone()))
    }

    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    /// `p · p̄`, an integer polynomial.
    pub fn norm_poly(&self) -> ZPoly {
        let n = self.mul(&self.conj());
        n.map(|c| {
            debug_assert!(Zero::is_zero(&c.b));
            c.a.clone()
        })
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs().iter().all(|c| Zero::is_zero(&c.b))
    }

    pub fn to_z(&self) -> Option<ZPoly> {
        if self.is_rational() {
            Some(self.map(|c| c.a.clone()))
        } else {
            None
        }
    }

    /// Horner evaluation with √3 replaced by a certified enclosure.
    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let prec = x.precision();
        let s3 = sqrt3_interval(prec);
        let mut acc = DyadicInterval::from_int(0, prec);
        for c in self.coeffs().iter().rev() {
            let cv = DyadicInterval::from_rational(&BigRational::from_integer(c.a.clone()), prec).add(
                &s3.mul(&DyadicInterval::from_rational(&BigRational::from_integer(c.b.clone()), prec)),
            );
            acc = acc.mul(x).add(&cv);
        }
        acc
    }
}

impl QPoly {
    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let prec = x.precision();
        let mut acc = DyadicInterval::from_int(0, prec);
        for c in self.coeffs().iter().rev() {
            acc = acc.mul(x).add(&DyadicInterval::from_rational(c, prec));
        }
        acc
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Poly::constant(R::from_bigint(n))
    }
}

impl<R: Domain> Domain for Poly<R> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Poly::div_exact(self, rhs).ok()
    }
}

impl<R: GcdDomain> GcdDomain for Poly<R> {
    /// Content-level common divisor: the gcd of the two contents (sufficient
    /// for primitive-part normalization in recursive representations).
    fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.primitive_content_poly();
        }
        if rhs.is_zero() {
            return self.primitive_content_poly();
        }
        let c = self.content().gcd(&rhs.content());
        Poly::constant(c)
    }
    fn is_negative_unit_normal(&self) -> bool {
        self.lc().is_negative_unit_normal()
    }
}

impl<R: GcdDomain> Poly<R> {
    fn primitive_content_poly(&self) -> Self {
        let c = self.content();
        let c = if c.is_negative_unit_normal() { c.neg() } else { c };
        Poly::constant(c)
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::add(self, rhs)
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::sub(self, rhs)
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(self)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use proptest::prelude::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn exact_division_and_remainder_errors() {
        assert_eq!(z(&[-1, 0, 1]).div_exact(&z(&[-1, 1])), Ok(z(&[1, 1])));
        assert_eq!(z(&[1, 0, 1]).div_exact(&z(&[-1, 1])), Err(PolyError::NotDivisible));
    }

    #[test]
    fn content_and_primitive_part() {
        let p = z(&[9, 0, 6]);
        assert_eq!(p.content(), BigInt::from(3));
        assert_eq!(p.primitive_part(), z(&[3, 0, 2]));
        assert_eq!(z(&[-6, 0, -6]).primitive_part(), z(&[1, 0, 1]));
    }

    #[test]
    fn gcd_over_q_sqrt3() {
        // (2T − √3)(T + 1) and (2T − √3)
        let a = Qs3Poly::new(vec![
            QuadRat::from_quad_int(QuadInt::new(0, -1)),
            QuadRat::from_quad_int(QuadInt::new(2, 0)),
        ]);
        let b = Qs3Poly::new(vec![QuadRat::from_i64(1), QuadRat::from_i64(1)]);
        let g = a.mul(&b).gcd(&a);
        assert_eq!(qs3_to_primitive_zs3(&g), Zs3Poly::new(vec![QuadInt::new(0, -1), QuadInt::new(2, 0)]));
    }

    #[test]
    fn even_decomposition() {
        assert_eq!(z(&[-2, 0, 1]).even_decompose(), Ok(z(&[-2, 1])));
        assert_eq!(z(&[0, 0, 0, 1]).even_decompose(), Err(PolyError::NotEven));
    }

    #[test]
    fn interval_evaluation_examples() {
        let p = z(&[-2, 0, 1]);
        let x = DyadicInterval::from_rational_bounds(&rat(1414213, 1000000), &rat(1414214, 1000000), 64);
        assert!(p.eval_interval(&x).contains_zero());
        // 2T + √3 on [0.12, 0.13]
        let q = Zs3Poly::new(vec![QuadInt::new(0, 1), QuadInt::new(2, 0)]);
        let t = DyadicInterval::from_rational_bounds(&rat(12, 100), &rat(13, 100), 64);
        assert!(q.eval_interval(&t).is_positive());
    }

    #[test]
    fn sign_at_dyadic_matches_rational_eval() {
        let p = z(&[-3, 1, 2, -1]);
        for n in -20i64..20 {
            let k = 3;
            let x = rat(n, 8);
            let v = p.eval_rational(&x);
            let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
            assert_eq!(p.sign_at_dyadic(&BigInt::from(n), k), s);
        }
    }

    fn small_poly() -> impl Strategy<Value = ZPoly> {
        proptest::collection::vec(-20i64..20, 1..7).prop_map(|v| z(&v))
    }

    proptest! {
        #[test]
        fn degree_and_gauss_lemma(p in small_poly(), q in small_poly()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            let pq = p.mul(&q);
            prop_assert_eq!(pq.deg(), p.deg() + q.deg());
            prop_assert_eq!(pq.content().abs(), (p.content() * q.content()).abs());
        }

        #[test]
        fn even_decompose_roundtrip(p in small_poly()) {
            let e = p.compose_x2();
            prop_assert_eq!(e.even_decompose().unwrap().compose_x2(), e);
        }

        #[test]
        fn point_interval_eval_contains_exact(p in small_poly(), n in -50i64..50, d in 1i64..50) {
            let x = rat(n, d);
            let iv = DyadicInterval::from_rational(&x, 128);
            prop_assert!(p.eval_interval(&iv).contains_rational(&p.eval_rational(&x)));
        }

        #[test]
        fn pseudo_division_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.pseudo_divrem(&b);
            let e = if a.is_zero() || a.deg() < b.deg() { 0 } else { (a.deg() - b.deg() + 1) as u32 };
            let lhs = a.scale(&b.lc().pow(e));
            prop_assert_eq!(lhs, q.mul(&b).add(&r));
            prop_assert_eq!(a.pseudo_rem(&b), r);
        }
    }
}
