//! The quadratic ring Z[√3] and its fraction field Q(√3).

use crate::ring::{Domain, Field, GcdDomain, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b√3` with integer `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn rational(a: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: BigInt::from(0),
        }
    }

    pub fn sqrt3() -> Self {
        QuadInt::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        QuadInt {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² − 3b²`, which equals `x · conj(x)`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(3) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    /// Largest rational integer dividing both parts (nonnegative).
    pub fn int_content(&self) -> BigInt {
        Integer::gcd(&self.a, &self.b)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        QuadInt {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    pub fn div_int_exact(&self, k: &BigInt) -> Option<Self> {
        let (qa, ra) = self.a.div_rem(k);
        let (qb, rb) = self.b.div_rem(k);
        if Zero::is_zero(&ra) && Zero::is_zero(&rb) {
            Some(QuadInt { a: qa, b: qb })
        } else {
            None
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.a), Zero::is_zero(&self.b)) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√3", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "({} - {}√3)", self.a, -&self.b)
                } else {
                    write!(f, "({} + {}√3)", self.a, self.b)
                }
            }
        }
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a * &rhs.a + BigInt::from(3) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

/// Ring product `(a+b√3)(c+d√3) = (ac+3bd) + (ad+bc)√3`.
pub fn quad_mul(x: &QuadInt, y: &QuadInt) -> QuadInt {
    x * y
}

/// Norm `a² − 3b²`.
pub fn quad_norm(x: &QuadInt) -> BigInt {
    x.norm()
}

impl Ring for QuadInt {
    fn zero() -> Self {
        QuadInt::default()
    }
    fn one() -> Self {
        QuadInt::rational(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_bigint(n: &BigInt) -> Self {
        QuadInt::rational(n.clone())
    }
}

impl Domain for QuadInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if Zero::is_zero(&rhs.b) {
            return self.div_int_exact(&rhs.a);
        }
        let n = rhs.norm();
        (self * &rhs.conj()).div_int_exact(&n)
    }
}

impl GcdDomain for QuadInt {
    fn gcd(&self, rhs: &Self) -> Self {
        QuadInt::rational(Integer::gcd(&self.int_content(), &rhs.int_content()))
    }
    fn is_negative_unit_normal(&self) -> bool {
        self.a.is_negative() || (Zero::is_zero(&self.a) && self.b.is_negative())
    }
}

/// `num / den` with `num ∈ Z[√3]`, `den > 0`, and gcd(num.a, num.b, den) = 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadRat {
    num: QuadInt,
    den: BigInt,
}

impl QuadRat {
    pub fn new(num: QuadInt, den: BigInt) -> Self {
        assert!(!Zero::is_zero(&den), "QuadRat with zero denominator");
        let mut q = QuadRat { num, den };
        q.canonicalize();
        q
    }

    pub fn from_rationals(a: &BigRational, b: &BigRational) -> Self {
        let den = a.denom().lcm(b.denom());
        let na = a.numer() * (&den / a.denom());
        let nb = b.numer() * (&den / b.denom());
        QuadRat::new(QuadInt { a: na, b: nb }, den)
    }

    pub fn from_quad_int(x: QuadInt) -> Self {
        QuadRat {
            num: x,
            den: BigInt::from(1),
        }
    }

    fn canonicalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.num = -&self.num;
        }
        let g = Integer::gcd(&self.num.int_content(), &self.den);
        if !One::is_one(&g) && !Zero::is_zero(&g) {
            self.num = self.num.div_int_exact(&g).expect("content divides");
            self.den = &self.den / &g;
        }
        if self.num.is_zero() {
            self.den = BigInt::from(1);
        }
    }

    pub fn numer(&self) -> &QuadInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn rational_part(&self) -> BigRational {
        BigRational::new(self.num.a.clone(), self.den.clone())
    }

    pub fn sqrt3_part(&self) -> BigRational {
        BigRational::new(self.num.b.clone(), self.den.clone())
    }

    pub fn conj(&self) -> Self {
        QuadRat {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    pub fn norm(&self) -> BigRational {
        BigRational::new(self.num.norm(), &self.den * &self.den)
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if One::is_one(&self.den) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Ring for QuadRat {
    fn zero() -> Self {
        QuadRat::from_quad_int(QuadInt::zero())
    }
    fn one() -> Self {
        QuadRat::from_quad_int(QuadInt::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return QuadRat::new(&self.num + &rhs.num, self.den.clone());
        }
        QuadRat::new(
            &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        QuadRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn neg(&self) -> Self {
        QuadRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn from_bigint(n: &BigInt) -> Self {
        QuadRat::from_quad_int(QuadInt::rational(n.clone()))
    }
}

impl Domain for QuadRat {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

impl Field for QuadRat {
    /// Rationalization by the conjugate.
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let n = self.num.norm();
        // (den / num) = den * conj(num) / norm(num)
        Some(QuadRat::new(self.num.conj().scale(&self.den), n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b)
    }

    #[test]
    fn products() {
        assert_eq!(quad_mul(&q(1, 1), &q(1, -1)), q(-2, 0));
        assert_eq!(quad_mul(&q(2, 1), &q(2, -1)), q(1, 0));
        assert_eq!(quad_mul(&q(0, 1), &q(0, 1)), q(3, 0));
    }

    #[test]
    fn norms() {
        assert_eq!(quad_norm(&q(2, 1)), BigInt::from(1));
        assert_eq!(quad_norm(&q(5, 0)), BigInt::from(25));
        assert_eq!(quad_norm(&q(1, 1)), BigInt::from(-2));
    }

    #[test]
    fn quadrat_canonical_and_inverse() {
        let x = QuadRat::new(q(4, 6), BigInt::from(-8));
        assert_eq!(x.numer(), &q(-2, -3));
        assert_eq!(x.denom(), &BigInt::from(4));
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv), QuadRat::one());
        assert!(QuadRat::zero().inv().is_none());
    }

    #[test]
    fn exact_division_in_zsqrt3() {
        let x = q(7, 3);
        let y = q(1, 1);
        let p = quad_mul(&x, &y);
        assert_eq!(p.div_exact(&y), Some(x));
        assert_eq!(q(1, 0).div_exact(&q(1, 1)), None);
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000, d in -1000i64..1000) {
            let x = q(a, b);
            let y = q(c, d);
            prop_assert_eq!(quad_norm(&quad_mul(&x, &y)), quad_norm(&x) * quad_norm(&y));
        }

        #[test]
        fn conj_involution_and_norm_rational(a in -1000i64..1000, b in -1000i64..1000) {
            let x = q(a, b);
            prop_assert_eq!(x.conj().conj(), x.clone());
            let n = quad_mul(&x, &x.conj());
            prop_assert!(Zero::is_zero(&n.b));
            prop_assert_eq!(n.a, quad_norm(&x));
        }
    }
}
