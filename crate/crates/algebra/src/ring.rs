//! Coefficient ring abstractions shared by the polynomial, elimination and
//! factorization layers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// A commutative ring with identity.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_bigint(n: &BigInt) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// An integral domain with exact division.
pub trait Domain: Ring {
    /// `Some(q)` with `q * rhs == self`, or `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

/// A field.
pub trait Field: Domain {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

/// Domains with a content notion: a "gcd" that is a common divisor, and a
/// sign normalization used to make primitive parts canonical.
pub trait GcdDomain: Domain {
    fn gcd(&self, rhs: &Self) -> Self;
    /// True when the element is "negative" under the ring's normalization,
    /// so that primitive parts are flipped to a nonnegative leading part.
    fn is_negative_unit_normal(&self) -> bool;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        n.clone()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Domain for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

impl GcdDomain for BigInt {
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn is_negative_unit_normal(&self) -> bool {
        self.is_negative()
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        BigRational::from_integer(n.clone())
    }
}

impl Domain for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Convenience constructor for rationals from machine integers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
