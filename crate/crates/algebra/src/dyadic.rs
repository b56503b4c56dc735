//! Outward-rounded interval arithmetic with dyadic (binary) endpoints.
//!
//! Endpoints are `m · 2^e` with arbitrary-precision `m`. Every operation
//! rounds the lower endpoint down and the upper endpoint up to `prec`
//! significant bits, so the exact result of any choice of member points lies
//! inside the output.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// Default working precision, in bits.
pub const DEFAULT_PRECISION: u32 = 400;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntervalError {
    #[error("square root of an interval lying entirely below zero")]
    EntirelyNegative,
    #[error("division by an interval containing zero")]
    DivisionByZero,
}

/// An exact dyadic rational `mant · 2^exp`, kept with an odd mantissa.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite float");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_bits == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz as usize;
            self.exp += tz as i64;
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &rhs.mant << (rhs.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Dyadic::new(&self.mant * &rhs.mant, self.exp + rhs.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Number of bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// floor(log2 |x|) for nonzero x.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mant.bits() as i64 - 1 + self.exp)
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mant >> shift as usize).to_f64().unwrap_or(0.0);
        m * 2f64.powi((self.exp + shift).clamp(-2000, 2000) as i32)
    }

    /// Nearest integer, ties rounded up.
    pub fn round_nearest_int(&self) -> BigInt {
        if self.exp >= 0 {
            return &self.mant << self.exp as usize;
        }
        let sh = (-self.exp) as usize;
        (&self.mant + (BigInt::one() << (sh - 1))).div_floor(&(BigInt::one() << sh))
    }

    /// Largest dyadic with at most `prec` significant bits that is ≤ self.
    pub fn round_floor(&self, prec: u32) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let m = self.mant.div_floor(&(BigInt::one() << shift as usize));
        Dyadic::new(m, self.exp + shift as i64)
    }

    pub fn round_ceil(&self, prec: u32) -> Self {
        self.neg().round_floor(prec).neg()
    }

    /// floor(self / rhs) to `prec` significant bits.
    pub fn div_floor(&self, rhs: &Self, prec: u32) -> Self {
        assert!(!rhs.is_zero(), "division by zero dyadic");
        let (mut ma, mut mb) = (self.mant.clone(), rhs.mant.clone());
        if mb.is_negative() {
            ma = -ma;
            mb = -mb;
        }
        let k = (prec as i64 + mb.bits() as i64 - ma.bits() as i64 + 2).max(0);
        let num = ma << k as usize;
        let q = num.div_floor(&mb);
        Dyadic::new(q, self.exp - rhs.exp - k).round_floor(prec)
    }

    pub fn div_ceil(&self, rhs: &Self, prec: u32) -> Self {
        self.neg().div_floor(rhs, prec).neg()
    }

    fn sqrt_parts(&self, prec: u32) -> (BigInt, BigInt, i64) {
        debug_assert!(!self.mant.is_negative());
        let mut k = (2 * prec as i64 + 2 - self.mant.bits() as i64).max(0);
        if (self.exp - k).rem_euclid(2) != 0 {
            k += 1;
        }
        let m = &self.mant << k as usize;
        let r = m.sqrt();
        (m, r, (self.exp - k) / 2)
    }

    pub fn sqrt_floor(&self, prec: u32) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (_, r, e) = self.sqrt_parts(prec);
        Dyadic::new(r, e).round_floor(prec)
    }

    pub fn sqrt_ceil(&self, prec: u32) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (m, r, e) = self.sqrt_parts(prec);
        let r = if &r * &r < m { r + 1 } else { r };
        Dyadic::new(r, e).round_ceil(prec)
    }

    /// Floor and ceiling of a rational at `prec` significant bits.
    pub fn from_rational_floor(q: &BigRational, prec: u32) -> Self {
        Dyadic::from_int(q.numer().clone()).div_floor(&Dyadic::from_int(q.denom().clone()), prec)
    }

    pub fn from_rational_ceil(q: &BigRational, prec: u32) -> Self {
        Dyadic::from_int(q.numer().clone()).div_ceil(&Dyadic::from_int(q.denom().clone()), prec)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).signum().cmp(&0)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_decimal(&self.to_rational(), 20))
    }
}

/// Round a rational to `digits` decimal places (half away from zero).
pub fn format_decimal(q: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = q * BigRational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let twice = &abs * BigRational::from_integer(BigInt::from(2));
    let rounded = (twice.numer() + twice.denom()).div_floor(&(twice.denom() * 2));
    let s = rounded.to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int_part, frac_part) = s.split_at(s.len() - digits);
    let sign = if neg && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Parse a plain decimal literal such as `-0.061398137844065` into a rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (ip, fp) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    let digits = format!("{ip}{fp}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    let d = num_traits::pow(BigInt::from(10), fp.len());
    let q = BigRational::new(n, d);
    Some(if neg { -q } else { q })
}

/// A closed interval `[lo, hi]` with dyadic endpoints and a working precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl DyadicInterval {
    /// Panics when `lo > hi`: empty intervals are not representable.
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        DyadicInterval { lo, hi, prec }
    }

    pub fn point(x: Dyadic, prec: u32) -> Self {
        let lo = x.round_floor(prec);
        let hi = x.round_ceil(prec);
        DyadicInterval { lo, hi, prec }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        DyadicInterval::point(Dyadic::from_int(n), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::from_rational_floor(q, prec),
            hi: Dyadic::from_rational_ceil(q, prec),
            prec,
        }
    }

    pub fn from_rational_bounds(lo: &BigRational, hi: &BigRational, prec: u32) -> Self {
        assert!(lo <= hi, "empty interval");
        DyadicInterval {
            lo: Dyadic::from_rational_floor(lo, prec),
            hi: Dyadic::from_rational_ceil(hi, prec),
            prec,
        }
    }

    /// `[x − r, x + r]` around a decimal literal, used for published numerics.
    pub fn around_decimal(s: &str, radius: &BigRational, prec: u32) -> Option<Self> {
        let x = parse_decimal(s)?;
        Some(DyadicInterval::from_rational_bounds(&(&x - radius), &(&x + radius), prec))
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        DyadicInterval {
            lo: self.lo.round_floor(prec),
            hi: self.hi.round_ceil(prec),
            prec,
        }
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    /// Certified sign, or `None` when the interval straddles zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.is_positive() {
            Some(Ordering::Greater)
        } else if self.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        let lo = self.lo.to_rational();
        let hi = self.hi.to_rational();
        &lo <= q && q <= &hi
    }

    pub fn contains_interval(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &DyadicInterval) -> Option<DyadicInterval> {
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        if lo <= hi {
            Some(DyadicInterval {
                lo: lo.clone(),
                hi: hi.clone(),
                prec: self.prec.max(other.prec),
            })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    fn p(&self, other: &DyadicInterval) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn add(&self, rhs: &DyadicInterval) -> DyadicInterval {
        let prec = self.p(rhs);
        DyadicInterval {
            lo: self.lo.add(&rhs.lo).round_floor(prec),
            hi: self.hi.add(&rhs.hi).round_ceil(prec),
            prec,
        }
    }

    pub fn sub(&self, rhs: &DyadicInterval) -> DyadicInterval {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> DyadicInterval {
        DyadicInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, rhs: &DyadicInterval) -> DyadicInterval {
        let prec = self.p(rhs);
        let cands = [
            self.lo.mul(&rhs.lo),
            self.lo.mul(&rhs.hi),
            self.hi.mul(&rhs.lo),
            self.hi.mul(&rhs.hi),
        ];
        let lo = cands.iter().min().unwrap().round_floor(prec);
        let hi = cands.iter().max().unwrap().round_ceil(prec);
        DyadicInterval { lo, hi, prec }
    }

    /// Tight square (nonnegative even when the interval straddles zero).
    pub fn square(&self) -> DyadicInterval {
        let a = self.lo.mul(&self.lo);
        let b = self.hi.mul(&self.hi);
        let (lo, hi) = if self.contains_zero() {
            (Dyadic::zero(), a.max(b))
        } else if a <= b {
            (a, b)
        } else {
            (b, a)
        };
        DyadicInterval {
            lo: lo.round_floor(self.prec),
            hi: hi.round_ceil(self.prec),
            prec: self.prec,
        }
    }

    pub fn powi(&self, e: u32) -> DyadicInterval {
        match e {
            0 => DyadicInterval::from_int(1, self.prec),
            1 => self.clone(),
            _ => {
                let half = self.powi(e / 2);
                let sq = half.square();
                if e % 2 == 1 {
                    sq.mul(self)
                } else {
                    sq
                }
            }
        }
    }

    pub fn recip(&self) -> Result<DyadicInterval, IntervalError> {
        if self.contains_zero() {
            return Err(IntervalError::DivisionByZero);
        }
        let one = Dyadic::from_int(1);
        Ok(DyadicInterval {
            lo: one.div_floor(&self.hi, self.prec),
            hi: one.div_ceil(&self.lo, self.prec),
            prec: self.prec,
        })
    }

    pub fn div(&self, rhs: &DyadicInterval) -> Result<DyadicInterval, IntervalError> {
        if rhs.contains_zero() {
            return Err(IntervalError::DivisionByZero);
        }
        let prec = self.p(rhs);
        let cands_lo = [
            self.lo.div_floor(&rhs.lo, prec),
            self.lo.div_floor(&rhs.hi, prec),
            self.hi.div_floor(&rhs.lo, prec),
            self.hi.div_floor(&rhs.hi, prec),
        ];
        let cands_hi = [
            self.lo.div_ceil(&rhs.lo, prec),
            self.lo.div_ceil(&rhs.hi, prec),
            self.hi.div_ceil(&rhs.lo, prec),
            self.hi.div_ceil(&rhs.hi, prec),
        ];
        Ok(DyadicInterval {
            lo: cands_lo.iter().min().unwrap().clone(),
            hi: cands_hi.iter().max().unwrap().clone(),
            prec,
        })
    }

    /// Encloses `√t` for every `t` in `self ∩ [0, ∞)`.
    pub fn sqrt(&self) -> Result<DyadicInterval, IntervalError> {
        if self.is_negative() {
            return Err(IntervalError::EntirelyNegative);
        }
        let lo = if self.lo.signum() <= 0 {
            Dyadic::zero()
        } else {
            self.lo.sqrt_floor(self.prec)
        };
        Ok(DyadicInterval {
            lo,
            hi: self.hi.sqrt_ceil(self.prec),
            prec: self.prec,
        })
    }

    pub fn scale_rational(&self, q: &BigRational) -> DyadicInterval {
        self.mul(&DyadicInterval::from_rational(q, self.prec))
    }

    pub fn add_rational(&self, q: &BigRational) -> DyadicInterval {
        self.add(&DyadicInterval::from_rational(q, self.prec))
    }

    /// Bisection halves.
    pub fn split(&self) -> (DyadicInterval, DyadicInterval) {
        let m = self.mid();
        (
            DyadicInterval {
                lo: self.lo.clone(),
                hi: m.clone(),
                prec: self.prec,
            },
            DyadicInterval {
                lo: m,
                hi: self.hi.clone(),
                prec: self.prec,
            },
        )
    }

    /// Width ≤ 2^k.
    pub fn width_at_most_pow2(&self, k: i64) -> bool {
        let w = self.width();
        w.is_zero() || w.log2_floor().unwrap() < k
    }

    pub fn lo_rational(&self) -> BigRational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> BigRational {
        self.hi.to_rational()
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_decimal(&self.lo.to_rational(), 20),
            format_decimal(&self.hi.to_rational(), 20)
        )
    }
}

/// √3 enclosed at `prec` bits.
pub fn sqrt3_interval(prec: u32) -> DyadicInterval {
    DyadicInterval::from_int(3, prec + 8)
        .sqrt()
        .expect("3 > 0")
        .with_precision(prec)
}

/// Interval square root as a free function.
pub fn interval_sqrt(x: &DyadicInterval) -> Result<DyadicInterval, IntervalError> {
    x.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use proptest::prelude::*;

    #[test]
    fn sqrt_of_four_is_exact() {
        let r = interval_sqrt(&DyadicInterval::from_int(4, 64)).unwrap();
        assert!(r.contains(&Dyadic::from_int(2)));
        assert_eq!(r.lo(), r.hi());
    }

    #[test]
    fn sqrt_two_is_tight_at_200_bits() {
        let r = interval_sqrt(&DyadicInterval::from_int(2, 200)).unwrap();
        assert!(r.width_at_most_pow2(-190));
        let approx = parse_decimal("1.41421356237309504880168872420969807856967187537694").unwrap();
        let tol = rat(1, 1) / BigRational::from_integer(num_traits::pow(BigInt::from(10), 45));
        assert!(r.lo_rational() <= &approx + &tol && &approx - &tol <= r.hi_rational());
    }

    #[test]
    fn sqrt_negative_interval_fails() {
        let x = DyadicInterval::new(Dyadic::from_int(-3), Dyadic::from_int(-1), 64);
        assert_eq!(interval_sqrt(&x), Err(IntervalError::EntirelyNegative));
    }

    #[test]
    fn sqrt_straddling_clamps_at_zero() {
        let x = DyadicInterval::new(Dyadic::from_int(-1), Dyadic::from_int(4), 64);
        let r = x.sqrt().unwrap();
        assert!(r.lo().is_zero());
        assert!(r.contains(&Dyadic::from_int(2)));
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_decimal(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(format_decimal(&rat(2, 3), 2), "0.67");
        assert_eq!(format_decimal(&rat(5, 1), 0), "5");
        assert_eq!(parse_decimal("-0.061398137844065").unwrap(), rat(-61398137844065, 1_000_000_000_000_000));
    }

    #[test]
    fn division_by_straddling_interval_fails() {
        let x = DyadicInterval::from_int(1, 64);
        let y = DyadicInterval::new(Dyadic::from_int(-1), Dyadic::from_int(1), 64);
        assert_eq!(x.div(&y), Err(IntervalError::DivisionByZero));
    }

    fn small_rat() -> impl Strategy<Value = BigRational> {
        (-10_000i64..10_000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn containment_of_exact_results(p in small_rat(), q in small_rat(), prec in 8u32..120) {
            let ip = DyadicInterval::from_rational(&p, prec);
            let iq = DyadicInterval::from_rational(&q, prec);
            prop_assert!(ip.add(&iq).contains_rational(&(&p + &q)));
            prop_assert!(ip.sub(&iq).contains_rational(&(&p - &q)));
            prop_assert!(ip.mul(&iq).contains_rational(&(&p * &q)));
            if !q.is_zero() {
                if let Ok(d) = ip.div(&iq) {
                    prop_assert!(d.contains_rational(&(&p / &q)));
                }
            }
            if !p.is_negative() {
                let s = ip.sqrt().unwrap();
                // √p ∈ s  ⇔  lo² ≤ p ≤ hi² with lo ≥ 0
                let lo = s.lo_rational();
                let hi = s.hi_rational();
                prop_assert!(&lo * &lo <= p && p <= &hi * &hi);
            }
        }

        #[test]
        fn doubling_precision_never_widens(p in small_rat(), prec in 8u32..100) {
            let a = DyadicInterval::from_rational(&p, prec).sqrt();
            let b = DyadicInterval::from_rational(&p, 2 * prec).sqrt();
            if let (Ok(a), Ok(b)) = (a, b) {
                prop_assert!(a.contains_interval(&b));
            }
            let ia = DyadicInterval::from_rational(&p, prec);
            let ib = DyadicInterval::from_rational(&p, 2 * prec);
            prop_assert!(ia.contains_interval(&ib));
        }

        #[test]
        fn dyadic_rounding_brackets(n in -1_000_000_000i64..1_000_000_000, prec in 1u32..20) {
            let d = Dyadic::from_int(n);
            prop_assert!(d.round_floor(prec) <= d);
            prop_assert!(d.round_ceil(prec) >= d);
        }
    }
}
