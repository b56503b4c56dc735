use crate::dyadic::{format_decimal, Dyadic, DyadicInterval};
use crate::elim::subresultant;
use crate::factor::{factor_z, select_factor, SelectError};
use crate::poly::ZPoly;
use crate::realroots::{isolate, refine, sign_at, RootIsolation, SturmSequence};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("interval holds {0} roots of the polynomial, expected exactly one")]
    NotIsolating(usize),
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error("root could not be isolated within the precision budget")]
    PrecisionExhausted,
    #[error(transparent)]
    Selection(#[from] SelectError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A real algebraic number: irreducible primitive integer minimal polynomial
/// and an interval holding exactly one of its roots.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: ZPoly,
    exact: Option<BigRational>,
    // tightest known isolating interval, shared between clones
    cell: Arc<Mutex<(Dyadic, Dyadic)>>,
}

const MAX_LOCATE_PREC: u32 = 1 << 14;

fn normalize(p: &ZPoly) -> ZPoly {
    let p = p.primitive_part();
    if p.lc().is_negative() {
        p.neg()
    } else {
        p
    }
}

fn irreducible(p: &ZPoly) -> bool {
    let f = factor_z(p);
    f.factors.len() == 1 && f.factors[0].1 == 1 && f.all_certified()
}

/// Strict interior count of roots of the squarefree `p` in `(lo, hi)`,
/// pushing endpoints that hit a root a little outward.
fn count_in(seq: &SturmSequence, p: &ZPoly, lo: &Dyadic, hi: &Dyadic) -> (Dyadic, Dyadic, usize) {
    let mut a = lo.clone();
    let mut b = hi.clone();
    let mut k = 8;
    loop {
        let w = b.sub(&a).max(Dyadic::from_int(1).mul_pow2(-64));
        if sign_at(p, &a) == 0 {
            a = a.sub(&w.mul_pow2(-k));
        } else if sign_at(p, &b) == 0 {
            b = b.add(&w.mul_pow2(-k));
        } else {
            break;
        }
        k += 1;
    }
    let n = seq.count(&a, &b).unwrap_or(0);
    (a, b, n)
}

impl AlgebraicNumber {
    pub fn from_rational(q: BigRational) -> Self {
        let minpoly = ZPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        let lo = Dyadic::from_rational_floor(&q, 64);
        let hi = Dyadic::from_rational_ceil(&q, 64);
        AlgebraicNumber { minpoly, exact: Some(q), cell: Arc::new(Mutex::new((lo, hi))) }
    }

    pub fn from_int(n: i64) -> Self {
        AlgebraicNumber::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        AlgebraicNumber::from_int(0)
    }

    /// `minpoly` must be irreducible over Q and have exactly one root in `(lo, hi)`.
    pub fn new(minpoly: &ZPoly, lo: &BigRational, hi: &BigRational) -> Result<Self, AlgError> {
        let p = normalize(minpoly);
        if p.deg() == 0 || !irreducible(&p) {
            return Err(AlgError::NotIrreducible);
        }
        Self::with_irreducible(p, lo, hi)
    }

    fn with_irreducible(p: ZPoly, lo: &BigRational, hi: &BigRational) -> Result<Self, AlgError> {
        if p.deg() == 1 {
            let q = BigRational::new(-p.coeff(0), p.coeff(1));
            if &q < lo || &q > hi {
                return Err(AlgError::NotIsolating(0));
            }
            return Ok(AlgebraicNumber::from_rational(q));
        }
        let seq = SturmSequence::new(&p);
        let a = Dyadic::from_rational_floor(lo, 256);
        let b = Dyadic::from_rational_ceil(hi, 256);
        let (a, b, n) = count_in(&seq, &p, &a, &b);
        if n != 1 {
            return Err(AlgError::NotIsolating(n));
        }
        Ok(AlgebraicNumber { minpoly: p, exact: None, cell: Arc::new(Mutex::new((a, b))) })
    }

    /// The root of `p` lying in `(lo, hi)`: `p` is factored and the unique
    /// irreducible factor with a root there is kept.
    pub fn root_in(p: &ZPoly, lo: &BigRational, hi: &BigRational) -> Result<Self, AlgError> {
        let f = factor_z(p);
        let mut found = Vec::new();
        for (g, _) in &f.factors {
            match Self::with_irreducible(g.clone(), lo, hi) {
                Ok(x) => found.push(x),
                Err(AlgError::NotIsolating(0)) => {}
                Err(e) => return Err(e),
            }
        }
        match found.len() {
            1 => Ok(found.pop().unwrap()),
            n => Err(AlgError::NotIsolating(n)),
        }
    }

    /// All real roots of `p`, grouped by irreducible factor and sorted.
    pub fn real_roots(p: &ZPoly) -> Vec<AlgebraicNumber> {
        let mut out = Vec::new();
        for (g, _) in factor_z(p).factors {
            if g.deg() == 1 {
                out.push(AlgebraicNumber::from_rational(BigRational::new(-g.coeff(0), g.coeff(1))));
                continue;
            }
            let iso = isolate(&g);
            for (a, b) in iso.intervals {
                out.push(AlgebraicNumber { minpoly: g.clone(), exact: None, cell: Arc::new(Mutex::new((a, b))) });
            }
        }
        out.sort_by(|a, b| a.approx().partial_cmp(&b.approx()).unwrap());
        out
    }

    pub fn minpoly(&self) -> &ZPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.exact.as_ref().is_some_and(|q| Zero::is_zero(q))
    }

    /// Current isolating interval as rationals.
    pub fn interval(&self) -> (BigRational, BigRational) {
        let g = self.cell.lock().unwrap();
        (g.0.to_rational(), g.1.to_rational())
    }

    /// Enclosure of width at most `2^-prec` (absolute), carried at `prec` significant bits.
    pub fn enclosure(&self, prec: u32) -> DyadicInterval {
        let work = prec + 16;
        if let Some(q) = &self.exact {
            return DyadicInterval::from_rational(q, work);
        }
        let mut g = self.cell.lock().unwrap();
        let target = Dyadic::from_int(1).mul_pow2(-(prec as i64));
        if g.1.sub(&g.0) > target {
            let iso = RootIsolation { polynomial: self.minpoly.clone(), intervals: vec![g.clone()] };
            *g = refine(&iso, 0, prec as i64);
        }
        DyadicInterval::new(g.0.clone(), g.1.clone(), work)
    }

    /// Same number with its interval shrunk to width `2^-bits`.
    pub fn refined(&self, bits: u32) -> AlgebraicNumber {
        let e = self.enclosure(bits);
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            exact: self.exact.clone(),
            cell: Arc::new(Mutex::new((e.lo().clone(), e.hi().clone()))),
        }
    }

    pub fn approx(&self) -> f64 {
        self.enclosure(64).mid_f64()
    }

    /// Certified sign.
    pub fn signum(&self) -> i32 {
        if let Some(q) = &self.exact {
            return if q.is_positive() { 1 } else if q.is_negative() { -1 } else { 0 };
        }
        let mut prec = 32;
        loop {
            let e = self.enclosure(prec);
            if e.is_positive() {
                return 1;
            }
            if e.is_negative() {
                return -1;
            }
            prec *= 2;
        }
    }

    /// `digits` correct decimals after the point (truncated midpoint of a tight enclosure).
    pub fn to_decimal(&self, digits: usize) -> String {
        let bits = (digits as f64 * 3.33) as u32 + 16;
        format_decimal(&self.enclosure(bits).mid().to_rational(), digits)
    }

    pub fn neg(&self) -> AlgebraicNumber {
        if let Some(q) = &self.exact {
            return AlgebraicNumber::from_rational(-q);
        }
        let (a, b) = self.cell.lock().unwrap().clone();
        AlgebraicNumber { minpoly: normalize(&self.minpoly.reflect()), exact: None, cell: Arc::new(Mutex::new((b.neg(), a.neg()))) }
    }

    pub fn inv(&self) -> Result<AlgebraicNumber, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if let Some(q) = &self.exact {
            return Ok(AlgebraicNumber::from_rational(q.recip()));
        }
        let rev = normalize(&self.minpoly.reverse());
        locate(rev, |prec| {
            self.enclosure(prec).recip().unwrap_or_else(|_| DyadicInterval::from_int(0, prec).hull(&DyadicInterval::from_int(1, prec)))
        })
    }

    pub fn sqrt(&self) -> Result<AlgebraicNumber, AlgError> {
        match self.signum() {
            -1 => return Err(AlgError::NegativeRadicand),
            0 => return Ok(AlgebraicNumber::zero()),
            _ => {}
        }
        let sq = self.minpoly.compose_x2();
        choose(&sq, |prec| vec![self.enclosure(prec).sqrt().expect("positive")])
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = &self.exact {
            return write!(f, "{q}");
        }
        write!(f, "{}…", self.to_decimal(20))
    }
}

/// The root of the irreducible `f` enclosed by `value(prec)` for large enough `prec`.
fn locate(f: ZPoly, value: impl Fn(u32) -> DyadicInterval) -> Result<AlgebraicNumber, AlgError> {
    if f.deg() == 1 {
        return Ok(AlgebraicNumber::from_rational(BigRational::new(-f.coeff(0), f.coeff(1))));
    }
    let seq = SturmSequence::new(&f);
    let mut prec = 64;
    while prec <= MAX_LOCATE_PREC {
        let v = value(prec);
        let (a, b, n) = count_in(&seq, &f, v.lo(), v.hi());
        if n == 1 {
            return Ok(AlgebraicNumber { minpoly: f, exact: None, cell: Arc::new(Mutex::new((a, b))) });
        }
        prec *= 2;
    }
    Err(AlgError::PrecisionExhausted)
}

/// Factor `r` and keep the irreducible factor vanishing at `value`.
fn choose(r: &ZPoly, value: impl Fn(u32) -> Vec<DyadicInterval>) -> Result<AlgebraicNumber, AlgError> {
    let fac = factor_z(r);
    let cands: Vec<ZPoly> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
    let i = select_factor(&cands, &value, 64, MAX_LOCATE_PREC)?;
    locate(cands[i].clone(), |prec| value(prec).remove(0))
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// `Res_y(p(y), q(z − y))`: vanishes at every sum of roots.
pub fn sum_resultant(p: &ZPoly, q: &ZPoly) -> ZPoly {
    let a: crate::poly::Poly<ZPoly> = crate::poly::Poly::new(p.coeffs().iter().map(|c| ZPoly::constant(c.clone())).collect());
    let n = q.deg();
    let mut b: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for (k, qk) in q.coeffs().iter().enumerate() {
        for j in 0..=k {
            let mut c = qk * binomial(k, j);
            if j.is_odd() {
                c = -c;
            }
            b[j][k - j] += c;
        }
    }
    let b = crate::poly::Poly::new(b.into_iter().map(ZPoly::new).collect());
    subresultant(&a, &b)
}

/// `Res_y(p(y), y^n q(z/y))`: vanishes at every product of roots.
pub fn product_resultant(p: &ZPoly, q: &ZPoly) -> ZPoly {
    let a: crate::poly::Poly<ZPoly> = crate::poly::Poly::new(p.coeffs().iter().map(|c| ZPoly::constant(c.clone())).collect());
    let n = q.deg();
    let mut b = vec![ZPoly::zero(); n + 1];
    for (k, qk) in q.coeffs().iter().enumerate() {
        b[n - k] = ZPoly::monomial(qk.clone(), k);
    }
    subresultant(&a, &crate::poly::Poly::new(b))
}

fn combine(x: &DyadicInterval, y: &DyadicInterval, op: ArithOp) -> DyadicInterval {
    match op {
        ArithOp::Add => x.add(y),
        ArithOp::Sub => x.sub(y),
        ArithOp::Mul => x.mul(y),
        ArithOp::Div => x.div(y).unwrap_or_else(|_| {
            // wide enough to straddle everything; more precision resolves it
            let big = Dyadic::from_int(1).mul_pow2(4096);
            DyadicInterval::new(big.neg(), big, x.precision())
        }),
    }
}

/// Exact arithmetic: compose minimal polynomials by a resultant, factor,
/// and select the factor by interval evaluation.
pub fn alg_arith(x: &AlgebraicNumber, y: &AlgebraicNumber, op: ArithOp) -> Result<AlgebraicNumber, AlgError> {
    if op == ArithOp::Div && y.is_zero() {
        return Err(AlgError::DivisionByZero);
    }
    if let (Some(a), Some(b)) = (&x.exact, &y.exact) {
        let v = match op {
            ArithOp::Add => a + b,
            ArithOp::Sub => a - b,
            ArithOp::Mul => a * b,
            ArithOp::Div => a / b,
        };
        return Ok(AlgebraicNumber::from_rational(v));
    }
    if op == ArithOp::Mul && (x.is_zero() || y.is_zero()) {
        return Ok(AlgebraicNumber::zero());
    }
    let r = match op {
        ArithOp::Add => sum_resultant(&x.minpoly, &y.minpoly),
        ArithOp::Sub => sum_resultant(&x.minpoly, &y.minpoly.reflect()),
        ArithOp::Mul => product_resultant(&x.minpoly, &y.minpoly),
        ArithOp::Div => product_resultant(&x.minpoly, &y.minpoly.reverse()),
    };
    choose(&r, |prec| vec![combine(&x.enclosure(prec), &y.enclosure(prec), op)])
}
