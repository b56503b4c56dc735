use super::number::{AlgError, AlgebraicNumber};
use crate::dyadic::{sqrt3_interval, DyadicInterval};
use crate::factor::factor_z;
use crate::linalg::charpoly_q;
use crate::poly::{q_to_primitive_z, QPoly, ZPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// `K = Q[T]/(m)` for an irreducible `m`, with `T` pinned to one real root.
/// Elements of `L = K(√3)` are pairs `p + q√3`.
#[derive(Debug)]
pub struct BaseField {
    modulus: QPoly,
    generator: AlgebraicNumber,
}

pub type FieldRef = Arc<BaseField>;

impl BaseField {
    /// `T` is the given real algebraic number; `K = Q(T)`.
    pub fn new(generator: AlgebraicNumber) -> FieldRef {
        let modulus = generator.minpoly().to_q().monic();
        Arc::new(BaseField { modulus, generator })
    }

    /// `K = Q`, with `T` the rational `c`.
    pub fn rational(c: BigRational) -> FieldRef {
        BaseField::new(AlgebraicNumber::from_rational(c))
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn generator(&self) -> &AlgebraicNumber {
        &self.generator
    }

    fn reduce(&self, a: &QPoly) -> QPoly {
        if a.deg() < self.degree() || a.is_zero() {
            a.clone()
        } else {
            a.rem(&self.modulus)
        }
    }

    fn kmul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&a.mul(b))
    }

    fn kinv(&self, a: &QPoly) -> Option<QPoly> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.xgcd(&self.modulus);
        if g.deg() != 0 {
            return None;
        }
        Some(self.reduce(&s))
    }

    fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
        if q.is_negative() {
            return None;
        }
        let (n, d) = (q.numer(), q.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(BigRational::new(rn, rd))
        } else {
            None
        }
    }

    /// Square root in `K` (either sign), or `None` when `beta` is not a square.
    /// Trager: factor the norm of `(x − sT)² − β` over Q, then read a root off
    /// a factor by reducing it modulo that quadratic.
    pub fn k_sqrt(&self, beta: &QPoly) -> Option<QPoly> {
        if beta.is_zero() {
            return Some(QPoly::zero());
        }
        let n = self.degree();
        if n == 1 || beta.deg() == 0 {
            if let Some(r) = Self::rational_sqrt(&beta.coeff(0)) {
                if beta.deg() == 0 {
                    return Some(QPoly::constant(r));
                }
            }
            if n == 1 {
                return None;
            }
        }
        let t = QPoly::x();
        for s in [0i64, 1, -1, 2, -2, 3, -3, 5, -5, 7] {
            let st = t.scale(&BigRational::from_integer(BigInt::from(s)));
            let c = beta.sub(&self.kmul(&st, &st));
            let two_st = st.scale(&BigRational::from_integer(BigInt::from(2)));
            let mut m = vec![vec![BigRational::zero(); 2 * n]; 2 * n];
            let mut ti = QPoly::one();
            for i in 0..n {
                m[n + i][i] = BigRational::from_integer(BigInt::from(1));
                let low = self.kmul(&ti, &c);
                let high = self.kmul(&ti, &two_st);
                for (r, v) in low.coeffs().iter().enumerate() {
                    m[r][n + i] = v.clone();
                }
                for (r, v) in high.coeffs().iter().enumerate() {
                    m[n + r][n + i] = v.clone();
                }
                ti = self.kmul(&ti, &t);
            }
            let norm = q_to_primitive_z(&charpoly_q(&m));
            if !norm.is_squarefree() {
                continue;
            }
            let fac = factor_z(&norm);
            if fac.factors.len() == 1 {
                return None;
            }
            for (g, _) in &fac.factors {
                // Horner in K[x]/((x − sT)² − β), elements A + Bx
                let (mut a, mut b) = (QPoly::zero(), QPoly::zero());
                for coef in g.coeffs().iter().rev() {
                    let na = self.kmul(&b, &c).add(&QPoly::constant(BigRational::from_integer(coef.clone())));
                    let nb = a.add(&self.kmul(&b, &two_st));
                    a = na;
                    b = nb;
                }
                let Some(bi) = self.kinv(&b) else { continue };
                let gamma = self.kmul(&a, &bi).neg().sub(&st);
                if self.kmul(&gamma, &gamma) == *beta {
                    return Some(gamma);
                }
            }
            return None;
        }
        None
    }
}

/// `p + q√3` in `L = K(√3)`.
#[derive(Clone)]
pub struct LElem {
    field: FieldRef,
    p: QPoly,
    q: QPoly,
}

impl fmt::Debug for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})√3", self.p, self.q)
    }
}

impl PartialEq for LElem {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q
    }
}

fn rq(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LElem {
    pub fn new(field: &FieldRef, p: QPoly, q: QPoly) -> Self {
        LElem { p: field.reduce(&p), q: field.reduce(&q), field: field.clone() }
    }

    pub fn zero(field: &FieldRef) -> Self {
        LElem::new(field, QPoly::zero(), QPoly::zero())
    }

    pub fn one(field: &FieldRef) -> Self {
        LElem::from_rational(field, rq(1))
    }

    pub fn from_rational(field: &FieldRef, c: BigRational) -> Self {
        LElem::new(field, QPoly::constant(c), QPoly::zero())
    }

    pub fn from_int(field: &FieldRef, n: i64) -> Self {
        LElem::from_rational(field, rq(n))
    }

    /// The generator `T` (for a rational field, the constant itself).
    pub fn gen(field: &FieldRef) -> Self {
        match field.generator().as_rational() {
            Some(c) if field.degree() == 1 => LElem::from_rational(field, c.clone()),
            _ => LElem::new(field, QPoly::x(), QPoly::zero()),
        }
    }

    pub fn sqrt3(field: &FieldRef) -> Self {
        LElem::new(field, QPoly::zero(), QPoly::one())
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn parts(&self) -> (&QPoly, &QPoly) {
        (&self.p, &self.q)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Every rational coefficient of the element in the basis `T^i, T^i√3`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        let n = self.field.degree();
        let mut v = Vec::with_capacity(2 * n);
        for part in [&self.p, &self.q] {
            for i in 0..n {
                v.push(part.coeff(i));
            }
        }
        v
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        LElem { field: self.field.clone(), p: self.p.scale(c), q: self.q.scale(c) }
    }

    pub fn conj(&self) -> Self {
        LElem { field: self.field.clone(), p: self.p.clone(), q: self.q.neg() }
    }

    /// `p² − 3q²`, in `K`.
    pub fn norm_to_k(&self) -> QPoly {
        let f = &self.field;
        f.kmul(&self.p, &self.p).sub(&f.kmul(&self.q, &self.q).scale(&rq(3)))
    }

    pub fn inv(&self) -> Option<Self> {
        let ni = self.field.kinv(&self.norm_to_k())?;
        let f = &self.field;
        Some(LElem { field: f.clone(), p: f.kmul(&self.p, &ni), q: f.kmul(&self.q, &ni).neg() })
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Enclosure at `prec` bits of working precision; cancellation among large
    /// coefficients can widen it, callers raise `prec` if needed.
    pub fn interval(&self, prec: u32) -> DyadicInterval {
        let t = self.field.generator().enclosure(prec);
        let pv = self.p.eval_interval(&t);
        if self.q.is_zero() {
            return pv;
        }
        pv.add(&self.q.eval_interval(&t).mul(&sqrt3_interval(t.precision())))
    }

    /// A square root in `L` (either sign), or `None` when there is none.
    pub fn sqrt_any(&self) -> Option<Self> {
        let f = &self.field;
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.q.is_zero() {
            if let Some(g) = f.k_sqrt(&self.p) {
                return Some(LElem::new(f, g, QPoly::zero()));
            }
            return f.k_sqrt(&self.p.scale(&BigRational::new(1.into(), 3.into()))).map(|g| LElem::new(f, QPoly::zero(), g));
        }
        // (u + v√3)² = p + q√3 gives u² = (p ± √(p² − 3q²))/2, v = q/(2u)
        let nn = f.k_sqrt(&self.norm_to_k())?;
        let half = BigRational::new(1.into(), 2.into());
        for sgn in [1i64, -1] {
            let u2 = self.p.add(&nn.scale(&rq(sgn))).scale(&half);
            let Some(u) = f.k_sqrt(&u2) else { continue };
            let Some(ui) = f.kinv(&u.scale(&rq(2))) else { continue };
            let g = LElem::new(f, u, f.kmul(&self.q, &ui));
            if g.square() == *self {
                return Some(g);
            }
        }
        None
    }

    /// The root whose sign matches `sign` (±1), checked by interval evaluation.
    pub fn sqrt_signed(&self, sign: i32, prec: u32) -> Option<Self> {
        let g = self.sqrt_any()?;
        if g.is_zero() {
            return Some(g);
        }
        let mut p = prec;
        loop {
            let iv = g.interval(p);
            if iv.is_positive() {
                return Some(if sign > 0 { g } else { -&g });
            }
            if iv.is_negative() {
                return Some(if sign > 0 { -&g } else { g });
            }
            p *= 2;
        }
    }

    /// Matrix of multiplication by `self` on the Q-basis `T^i, T^i√3`.
    fn mult_matrix(&self) -> Vec<Vec<BigRational>> {
        let f = &self.field;
        let n = f.degree();
        let mut m = vec![vec![BigRational::zero(); 2 * n]; 2 * n];
        let mut ti = QPoly::one();
        for i in 0..n {
            let a = f.kmul(&self.p, &ti);
            let b = f.kmul(&self.q, &ti);
            for (r, v) in a.coeffs().iter().enumerate() {
                m[r][i] = v.clone();
                m[n + r][n + i] = v.clone();
            }
            for (r, v) in b.coeffs().iter().enumerate() {
                m[n + r][i] = v.clone();
                m[r][n + i] = v * rq(3);
            }
            ti = f.kmul(&ti, &QPoly::x());
        }
        m
    }

    /// Minimal polynomial over Q: squarefree part of the characteristic
    /// polynomial of multiplication, which is a power of the minimal polynomial.
    pub fn minpoly(&self) -> ZPoly {
        let cp = q_to_primitive_z(&charpoly_q(&self.mult_matrix()));
        let sq = cp.squarefree_part();
        if sq.lc().is_negative() {
            sq.neg()
        } else {
            sq
        }
    }

    /// The real number this element denotes under the chosen embedding.
    pub fn to_algebraic(&self) -> Result<AlgebraicNumber, AlgError> {
        let mp = self.minpoly();
        let mut prec = 64;
        loop {
            let iv = self.interval(prec);
            if let Ok(x) = AlgebraicNumber::new(&mp, &iv.lo_rational(), &iv.hi_rational()) {
                return Ok(x);
            }
            if prec > 1 << 14 {
                return Err(AlgError::PrecisionExhausted);
            }
            prec *= 2;
        }
    }
}

impl<'a> Add<&'a LElem> for &'a LElem {
    type Output = LElem;
    fn add(self, rhs: &LElem) -> LElem {
        LElem { field: self.field.clone(), p: self.p.add(&rhs.p), q: self.q.add(&rhs.q) }
    }
}

impl<'a> Sub<&'a LElem> for &'a LElem {
    type Output = LElem;
    fn sub(self, rhs: &LElem) -> LElem {
        LElem { field: self.field.clone(), p: self.p.sub(&rhs.p), q: self.q.sub(&rhs.q) }
    }
}

impl<'a> Mul<&'a LElem> for &'a LElem {
    type Output = LElem;
    fn mul(self, rhs: &LElem) -> LElem {
        let f = &self.field;
        let pp = f.kmul(&self.p, &rhs.p);
        let qq = f.kmul(&self.q, &rhs.q);
        let pq = f.kmul(&self.p, &rhs.q);
        let qp = f.kmul(&self.q, &rhs.p);
        LElem { field: f.clone(), p: pp.add(&qq.scale(&rq(3))), q: pq.add(&qp) }
    }
}

impl Neg for &LElem {
    type Output = LElem;
    fn neg(self) -> LElem {
        LElem { field: self.field.clone(), p: self.p.neg(), q: self.q.neg() }
    }
}
