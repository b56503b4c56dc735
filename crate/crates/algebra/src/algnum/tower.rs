use super::field::{FieldRef, LElem};
use crate::dyadic::{DyadicInterval, DEFAULT_PRECISION};
use num_rational::BigRational;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("radicand is negative: {0}")]
    NegativeRadicand(String),
    #[error("sign of the radicand is undecided at the precision budget")]
    Indeterminate,
    #[error("element is not invertible in the tower")]
    NotInvertible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroTest {
    ProvedZero,
    ProvedNonzero(DyadicInterval),
    Unknown,
}

struct Layer {
    radicand: Vec<LElem>,
    sign: i32,
}

/// A chain of quadratic extensions `L(√r₀)(√r₁)…`, each generator being
/// `sign · √r` with `r > 0`. Extending returns a new tower; the old one is
/// a prefix and its elements stay valid.
pub struct Tower {
    base: FieldRef,
    parent: Option<Arc<Tower>>,
    layer: Option<Layer>,
    depth: usize,
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tower(depth {})", self.depth)
    }
}

impl Tower {
    pub fn new(base: &FieldRef) -> Arc<Tower> {
        Arc::new(Tower { base: base.clone(), parent: None, layer: None, depth: 0 })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    fn layers(&self) -> Vec<&Layer> {
        let mut v = Vec::with_capacity(self.depth);
        let mut t = self;
        while let Some(l) = &t.layer {
            v.push(l);
            t = t.parent.as_ref().unwrap();
        }
        v.reverse();
        v
    }

    fn has_prefix(self: &Arc<Tower>, other: &Arc<Tower>) -> bool {
        let mut t = self.clone();
        loop {
            if Arc::ptr_eq(&t, other) {
                return true;
            }
            match &t.parent {
                Some(p) => t = p.clone(),
                None => return false,
            }
        }
    }

    /// Radicands and signs, bottom first.
    pub fn radicals(&self) -> Vec<(Vec<LElem>, i32)> {
        self.layers().into_iter().map(|l| (l.radicand.clone(), l.sign)).collect()
    }
}

#[derive(Clone)]
pub struct TowerElement {
    tower: Arc<Tower>,
    coeffs: Vec<LElem>,
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TowerElement").field("depth", &self.tower.depth).field("coeffs", &self.coeffs).finish()
    }
}

fn zeros(field: &FieldRef, n: usize) -> Vec<LElem> {
    vec![LElem::zero(field); n]
}

fn vadd(a: &[LElem], b: &[LElem]) -> Vec<LElem> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vsub(a: &[LElem], b: &[LElem]) -> Vec<LElem> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vneg(a: &[LElem]) -> Vec<LElem> {
    a.iter().map(|x| -x).collect()
}

fn vzero(a: &[LElem]) -> bool {
    a.iter().all(|x| x.is_zero())
}

fn vmul(layers: &[&Layer], x: &[LElem], y: &[LElem]) -> Vec<LElem> {
    let Some((top, rest)) = layers.split_last() else {
        return vec![&x[0] * &y[0]];
    };
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let bd = vmul(rest, b, d);
    let mut lo = vmul(rest, a, c);
    if !vzero(&bd) {
        lo = vadd(&lo, &vmul(rest, &bd, &top.radicand));
    }
    let hi = vadd(&vmul(rest, a, d), &vmul(rest, b, c));
    lo.extend(hi);
    lo
}

fn vinv(layers: &[&Layer], x: &[LElem]) -> Option<Vec<LElem>> {
    let Some((top, rest)) = layers.split_last() else {
        return x[0].inv().map(|v| vec![v]);
    };
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    // (a + bg)⁻¹ = (a − bg)/(a² − b²r)
    let n = vsub(&vmul(rest, a, a), &vmul(rest, &vmul(rest, b, b), &top.radicand));
    let ni = vinv(rest, &n)?;
    let mut out = vmul(rest, a, &ni);
    out.extend(vneg(&vmul(rest, b, &ni)));
    Some(out)
}

fn vinterval(layers: &[&Layer], x: &[LElem], prec: u32) -> DyadicInterval {
    let Some((top, rest)) = layers.split_last() else {
        return x[0].interval(prec);
    };
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let va = vinterval(rest, a, prec);
    if vzero(b) {
        return va;
    }
    va.add(&vinterval(rest, b, prec).mul(&generator_interval(rest, top, prec)))
}

fn generator_interval(rest: &[&Layer], top: &Layer, prec: u32) -> DyadicInterval {
    let r = vinterval(rest, &top.radicand, prec).sqrt().expect("radicand certified positive at adjunction");
    if top.sign < 0 {
        r.neg()
    } else {
        r
    }
}

/// Some square root inside the tower, if one exists there.
fn vsqrt(layers: &[&Layer], x: &[LElem]) -> Option<Vec<LElem>> {
    let Some((top, rest)) = layers.split_last() else {
        return x[0].sqrt_any().map(|v| vec![v]);
    };
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let f = x[0].field().clone();
    let lift = |lo: Vec<LElem>, hi: Vec<LElem>| {
        let mut v = lo;
        v.extend(hi);
        v
    };
    if vzero(b) {
        if let Some(c) = vsqrt(rest, a) {
            return Some(lift(c, zeros(&f, h)));
        }
        // a = d²r
        let ri = vinv(rest, &top.radicand)?;
        let d = vsqrt(rest, &vmul(rest, a, &ri))?;
        return Some(lift(zeros(&f, h), d));
    }
    // (c + dg)² = a + bg: c² = (a ± √(a² − b²r))/2, d = b/(2c)
    let n = vsub(&vmul(rest, a, a), &vmul(rest, &vmul(rest, b, b), &top.radicand));
    let nn = vsqrt(rest, &n)?;
    let half = BigRational::new(1.into(), 2.into());
    for plus in [true, false] {
        let s = if plus { vadd(a, &nn) } else { vsub(a, &nn) };
        let s: Vec<LElem> = s.iter().map(|v| v.scale(&half)).collect();
        let Some(c) = vsqrt(rest, &s) else { continue };
        let two_c: Vec<LElem> = c.iter().map(|v| v.scale(&BigRational::from_integer(2.into()))).collect();
        let Some(ci) = vinv(rest, &two_c) else { continue };
        let d = vmul(rest, b, &ci);
        let cand = lift(c, d);
        if vmul(layers, &cand, &cand) == x {
            return Some(cand);
        }
    }
    None
}

impl TowerElement {
    pub fn from_base(tower: &Arc<Tower>, x: LElem) -> Self {
        let mut coeffs = zeros(&tower.base, 1 << tower.depth);
        coeffs[0] = x;
        TowerElement { tower: tower.clone(), coeffs }
    }

    pub fn from_rational(tower: &Arc<Tower>, c: BigRational) -> Self {
        TowerElement::from_base(tower, LElem::from_rational(&tower.base, c))
    }

    pub fn from_int(tower: &Arc<Tower>, n: i64) -> Self {
        TowerElement::from_base(tower, LElem::from_int(&tower.base, n))
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    /// Multilinear expansion: entry `mask` multiplies the product of the
    /// generators whose bits are set.
    pub fn coefficients(&self) -> &[LElem] {
        &self.coeffs
    }

    /// The base-field value when no generator occurs.
    pub fn as_base(&self) -> Option<&LElem> {
        if vzero(&self.coeffs[1..]) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        vzero(&self.coeffs)
    }

    fn lifted(&self, tower: &Arc<Tower>) -> Vec<LElem> {
        let mut v = self.coeffs.clone();
        v.resize(1 << tower.depth, LElem::zero(&tower.base));
        v
    }

    fn common(&self, rhs: &TowerElement) -> (Arc<Tower>, Vec<LElem>, Vec<LElem>) {
        let t = if self.tower.has_prefix(&rhs.tower) {
            self.tower.clone()
        } else if rhs.tower.has_prefix(&self.tower) {
            rhs.tower.clone()
        } else {
            panic!("tower elements from unrelated towers");
        };
        let a = self.lifted(&t);
        let b = rhs.lifted(&t);
        (t, a, b)
    }

    pub fn add(&self, rhs: &TowerElement) -> TowerElement {
        let (t, a, b) = self.common(rhs);
        TowerElement { tower: t, coeffs: vadd(&a, &b) }
    }

    pub fn sub(&self, rhs: &TowerElement) -> TowerElement {
        let (t, a, b) = self.common(rhs);
        TowerElement { tower: t, coeffs: vsub(&a, &b) }
    }

    pub fn mul(&self, rhs: &TowerElement) -> TowerElement {
        let (t, a, b) = self.common(rhs);
        let c = vmul(&t.layers(), &a, &b);
        TowerElement { tower: t, coeffs: c }
    }

    pub fn neg(&self) -> TowerElement {
        TowerElement { tower: self.tower.clone(), coeffs: vneg(&self.coeffs) }
    }

    pub fn scale(&self, c: &BigRational) -> TowerElement {
        TowerElement { tower: self.tower.clone(), coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn square(&self) -> TowerElement {
        self.mul(self)
    }

    pub fn inv(&self) -> Result<TowerElement, TowerError> {
        let c = vinv(&self.tower.layers(), &self.coeffs).ok_or(TowerError::NotInvertible)?;
        Ok(TowerElement { tower: self.tower.clone(), coeffs: c })
    }

    pub fn div(&self, rhs: &TowerElement) -> Result<TowerElement, TowerError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn interval(&self, prec: u32) -> DyadicInterval {
        vinterval(&self.tower.layers(), &self.coeffs, prec)
    }

    fn certified_sign(&self, prec: u32) -> Option<i32> {
        let mut p = prec;
        while p <= 4 * prec {
            let iv = self.interval(p);
            if iv.is_positive() {
                return Some(1);
            }
            if iv.is_negative() {
                return Some(-1);
            }
            p *= 2;
        }
        None
    }

    /// `sign · √self`. Folds into the current tower when `self` is a square
    /// there; otherwise adjoins a new generator.
    pub fn sqrt(&self, sign: i32) -> Result<TowerElement, TowerError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        match self.certified_sign(DEFAULT_PRECISION) {
            Some(1) => {}
            Some(_) => return Err(TowerError::NegativeRadicand(self.interval(64).to_string())),
            None => return Err(TowerError::Indeterminate),
        }
        let layers = self.tower.layers();
        if let Some(root) = vsqrt(&layers, &self.coeffs) {
            let r = TowerElement { tower: self.tower.clone(), coeffs: root };
            let s = r.certified_sign(DEFAULT_PRECISION).ok_or(TowerError::Indeterminate)?;
            return Ok(if s == sign.signum() { r } else { r.neg() });
        }
        let t = Arc::new(Tower {
            base: self.tower.base.clone(),
            parent: Some(self.tower.clone()),
            layer: Some(Layer { radicand: self.coeffs.clone(), sign: if sign < 0 { -1 } else { 1 } }),
            depth: self.tower.depth + 1,
        });
        let mut coeffs = zeros(&t.base, 1 << t.depth);
        coeffs[1 << self.tower.depth] = LElem::one(&t.base);
        Ok(TowerElement { tower: t, coeffs })
    }
}

/// Exact coefficient vanishing proves zero; interval exclusion proves nonzero.
/// Precision doubles from `prec` up to four times it.
pub fn zero_test_at(e: &TowerElement, prec: u32) -> ZeroTest {
    if e.is_zero() {
        return ZeroTest::ProvedZero;
    }
    let mut p = prec;
    while p <= 4 * prec {
        let iv = e.interval(p);
        if !iv.contains_zero() {
            return ZeroTest::ProvedNonzero(iv);
        }
        p *= 2;
    }
    ZeroTest::Unknown
}

pub fn zero_test(e: &TowerElement) -> ZeroTest {
    zero_test_at(e, DEFAULT_PRECISION)
}
