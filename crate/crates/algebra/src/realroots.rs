//! Real roots of integer polynomials: Sturm counts, isolation by dyadic
//! bisection, refinement, signatures.

use crate::dyadic::{Dyadic, DyadicInterval};
use crate::poly::ZPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("an interval endpoint is a root")]
    EndpointRoot,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero polynomial")]
    Zero,
}

/// Exact sign of p at a dyadic point.
pub fn sign_at(p: &ZPoly, x: &Dyadic) -> i32 {
    let (n, k) = split(x);
    p.sign_at_dyadic(&n, k)
}

fn split(x: &Dyadic) -> (BigInt, u64) {
    if x.exponent() >= 0 {
        (x.mantissa() << x.exponent() as usize, 0)
    } else {
        (x.mantissa().clone(), (-x.exponent()) as u64)
    }
}

#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<ZPoly>,
}

impl SturmSequence {
    /// p, p', then negated pseudo-remainders with their positive content removed.
    pub fn new(p: &ZPoly) -> Self {
        let mut seq = vec![p.clone()];
        if p.deg() == 0 {
            return SturmSequence { seq };
        }
        seq.push(p.derivative().primitive_part());
        if seq[1].lc().is_negative() != p.derivative().lc().is_negative() {
            seq[1] = seq[1].neg();
        }
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.deg() == 0 {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(δ+1) · rem; undo a negative scale factor
            let e = a.deg() - b.deg() + 1;
            let flip = b.lc().is_negative() && e % 2 == 1;
            let r = if flip { r } else { r.neg() };
            let c = r.content().abs();
            seq.push(r.div_scalar_exact(&c).expect("content divides"));
        }
        SturmSequence { seq }
    }

    pub fn variations_at(&self, x: &Dyadic) -> usize {
        variations(self.seq.iter().map(|s| sign_at(s, x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.seq.iter().map(|s| {
            let sg = if s.lc().is_negative() { -1 } else { 1 };
            if positive || s.deg() % 2 == 0 {
                sg
            } else {
                -sg
            }
        }))
    }

    /// Number of distinct real roots in (a, b); endpoints must not be roots.
    pub fn count(&self, a: &Dyadic, b: &Dyadic) -> Result<usize, RootError> {
        if sign_at(&self.seq[0], a) == 0 || sign_at(&self.seq[0], b) == 0 {
            return Err(RootError::EndpointRoot);
        }
        Ok(self.variations_at(a).saturating_sub(self.variations_at(b)))
    }

    pub fn total_real(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Distinct real roots of `p` in the open interval (a, b). Endpoints that
/// are roots are pushed outward by the smallest power of two that clears them.
pub fn sturm_count(p: &ZPoly, a: &Dyadic, b: &Dyadic) -> Result<usize, RootError> {
    if p.is_zero() {
        return Err(RootError::Zero);
    }
    let sq = p.squarefree_part();
    let seq = SturmSequence::new(&sq);
    let a = nudge(&sq, a, -1).ok_or(RootError::EndpointRoot)?;
    let b = nudge(&sq, b, 1).ok_or(RootError::EndpointRoot)?;
    seq.count(&a, &b)
}

fn nudge(p: &ZPoly, x: &Dyadic, dir: i64) -> Option<Dyadic> {
    if sign_at(p, x) != 0 {
        return Some(x.clone());
    }
    for k in (-60..=200).rev() {
        let y = x.add(&Dyadic::from_int(dir).mul_pow2(-k));
        if sign_at(p, &y) != 0 {
            return Some(y);
        }
    }
    None
}

/// Cauchy bound 1 + max |a_i / a_n|, rounded up to a power of two.
pub fn cauchy_bound(p: &ZPoly) -> Dyadic {
    let lc = p.lc().abs();
    let m = p.coeffs()[..p.deg()].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let q = BigRational::new(m, lc) + BigRational::one();
    let mut b = Dyadic::from_int(1);
    while b.to_rational() < q {
        b = b.mul_pow2(1);
    }
    b
}

/// Squarefree polynomial with sorted disjoint isolating intervals (lo, hi).
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub polynomial: ZPoly,
    pub intervals: Vec<(Dyadic, Dyadic)>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, i: usize, prec: u32) -> DyadicInterval {
        let (lo, hi) = &self.intervals[i];
        DyadicInterval::new(lo.clone(), hi.clone(), prec)
    }

    pub fn rational_bounds(&self, i: usize) -> (BigRational, BigRational) {
        let (lo, hi) = &self.intervals[i];
        (lo.to_rational(), hi.to_rational())
    }

    /// Index of the root whose interval meets `(lo, hi)`; refines until unique.
    pub fn find(&self, lo: &BigRational, hi: &BigRational) -> Option<usize> {
        let hits: Vec<usize> = (0..self.len())
            .filter(|&i| {
                let (a, b) = self.rational_bounds(i);
                a < *hi && b > *lo
            })
            .collect();
        if hits.len() == 1 {
            Some(hits[0])
        } else {
            None
        }
    }
}

/// Isolate every real root of the squarefree part of `p`.
pub fn isolate(p: &ZPoly) -> RootIsolation {
    assert!(!p.is_zero(), "isolate of zero");
    let sq = p.squarefree_part();
    let sq = if sq.lc().is_negative() { sq.neg() } else { sq };
    if sq.deg() == 0 {
        return RootIsolation { polynomial: sq, intervals: Vec::new() };
    }
    let seq = SturmSequence::new(&sq);
    let b = cauchy_bound(&sq);
    let mut out = Vec::new();
    let mut stack = vec![(b.neg(), b.clone(), seq.variations_at(&b.neg()), seq.variations_at(&b))];
    while let Some((lo, hi, vl, vh)) = stack.pop() {
        let n = vl - vh;
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mut mid = lo.add(&hi).mul_pow2(-1);
        if sign_at(&sq, &mid) == 0 {
            let w = hi.sub(&lo);
            let mut k = 2;
            loop {
                let cand = mid.add(&w.mul_pow2(-k));
                if sign_at(&sq, &cand) != 0 {
                    mid = cand;
                    break;
                }
                k += 1;
            }
        }
        let vm = seq.variations_at(&mid);
        stack.push((mid.clone(), hi, vm, vh));
        stack.push((lo, mid, vl, vm));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    RootIsolation { polynomial: sq, intervals: out }
}

/// Shrink interval `index` to width ≤ 2^-bits. Interval Newton steps when
/// the derivative enclosure excludes zero, bisection otherwise.
pub fn refine(iso: &RootIsolation, index: usize, bits: i64) -> (Dyadic, Dyadic) {
    let p = &iso.polynomial;
    let dp = p.derivative();
    let (mut lo, mut hi) = iso.intervals[index].clone();
    let target = Dyadic::from_int(1).mul_pow2(-bits);
    let s_lo = sign_at(p, &lo);
    while hi.sub(&lo) > target {
        let prec = (bits.max(64) as u32) + 64;
        let x = DyadicInterval::new(lo.clone(), hi.clone(), prec);
        let d = dp.eval_interval(&x);
        if !d.contains_zero() {
            let m = lo.add(&hi).mul_pow2(-1);
            let fm = p.eval_interval(&DyadicInterval::point(m.clone(), prec));
            if let Ok(step) = fm.div(&d) {
                let n = DyadicInterval::point(m, prec).sub(&step);
                if let Some(nx) = n.intersect(&x) {
                    // keep endpoints exact non-roots with the right signs
                    let (a, b) = (nx.lo().clone(), nx.hi().clone());
                    let ok = sign_at(p, &a) == s_lo && sign_at(p, &b) == -s_lo;
                    if ok && b.sub(&a) < hi.sub(&lo).mul_pow2(-1) {
                        lo = a;
                        hi = b;
                        continue;
                    }
                }
            }
        }
        let m = lo.add(&hi).mul_pow2(-1);
        let sm = sign_at(p, &m);
        if sm == 0 {
            let eps = hi.sub(&lo).mul_pow2(-(bits + 8).max(8));
            return (m.sub(&eps).max(lo), m.add(&eps).min(hi));
        }
        if sm == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    (lo, hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub real_count: usize,
    pub complex_pairs: usize,
}

pub fn signature(p: &ZPoly) -> Result<Signature, RootError> {
    if p.is_zero() {
        return Err(RootError::Zero);
    }
    if !p.is_squarefree() {
        return Err(RootError::NotSquarefree);
    }
    let r = SturmSequence::new(p).total_real();
    Ok(Signature { real_count: r, complex_pairs: (p.deg() - r) / 2 })
}
