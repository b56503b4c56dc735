use super::lll::lll_reduce;
use super::select::select_factor;
use super::zassenhaus::factor_z;
use crate::dyadic::DyadicInterval;
use crate::poly::ZPoly;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("no integer polynomial of degree at most {0} verified")]
    DegreeBoundExceeded(usize),
}

/// Minimal polynomial of the number enclosed by `refine(prec)`, found by
/// LLL on the powers 1, x, …, x^d scaled by 2^bits, then factored; the
/// factor vanishing at x (checked by interval evaluation) is returned if
/// it carries an irreducibility certificate.
pub fn minpoly_reconstruct(
    refine: impl Fn(u32) -> DyadicInterval,
    degree_bound: usize,
    height_bits: u32,
) -> Result<ZPoly, ReconstructError> {
    let d = degree_bound.max(1);
    let mut bits = (d as u32 + 1) * height_bits.max(8) + 2 * d as u32 + 40;
    for _ in 0..4 {
        if let Some(p) = attempt(&refine, d, bits) {
            return Ok(p);
        }
        bits *= 2;
    }
    Err(ReconstructError::DegreeBoundExceeded(degree_bound))
}

fn attempt(refine: &impl Fn(u32) -> DyadicInterval, d: usize, bits: u32) -> Option<ZPoly> {
    let x0 = refine(64);
    let mag = x0.hi().to_f64().abs().max(x0.lo().to_f64().abs()).max(1.0).log2().ceil() as u32;
    let prec = bits + 64 + d as u32 * (mag + 1);
    let x = refine(prec);
    let mut rows = Vec::with_capacity(d + 1);
    let mut pw = DyadicInterval::from_int(1, prec);
    for i in 0..=d {
        let mut row = vec![BigInt::from(0); d + 2];
        row[i] = BigInt::from(1);
        row[d + 1] = pw.mid().mul_pow2(bits as i64).round_nearest_int();
        rows.push(row);
        pw = pw.mul(&x);
    }
    let reduced = lll_reduce(rows);
    let cand = ZPoly::new(reduced[0][..=d].to_vec());
    if cand.is_zero() || cand.deg() == 0 {
        return None;
    }
    let fz = factor_z(&cand);
    let polys: Vec<ZPoly> = fz.factors.iter().map(|(f, _)| f.clone()).collect();
    let check = 2 * prec;
    let i = select_factor(&polys, |p| vec![refine(p)], prec, check).ok()?;
    if !fz.certificates[i].is_irreducible() {
        return None;
    }
    Some(polys[i].clone())
}
