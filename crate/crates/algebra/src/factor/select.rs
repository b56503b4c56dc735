use crate::dyadic::DyadicInterval;
use crate::multi::{Coeff, MultiPoly};
use crate::poly::{QPoly, ZPoly, Zs3Poly};
use thiserror::Error;

/// Enclosure of a polynomial's value on a box; univariate types read `point[0]`.
pub trait IntervalEval {
    fn eval_at(&self, point: &[DyadicInterval]) -> DyadicInterval;
}

impl IntervalEval for ZPoly {
    fn eval_at(&self, point: &[DyadicInterval]) -> DyadicInterval {
        self.eval_interval(&point[0])
    }
}

impl IntervalEval for QPoly {
    fn eval_at(&self, point: &[DyadicInterval]) -> DyadicInterval {
        self.eval_interval(&point[0])
    }
}

impl IntervalEval for Zs3Poly {
    fn eval_at(&self, point: &[DyadicInterval]) -> DyadicInterval {
        self.eval_interval(&point[0])
    }
}

impl<R: Coeff> IntervalEval for MultiPoly<R> {
    fn eval_at(&self, point: &[DyadicInterval]) -> DyadicInterval {
        self.eval_interval(point)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelectError {
    #[error("factors {0:?} all vanish on the witness at the finest precision")]
    Ambiguous(Vec<usize>),
    #[error("no factor vanishes on the witness")]
    NoneVanish,
}

/// Index of the unique candidate whose enclosure at the witness contains
/// zero. `witness(prec)` returns the witness box at `prec` bits; precision
/// doubles from `start` up to `max` while more than one candidate straddles.
pub fn select_factor<P: IntervalEval>(
    candidates: &[P],
    witness: impl Fn(u32) -> Vec<DyadicInterval>,
    start: u32,
    max: u32,
) -> Result<usize, SelectError> {
    let mut prec = start.max(16);
    loop {
        let pt = witness(prec);
        let live: Vec<usize> = (0..candidates.len()).filter(|&i| candidates[i].eval_at(&pt).contains_zero()).collect();
        match live.len() {
            0 => return Err(SelectError::NoneVanish),
            1 => return Ok(live[0]),
            _ if prec >= max => return Err(SelectError::Ambiguous(live)),
            _ => prec = (prec * 2).min(max),
        }
    }
}
