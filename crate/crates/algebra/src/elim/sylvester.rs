use super::ElimError;
use crate::poly::Poly;
use crate::ring::Domain;

pub const SYLVESTER_MAX_DEGREE: usize = 8;

/// Rows: `deg q` shifted copies of `p`, then `deg p` copies of `q`, leading
/// coefficients first.
pub fn sylvester_matrix<R: Domain>(p: &Poly<R>, q: &Poly<R>) -> Vec<Vec<R>> {
    let (m, n) = (p.deg(), q.deg());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, shifts) in [(p, n), (q, m)] {
        let d = src.deg();
        for s in 0..shifts {
            let mut row = vec![R::zero(); size];
            for k in 0..=d {
                row[s + k] = src.coeff(d - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Res(p, q) as the Sylvester determinant, by Bareiss elimination.
pub fn sylvester_resultant_oracle<R: Domain>(p: &Poly<R>, q: &Poly<R>) -> Result<R, ElimError> {
    if p.is_zero() || q.is_zero() {
        return Err(ElimError::ZeroInput);
    }
    for d in [p.deg(), q.deg()] {
        if d > SYLVESTER_MAX_DEGREE {
            return Err(ElimError::DegreeTooLarge(d));
        }
    }
    if p.deg() + q.deg() == 0 {
        return Ok(R::one());
    }
    Ok(bareiss_det(sylvester_matrix(p, q)))
}

pub(crate) fn bareiss_det<R: Domain>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    let mut neg = false;
    let mut prev = R::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return R::zero();
        };
        if piv != k {
            a.swap(piv, k);
            neg = !neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev).expect("Bareiss step is exact");
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if neg {
        d.neg()
    } else {
        d
    }
}
