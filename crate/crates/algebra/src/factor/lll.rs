//! Integral LLL (δ = 3/4) with exact Gram–Schmidt data.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Reduce the rows of `b` (linearly independent) in place and return them.
pub fn lll_reduce(mut b: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = b.len();
    if n < 2 {
        return b;
    }
    let mut d = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::from(1);
    let mut lam = vec![vec![BigInt::zero(); n]; n];
    d[1] = dot(&b[0], &b[0]);
    let (mut k, mut kmax) = (1usize, 0usize);

    fn red(b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
        let two_lam: BigInt = &lam[k][l] * 2;
        if two_lam.abs() > d[l + 1] {
            let q = (two_lam + &d[l + 1]).div_floor(&(&d[l + 1] * 2));
            let bl = b[l].clone();
            for (x, y) in b[k].iter_mut().zip(&bl) {
                *x -= &q * y;
            }
            lam[k][l] -= &q * &d[l + 1];
            for i in 0..l {
                let t = &q * &lam[l][i];
                lam[k][i] -= t;
            }
        }
    }

    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]).div_floor(&d[i]);
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    d[k + 1] = u;
                }
            }
        }
        red(&mut b, &mut lam, &d, k, k - 1);
        let lhs: BigInt = &d[k + 1] * &d[k - 1] * 4;
        let rhs: BigInt = &d[k] * &d[k] * 3 - &lam[k][k - 1] * &lam[k][k - 1] * 4;
        if lhs < rhs {
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = lam[k][j].clone();
                lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
            }
            let l = lam[k][k - 1].clone();
            let bb = (&d[k - 1] * &d[k + 1] + &l * &l).div_floor(&d[k]);
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t).div_floor(&d[k]);
                lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]).div_floor(&d[k + 1]);
            }
            d[k] = bb;
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                red(&mut b, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_textbook_basis() {
        let m = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let out = lll_reduce(vec![m(&[1, 1, 1]), m(&[-1, 0, 2]), m(&[3, 5, 6])]);
        let norms: Vec<BigInt> = out.iter().map(|r| dot(r, r)).collect();
        assert!(norms[0] <= BigInt::from(3));
    }
}
