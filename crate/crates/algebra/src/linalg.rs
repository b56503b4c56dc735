//! Characteristic polynomials of integer and rational matrices by
//! Hessenberg reduction modulo word-size primes and Chinese remaindering.

use crate::modp::{inv_mod, primes_from};
use crate::poly::{QPoly, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Charpoly det(xI − A) mod p, ascending coefficients of length n+1.
pub fn charpoly_mod(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let sub = |x: u64, y: u64| (x + p - y) % p;
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for j in m + 1..n {
            let u = mul(h[j][m - 1], inv);
            if u == 0 {
                continue;
            }
            for k in 0..n {
                let t = mul(u, h[m][k]);
                h[j][k] = sub(h[j][k], t);
            }
            for row in h.iter_mut() {
                let t = mul(u, row[j]);
                row[m] = (row[m] + t) % p;
            }
        }
    }
    // p_0 = 1, p_m = (x − h_mm) p_{m−1} − Σ_{i<m} h_im (∏_{j=i+1}^{m} h_{j,j−1}) p_{i−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = sub(next[k], mul(h[m][m], c));
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = mul(t, h[i + 1][i]);
            let coef = mul(h[i][m], t);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = sub(next[k], mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Charpoly of an integer matrix, exact.
pub fn charpoly_z(a: &[Vec<BigInt>]) -> ZPoly {
    let n = a.len();
    if n == 0 {
        return ZPoly::one();
    }
    // every coefficient is bounded by (1 + ‖A‖_∞)^n
    let rho = a.iter().map(|r| r.iter().map(|x| x.abs()).sum::<BigInt>()).max().unwrap();
    let bound: BigInt = (rho + 1u32).pow(n as u32) * 2u32 + 1u32;
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for p in primes_from(1 << 31) {
        let pb = BigInt::from(p);
        let am: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect()).collect();
        let cp = charpoly_mod(&am, p);
        // CRT: x ≡ acc (mod modulus), x ≡ cp (mod p)
        let m_inv = inv_mod((&modulus % &pb).to_u64().unwrap(), p);
        for (k, c) in cp.iter().enumerate() {
            let r = (&acc[k] % &pb).to_u64().unwrap();
            let diff = (c + p - r) % p;
            let t = (diff as u128 * m_inv as u128 % p as u128) as u64;
            acc[k] += &modulus * t;
        }
        modulus *= p;
        if modulus > bound {
            break;
        }
    }
    let half = &modulus >> 1;
    ZPoly::new(acc.into_iter().map(|c| if c > half { c - &modulus } else { c }).collect())
}

/// Charpoly of a rational matrix: with D the common denominator,
/// charpoly(A)(x) = D^{-n} · charpoly(DA)(Dx).
pub fn charpoly_q(a: &[Vec<BigRational>]) -> QPoly {
    let n = a.len();
    let d = a.iter().flatten().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|x| (x * &d).to_integer()).collect()).collect();
    let cz = charpoly_z(&scaled);
    let mut out = Vec::with_capacity(n + 1);
    for (k, c) in cz.coeffs().iter().enumerate() {
        let num = c.clone();
        let den = num_traits::pow(d.clone(), n - k);
        out.push(BigRational::new(num, den));
    }
    QPoly::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_charpolys() {
        assert_eq!(charpoly_z(&z(&[&[2, 1], &[1, 2]])), ZPoly::from_i64s(&[3, -4, 1]));
        // companion of x^3 - 2x + 5
        let c = z(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(charpoly_z(&c), ZPoly::from_i64s(&[5, -2, 0, 1]));
        let big = z(&[&[1_000_000_007, 3, 0], &[-7, 999_999_937, 11], &[5, 0, -123_456_789]]);
        let cp = charpoly_z(&big);
        // det = −cp(0); trace = −cp_2
        assert_eq!(cp.coeff(2), BigInt::from(-(1_000_000_007i64 + 999_999_937 - 123_456_789)));
    }

    #[test]
    fn rational_scaling() {
        let h = BigRational::new(1.into(), 2.into());
        let m = vec![vec![h.clone(), BigRational::zero()], vec![BigRational::zero(), h.clone()]];
        let cp = charpoly_q(&m);
        assert_eq!(cp.coeffs(), &[BigRational::new(1.into(), 4.into()), BigRational::from_integer((-1).into()), BigRational::one()]);
    }
}
