//! Dense polynomials over a small prime field F_p (p < 2^32) and their
//! factorization: distinct-degree, then Cantor–Zassenhaus equal-degree
//! splitting with a seeded generator.

use crate::poly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coefficients ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// Odd primes in increasing order starting at `from`.
pub fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(3)..).filter(|&n| is_prime(n))
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn from_z(f: &ZPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        FpPoly::new(p, f.coeffs().iter().map(|a| a.mod_floor(&pb).to_u64().unwrap()).collect())
    }

    /// Symmetric lift to Z.
    pub fn to_z(&self) -> ZPoly {
        let half = self.p / 2;
        ZPoly::new(
            self.c
                .iter()
                .map(|&a| if a > half { BigInt::from(a) - BigInt::from(self.p) } else { BigInt::from(a) })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        FpPoly::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + p - o.c.get(i).copied().unwrap_or(0)) % p)
            .collect();
        FpPoly::new(p, v)
    }

    pub fn scale(&self, k: u64) -> Self {
        FpPoly::new(self.p, self.c.iter().map(|&a| mul_mod(a, k, self.p)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut v = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] += (a * b) as u128;
            }
            if i % 64 == 63 {
                for x in v.iter_mut() {
                    *x %= p as u128;
                }
            }
        }
        FpPoly::new(p, v.into_iter().map(|x| (x % p as u128) as u64).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial mod p");
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (FpPoly::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut r = self.c.clone();
        let dd = d.deg();
        let mut q = vec![0u64; self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &dj) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mul_mod(c, dj, p)) % p;
            }
        }
        r.truncate(dd);
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with s·self + t·o = g monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let k = inv_mod(r0.lc(), p);
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        FpPoly::new(p, self.c.iter().enumerate().skip(1).map(|(i, &a)| mul_mod(a, i as u64 % p, p)).collect())
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.deg() == 0 || self.gcd(&self.derivative()).deg() == 0
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs (product of all irreducible factors of degree d, d).
    pub fn ddf(&self) -> Vec<(FpPoly, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = FpPoly::x(p);
        let mut h = x.clone();
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(p, &f);
            let g = h.sub(&x).gcd(&f);
            if g.deg() > 0 {
                f = f.divrem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }

    /// Split a monic product of irreducibles all of degree d.
    pub fn edf(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let p = self.p;
        let f = self.monic();
        if f.deg() == d {
            return vec![f];
        }
        loop {
            let a = FpPoly::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
            if a.deg() == 0 {
                continue;
            }
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut frob = a.rem(&f);
            let mut prod = frob.clone();
            for _ in 1..d {
                frob = frob.pow_mod(p, &f);
                prod = prod.mul(&frob).rem(&f);
            }
            let b = prod.pow_mod((p - 1) / 2, &f).sub(&FpPoly::one(p));
            let g = b.gcd(&f);
            if g.deg() > 0 && g.deg() < f.deg() {
                let mut out = g.edf(d, rng);
                out.extend(f.divrem(&g).0.edf(d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted.
    pub fn factor_squarefree(&self) -> Vec<FpPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ ((self.deg() as u64) << 40));
        let mut out = Vec::new();
        for (g, d) in self.ddf() {
            out.extend(g.edf(d, &mut rng));
        }
        out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
        out
    }

    /// Degrees of the irreducible factors, ascending, without splitting.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for (g, d) in self.ddf() {
            v.extend(std::iter::repeat(d).take(g.deg() / d));
        }
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_inverses() {
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(3_215_031_751));
        assert_eq!(primes_from(2).take(5).collect::<Vec<_>>(), vec![3, 5, 7, 11, 13]);
        assert_eq!(mul_mod(inv_mod(5, 13), 5, 13), 1);
    }

    #[test]
    fn factor_x4_minus_1_mod_13() {
        let f = FpPoly::from_z(&ZPoly::from_i64s(&[-1, 0, 0, 0, 1]), 13);
        let fs = f.factor_squarefree();
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(FpPoly::one(13), |a, b| a.mul(b));
        assert_eq!(prod, f);
    }

    #[test]
    fn x4_plus_1_splits_mod_every_prime() {
        for p in primes_from(3).take(20) {
            let f = FpPoly::from_z(&ZPoly::from_i64s(&[1, 0, 0, 0, 1]), p);
            assert!(f.degree_pattern().iter().all(|&d| d <= 2), "p = {p}");
        }
    }

    #[test]
    fn xgcd_identity() {
        let p = 101;
        let a = FpPoly::new(p, vec![3, 0, 1, 7]);
        let b = FpPoly::new(p, vec![5, 2, 9]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
