//! Quadratic multifactor Hensel lifting over Z.

use crate::modp::FpPoly;
use crate::poly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

fn reduce(f: &ZPoly, m: &BigInt) -> ZPoly {
    ZPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Division by a monic polynomial, coefficients reduced mod m.
fn divrem_monic(a: &ZPoly, h: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let (q, r) = a.pseudo_divrem(h);
    (reduce(&q, m), reduce(&r, m))
}

fn lift_fp(f: &FpPoly) -> ZPoly {
    ZPoly::new(f.c.iter().map(|&x| BigInt::from(x)).collect())
}

/// Smallest p^(2^j) that is at least `target`.
pub fn lift_modulus(p: u64, target: &BigInt) -> BigInt {
    let mut m = BigInt::from(p);
    while &m < target {
        m = &m * &m;
    }
    m
}

/// Lift `f ≡ lc(f) · ∏ factors (mod p)` to monic factors modulo
/// [`lift_modulus`]`(p, target)`. `factors` are monic and pairwise coprime mod p.
pub fn multifactor_lift(f: &ZPoly, factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    let m = lift_modulus(p, target);
    let f = reduce(f, &m);
    lift_tree(&f, factors, p, &m)
}

fn lift_tree(f: &ZPoly, factors: &[FpPoly], p: u64, m_final: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let inv = mod_inverse(&f.lc(), m_final);
        return vec![reduce(&f.scale(&inv), m_final)];
    }
    let k = factors.len() / 2;
    let lc_p = FpPoly::from_z(&ZPoly::constant(f.lc()), p);
    let g0 = factors[..k].iter().fold(lc_p, |a, b| a.mul(b));
    let h0 = factors[k..].iter().fold(FpPoly::one(p), |a, b| a.mul(b));
    let (one, s0, t0) = g0.xgcd(&h0);
    debug_assert_eq!(one.c, vec![1]);
    let (mut g, mut h, mut s, mut t) = (lift_fp(&g0), lift_fp(&h0), lift_fp(&s0), lift_fp(&t0));
    let mut m = BigInt::from(p);
    while &m < m_final {
        m = &m * &m;
        let e = reduce(&f.sub(&g.mul(&h)), &m);
        let (q, r) = divrem_monic(&reduce(&s.mul(&e), &m), &h, &m);
        let g1 = reduce(&g.add(&t.mul(&e)).add(&q.mul(&g)), &m);
        let h1 = reduce(&h.add(&r), &m);
        let b = reduce(&s.mul(&g1).add(&t.mul(&h1)).sub(&ZPoly::one()), &m);
        let (c, d) = divrem_monic(&reduce(&s.mul(&b), &m), &h1, &m);
        s = reduce(&s.sub(&d), &m);
        t = reduce(&t.sub(&t.mul(&b)).sub(&c.mul(&g1)), &m);
        g = g1;
        h = h1;
    }
    let mut out = lift_tree(&g, &factors[..k], p, m_final);
    out.extend(lift_tree(&h, &factors[k..], p, m_final));
    out
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts_reassemble() {
        // (x^2 + 1)(x - 3)(2x + 5) with lc 2
        let f = ZPoly::from_i64s(&[1, 0, 1]).mul(&ZPoly::from_i64s(&[-3, 1])).mul(&ZPoly::from_i64s(&[5, 2]));
        let p = 7;
        let fs = FpPoly::from_z(&f, p).monic().factor_squarefree();
        let target = BigInt::from(10).pow(30);
        let lifted = multifactor_lift(&f, &fs, p, &target);
        let m = lift_modulus(p, &target);
        let prod = lifted.iter().fold(ZPoly::constant(f.lc()), |a, b| a.mul(b));
        assert_eq!(reduce(&prod, &m), reduce(&f, &m));
    }
}
