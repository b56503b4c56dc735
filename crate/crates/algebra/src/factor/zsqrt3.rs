use super::sqf::squarefree_decomposition_qs3;
use super::zassenhaus::factor_z;
use super::{FactorizationResult, IrreducibilityCertificate};
use crate::poly::{qs3_to_primitive_zs3, Qs3Poly, Zs3Poly};
use crate::quad::{QuadInt, QuadRat};
use crate::ring::{Domain, Ring};
use num_bigint::BigInt;
use std::cmp::Ordering;

fn shift(f: &Qs3Poly, s: i64) -> Qs3Poly {
    // f(x + s√3)
    let lin = Qs3Poly::new(vec![QuadRat::from_quad_int(QuadInt::new(0, s)), QuadRat::one()]);
    f.compose(&lin)
}

fn zs3_order(a: &Zs3Poly, b: &Zs3Poly) -> Ordering {
    let key = |p: &Zs3Poly| p.coeffs().iter().map(|c| (c.a.clone(), c.b.clone())).collect::<Vec<(BigInt, BigInt)>>();
    a.deg().cmp(&b.deg()).then_with(|| key(a).cmp(&key(b)))
}

/// Irreducible factors of a monic squarefree polynomial over Q(√3) by
/// Trager's norm method, each paired with the certificate of its norm factor.
fn trager(a: &Qs3Poly) -> Vec<(Qs3Poly, IrreducibilityCertificate)> {
    if a.deg() == 1 {
        return vec![(a.clone(), IrreducibilityCertificate::linear())];
    }
    for s in [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5] {
        let g = shift(a, -s);
        let norm = qs3_to_primitive_zs3(&g).norm_poly();
        if !norm.is_squarefree() {
            continue;
        }
        let fz = factor_z(&norm);
        let mut out = Vec::new();
        for ((n, _), cert) in fz.factors.iter().zip(&fz.certificates) {
            let h = g.gcd(&n.to_zs3().to_qs3());
            if h.deg() == 0 {
                continue;
            }
            let mut cert = cert.clone();
            cert.via_norm = true;
            out.push((shift(&h, s).monic(), cert));
        }
        return out;
    }
    panic!("no squarefree norm among the tried shifts");
}

/// Factorization over Z[√3]. Factors are primitive with positive integer
/// leading coefficient; `content` absorbs the remaining element of Q(√3).
pub fn factor_zsqrt3(f: &Zs3Poly) -> FactorizationResult<Zs3Poly, QuadRat> {
    assert!(!f.is_zero(), "factor_zsqrt3 of zero");
    let fq = f.to_qs3();
    let mut items: Vec<(Zs3Poly, u32, IrreducibilityCertificate)> = Vec::new();
    for (a, mult) in squarefree_decomposition_qs3(&fq) {
        for (h, cert) in trager(&a) {
            items.push((qs3_to_primitive_zs3(&h), mult, cert));
        }
    }
    items.sort_by(|a, b| zs3_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    let prod = items.iter().fold(Zs3Poly::one(), |acc, (g, m, _)| acc.mul(&g.pow(*m)));
    let content = QuadRat::from_quad_int(f.lc()).div_exact(&QuadRat::from_quad_int(prod.lc())).expect("nonzero");
    debug_assert_eq!(prod.to_qs3().scale(&content), fq);
    let (factors, certificates) = items.into_iter().map(|(g, m, c)| ((g, m), c)).unzip();
    FactorizationResult { content, factors, certificates }
}
