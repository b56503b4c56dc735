use crate::poly::{q_to_primitive_z, Qs3Poly, ZPoly};

/// Yun's algorithm on a primitive integer polynomial: `(a_i, i)` with
/// f = ± ∏ a_i^i, each a_i primitive, squarefree, pairwise coprime.
pub fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let f = f.primitive_part();
    let df = f.derivative();
    let g = f.gcd_z(&df);
    let mut c = f.div_exact(&g).expect("gcd divides");
    let mut d = df.div_exact(&g).expect("gcd divides").sub(&c.derivative());
    let mut i = 1;
    while c.deg() > 0 {
        let a = if d.is_zero() { c.clone() } else { c.gcd_z(&d) };
        c = c.div_exact(&a).expect("gcd divides");
        if !d.is_zero() {
            d = d.div_exact(&a).expect("gcd divides").sub(&c.derivative());
        }
        if a.deg() > 0 {
            out.push((q_to_primitive_z(&a.to_q()), i));
        }
        i += 1;
    }
    out
}

/// Yun over Q(√3); factors monic.
pub fn squarefree_decomposition_qs3(f: &Qs3Poly) -> Vec<(Qs3Poly, u32)> {
    let mut out = Vec::new();
    if f.is_zero() || f.deg() == 0 {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut c = f.divrem(&g).0;
    let mut d = df.divrem(&g).0.sub(&c.derivative());
    let mut i = 1;
    while c.deg() > 0 {
        let a = if d.is_zero() { c.monic() } else { c.gcd(&d) };
        c = c.divrem(&a).0;
        if !d.is_zero() {
            d = d.divrem(&a).0.sub(&c.derivative());
        }
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}
