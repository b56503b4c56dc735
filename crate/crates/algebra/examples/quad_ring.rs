//! Arithmetic in Z[√3] and norms of polynomials over it.

use harborth_algebra::{QuadInt, Ring, Zs3Poly};

fn main() {
    let a = QuadInt::new(2, 1); // 2 + √3, a unit
    let b = a.conj();
    println!("a = {a}, conj = {b}, a·conj = {}, norm = {}", Ring::mul(&a, &b), a.norm());
    let mut p = QuadInt::rational(1);
    for k in 1..=5 {
        p = Ring::mul(&p, &a);
        println!("a^{k} = {p}   norm {}", p.norm());
    }
    // 2x − √3 times its conjugate is 4x² − 3
    let f = Zs3Poly::new(vec![QuadInt::new(0, -1), QuadInt::rational(2)]);
    println!("f = {f}\nN(f) = {}", f.norm_poly());
}
