//! Factoring over Z and Z[√3], univariate and bivariate.

use harborth_algebra::factor::{factor_bivariate, factor_z, factor_zsqrt3};
use harborth_algebra::{MultiPoly, QuadInt, ZPoly, Zs3Poly};

fn main() {
    let f = ZPoly::from_i64s(&[-6, 0, 0, 0, 1]).mul(&ZPoly::from_i64s(&[1, 1, 1]));
    let r = factor_z(&f);
    println!("over Z: {f}");
    for ((g, m), c) in r.factors.iter().zip(&r.certificates) {
        println!("  ({g})^{m}  irreducible: {}", c.is_irreducible());
    }

    let g = Zs3Poly::new(vec![QuadInt::rational(-3), QuadInt::rational(0), QuadInt::rational(4)]);
    let r = factor_zsqrt3(&g);
    println!("over Z[√3]: {g}");
    for (h, m) in &r.factors {
        println!("  ({h})^{m}");
    }

    let vars = ["x", "T"];
    let a = MultiPoly::<QuadInt>::parse("-1 + 28T^2 - 12r3*T*x + 4x^2", &vars).unwrap();
    let b = MultiPoly::<QuadInt>::parse("-1 + 28T^2 + 12r3*T*x + 4x^2", &vars).unwrap();
    let prod = a.mul(&b);
    println!("bivariate: {prod}");
    for (h, m) in factor_bivariate(&prod, "x", "T").unwrap().factors {
        println!("  ({h})^{m}");
    }
}
