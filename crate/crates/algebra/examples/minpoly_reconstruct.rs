//! Recover a minimal polynomial from interval enclosures alone, by lattice reduction.

use harborth_algebra::algnum::{alg_arith, AlgebraicNumber, ArithOp};
use harborth_algebra::factor::minpoly_reconstruct;

fn main() {
    let r2 = AlgebraicNumber::from_int(2).sqrt().unwrap();
    let r3 = AlgebraicNumber::from_int(3).sqrt().unwrap();
    let x = alg_arith(&r2, &r3, ArithOp::Add).unwrap();
    println!("√2 + √3 ≈ {}", x.to_decimal(30));
    let p = minpoly_reconstruct(|prec| x.enclosure(prec), 8, 16).unwrap();
    println!("reconstructed: {p}");
    println!("exact:         {}", x.minpoly());
    // too small a degree bound fails cleanly
    println!("bound 2: {:?}", minpoly_reconstruct(|prec| x.enclosure(prec), 2, 16).unwrap_err());
}
