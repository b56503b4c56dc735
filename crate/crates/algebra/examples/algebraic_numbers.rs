//! Exact real algebraic numbers: arithmetic through resultants, and the radicals test for prime degree.

use harborth_algebra::algnum::{alg_arith, radicals_criterion, AlgebraicNumber, ArithOp};
use harborth_algebra::ring::rat;
use harborth_algebra::ZPoly;

fn main() {
    let r5 = AlgebraicNumber::from_int(5).sqrt().unwrap();
    let phi = alg_arith(&alg_arith(&AlgebraicNumber::from_int(1), &r5, ArithOp::Add).unwrap(), &AlgebraicNumber::from_int(2), ArithOp::Div).unwrap();
    println!("φ = {} with minimal polynomial {}", phi.to_decimal(25), phi.minpoly());
    let sq = alg_arith(&phi, &phi, ArithOp::Mul).unwrap();
    let diff = alg_arith(&sq, &phi, ArithOp::Sub).unwrap();
    println!("φ² − φ = {} (rational: {:?})", diff.to_decimal(5), diff.as_rational().map(|q| q.to_string()));
    let cube_root = AlgebraicNumber::root_in(&ZPoly::from_i64s(&[-2, 0, 0, 1]), &rat(1, 1), &rat(2, 1)).unwrap();
    println!("∛2 = {}, inverse {}", cube_root.to_decimal(20), cube_root.inv().unwrap().minpoly());

    for p in [ZPoly::from_i64s(&[-2, 0, 0, 0, 0, 1]), ZPoly::from_i64s(&[2, -4, 0, 0, 0, 1])] {
        let v = radicals_criterion(&p).unwrap();
        println!("{p}: {} real roots, {:?}", v.real_root_count, v.verdict);
    }
}
