//! Sturm counts, root isolation, refinement and the (real, complex-pair) signature.

use harborth_algebra::dyadic::format_decimal;
use harborth_algebra::realroots::{cauchy_bound, isolate, refine, signature, sturm_count};
use harborth_algebra::{Dyadic, ZPoly};

fn main() {
    // x^5 − 4x + 2: three real roots, one complex pair
    let p = ZPoly::from_i64s(&[2, -4, 0, 0, 0, 1]);
    let b = cauchy_bound(&p);
    println!("p = {p}, Cauchy bound {}", b.to_f64());
    println!("roots in (0, 1]: {}", sturm_count(&p, &Dyadic::zero(), &Dyadic::from_int(1)).unwrap());
    let s = signature(&p).unwrap();
    println!("signature ({}, {})", s.real_count, s.complex_pairs);
    let iso = isolate(&p);
    for i in 0..iso.len() {
        let (lo, hi) = refine(&iso, i, 60);
        println!("  root {i}: [{}, {}]", format_decimal(&lo.to_rational(), 20), format_decimal(&hi.to_rational(), 20));
    }
}
