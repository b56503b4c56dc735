//! Lex Gröbner elimination on a trapezoid with unit legs and diagonals of length 2.
//!
//! Base (−a, 0)–(a, 0), top (−b, h)–(b, h). Eliminating h leaves ab = 3/4.

use harborth_algebra::elim::{eliminate, groebner, is_groebner_basis};
use harborth_algebra::MultiPoly;
use num_rational::BigRational;

fn main() {
    let vars = ["h", "b", "a"];
    let q = |s: &str| MultiPoly::<BigRational>::parse(s, &vars).unwrap();
    let gens = [q("(a - b)^2 + h^2 - 1"), q("(a + b)^2 + h^2 - 4")];
    let basis = groebner(&gens, &vars);
    println!("basis (lex h > b > a), {} elements, reduced check {}", basis.len(), is_groebner_basis(&basis));
    for g in &basis {
        println!("  {g}");
    }
    let step = eliminate(&gens, &vars, &["h"]);
    println!("eliminated {:?}, clean {}", step.eliminated, step.is_clean());
    for g in &step.output {
        println!("  {g} = 0");
    }
}
