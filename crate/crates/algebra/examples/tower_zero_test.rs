//! A square-root tower over Q(T)[√3] where T is a root of a quartic, with exact zero tests.

use harborth_algebra::algnum::{zero_test, AlgebraicNumber, BaseField, LElem, Tower, TowerElement, ZeroTest};
use harborth_algebra::ring::rat;
use harborth_algebra::ZPoly;

fn main() {
    // T = 1/(2√2)
    let t = AlgebraicNumber::root_in(&ZPoly::from_i64s(&[-1, 0, 8]), &rat(0, 1), &rat(1, 1)).unwrap();
    let field = BaseField::new(t);
    let tower = Tower::new(&field);
    let big_t = TowerElement::from_base(&tower, LElem::gen(&field));
    let one = TowerElement::from_int(&tower, 1);
    let s = one.sub(&big_t.square()).sqrt(1).unwrap();
    println!("√(1 − T²) ≈ {}, depth {}", s.interval(80).mid_f64(), s.tower().depth());
    println!("s² + T² − 1: {:?}", zero_test(&s.square().add(&big_t.square()).sub(&one)));
    let u = s.add(&TowerElement::from_int(&tower, 2)).sqrt(-1).unwrap();
    println!("−√(s + 2) ≈ {}, depth {}", u.interval(80).mid_f64(), u.tower().depth());
    println!("u² − s − 2: {:?}", zero_test(&u.square().sub(&s).sub(&TowerElement::from_int(&tower, 2))));
    let verdict = match zero_test(&u.add(&one)) {
        ZeroTest::ProvedNonzero(iv) => format!("nonzero, sign {}", if iv.is_positive() { "+" } else { "-" }),
        other => format!("{other:?}"),
    };
    println!("u + 1: {verdict}");
    let r3 = TowerElement::from_base(&tower, LElem::sqrt3(&field));
    println!("minimal polynomial of √3·T: {}", r3.mul(&big_t).as_base().unwrap().minpoly());
}
