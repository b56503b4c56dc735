//! Resultants: two unit circles, and the subresultant algorithm against the Sylvester determinant.

use harborth_algebra::elim::{resultant, subresultant, sylvester_resultant_oracle};
use harborth_algebra::{MultiPoly, ZPoly};
use num_bigint::BigInt;

fn main() {
    let vars = ["x", "y", "a"];
    // unit circles around (0,0) and (a,0)
    let c1 = MultiPoly::<BigInt>::parse("x^2 + y^2 - 1", &vars).unwrap();
    let c2 = MultiPoly::<BigInt>::parse("x^2 - 2a*x + a^2 + y^2 - 1", &vars).unwrap();
    let r = resultant(&c1, &c2, "x").unwrap();
    println!("Res_x = {r}");
    println!("Res_y(Res_x, 2y - 1) = {}", resultant(&r, &MultiPoly::parse("2y - 1", &vars).unwrap(), "y").unwrap());

    let p = ZPoly::from_i64s(&[3, -1, 0, 2, 5]);
    let q = ZPoly::from_i64s(&[-7, 4, 1]);
    println!("subresultant {}  sylvester {}", subresultant(&p, &q), sylvester_resultant_oracle(&p, &q).unwrap());
}
