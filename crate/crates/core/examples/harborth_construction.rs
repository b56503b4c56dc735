//! Builds the crucial vertices at the certified height T, numerically and exactly.

use harborth::geometry::{build_config, tower_build, Frame, POINT_NAMES};
use harborth::golden::GoldenTable;
use harborth_algebra::algnum::{zero_test, AlgebraicNumber};
use harborth_algebra::ring::rat;

fn main() {
    let pt = GoldenTable::get().minpoly("P_T").expect("golden P_T");
    let t = AlgebraicNumber::root_in(&pt, &rat(12, 100), &rat(13, 100)).expect("root of P_T");
    println!("T = {}", t.to_decimal(30));

    let a = build_config(&t.enclosure(200), 200).expect("configuration");
    let k = a.transform(Frame::K).expect("K-frame");
    println!("{:>4} {:>22} {:>22} {:>22}", "", "x (A-frame)", "y", "x (K-frame)");
    for n in POINT_NAMES {
        let (p, q) = (a.point(n).unwrap(), k.point(n).unwrap());
        println!("{n:>4} {:>22.17} {:>22.17} {:>22.17}", p.x.mid_f64(), p.y.mid_f64(), q.x.mid_f64());
    }

    let exact = tower_build(&t).expect("exact configuration");
    println!("\nconstraints over Q(T, √3) and its square-root tower:");
    for (name, e) in exact.constraints().expect("constraints") {
        println!("  {name:<20} {:?}", zero_test(&e));
    }
}
