//! Outward-rounded dyadic intervals: √3, √2 and a nested radical at growing precision.

use harborth_algebra::dyadic::{interval_sqrt, sqrt3_interval};
use harborth_algebra::ring::rat;
use harborth_algebra::DyadicInterval;

fn main() {
    for prec in [16, 64, 256] {
        let r3 = sqrt3_interval(prec);
        let r2 = interval_sqrt(&DyadicInterval::from_int(2, prec)).unwrap();
        // √(7 − 3√5) / 4
        let r5 = interval_sqrt(&DyadicInterval::from_int(5, prec)).unwrap();
        let inner = DyadicInterval::from_int(7, prec).sub(&r5.scale_rational(&rat(3, 1)));
        let b = interval_sqrt(&inner).unwrap().scale_rational(&rat(1, 4));
        println!("prec {prec:>3}: √3 in [{:.17}, {:.17}], width 2^{}", r3.lo().to_f64(), r3.hi().to_f64(), r3.width().log2_floor().unwrap_or(0));
        println!("          √2 in [{:.17}, {:.17}]", r2.lo().to_f64(), r2.hi().to_f64());
        println!("          b  ~ {:.17}, width 2^{}", b.mid_f64(), b.width().log2_floor().unwrap_or(0));
    }
    println!("sqrt(-1): {:?}", interval_sqrt(&DyadicInterval::from_int(-1, 32)).unwrap_err());
}
