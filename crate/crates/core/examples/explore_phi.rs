//! φ(T) across [0, b] with the certified sign of m_α·m_β − 1.
//! `cargo run --release --example explore_phi -- 12`

use harborth::angles::{explore, extremal_b};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let b = extremal_b().expect("b");
    println!("b = {}", b.to_decimal(20));
    let mut last = None;
    for (t, r) in explore(n, 160).expect("grid") {
        let side = if r.orthogonality.is_negative() { "<90" } else if r.orthogonality.is_positive() { ">90" } else { "~90" };
        println!("T = {:.12}  φ = {:>12.8}°  α = {:>12.8}°  β = {:>12.8}°  {side}  closed form agrees: {}", t.mid_f64(), r.phi, r.alpha, r.beta, r.closed_form_agrees());
        if let Some(prev) = last {
            if prev != side {
                println!("  -- φ crosses 90° in this step");
            }
        }
        last = Some(side);
    }
}
