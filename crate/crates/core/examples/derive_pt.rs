//! Runs the derivation through a given stage and prints each record.
//! `cargo run --release --example derive_pt -- 5`

use harborth::stages::{precision_from_env, Pipeline};
use std::time::Instant;

fn main() {
    let upto: u8 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let mut p = Pipeline::new(precision_from_env(), None);
    for n in 1..=upto {
        let t0 = Instant::now();
        let recs = p.run_stage(n).expect("stage runs").to_vec();
        println!("stage {n}: {:.2}s", t0.elapsed().as_secs_f64());
        for r in recs {
            let golden = r.extra.get("golden").map(String::as_str).unwrap_or("-");
            let short: String = if std::env::var_os("FULL").is_some() { r.output.clone() } else { r.output.chars().take(90).collect() };
            println!("  {:<18} [{}] golden={golden} {}", r.id, r.vars.join(","), short);
            for (k, v) in r.extra.iter().filter(|(k, _)| k.as_str() != "golden") {
                println!("      {k}: {v}");
            }
        }
    }
}
