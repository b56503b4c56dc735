//! Full derivation plus certification, printing the report as JSON.
//! Uses `.harborth-cache` in the working directory when it exists.

use harborth::certify::certify;
use harborth::stages::{precision_from_env, Pipeline, CACHE_DIR};

fn main() {
    let cache = std::path::Path::new(CACHE_DIR);
    let mut p = Pipeline::new(precision_from_env(), cache.is_dir().then(|| cache.to_path_buf()));
    p.run_through(7).expect("stages 1-7");
    let r = certify(&p).expect("certification");
    println!("{}", r.to_json());
    for (k, t) in &r.timings {
        eprintln!("{k}: {t:.2}s");
    }
    std::process::exit(if r.overall { 0 } else { 1 });
}
