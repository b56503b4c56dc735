//! Writes the A-, F- and K-frame drawings from the tabulated P_T.
//! `cargo run --release --example render_svg -- outdir`

use harborth::golden::GoldenTable;
use harborth::render::render_svg;
use harborth::Frame;

fn main() {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir).expect("output directory");
    let pt = GoldenTable::get().minpoly("P_T").expect("golden P_T");
    for (frame, name) in [(Frame::A, "a"), (Frame::F, "f"), (Frame::K, "k")] {
        let path = dir.join(format!("harborth-{name}.svg"));
        let s = render_svg(&pt, frame, 6, 256, &path).expect("render");
        println!("{} ({} lines, {} edges)", path.display(), s.lines().count(), s.matches("<line").count());
    }
}
