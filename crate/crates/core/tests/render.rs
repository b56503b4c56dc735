use harborth::golden::GoldenTable;
use harborth::render::{drawing, k_configuration, render_svg, svg};
use harborth::Frame;

#[test]
fn full_graph_and_deterministic_svg() {
    let pt = GoldenTable::get().minpoly("P_T").unwrap();
    let k = k_configuration(&pt, 256).unwrap();
    let d = drawing(&k, Frame::K).unwrap();
    assert_eq!(d.vertices.len(), 52);
    assert_eq!(d.edges.len(), 104);
    // every vertex has degree 4
    let mut deg = vec![0; d.vertices.len()];
    for (a, b) in &d.edges {
        deg[*a] += 1;
        deg[*b] += 1;
    }
    assert!(deg.iter().all(|&n| n == 4), "{deg:?}");

    let s = svg(&d, 6);
    assert_eq!(s, svg(&drawing(&k_configuration(&pt, 300).unwrap(), Frame::K).unwrap(), 6));
    assert!(s.contains(r#"cx="0.000000" cy="3.621445""#), "H on the axis");
    assert!(!s.contains("\"-0.000000\""));
}

#[test]
fn frames_write_files() {
    let pt = GoldenTable::get().minpoly("P_T").unwrap();
    let dir = tempfile::tempdir().unwrap();
    for f in [Frame::A, Frame::F, Frame::K] {
        let path = dir.path().join("out.svg");
        let s = render_svg(&pt, f, 4, 200, &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), s);
        assert!(s.starts_with("<?xml"));
        assert_eq!(s.matches("<line").count(), 104);
    }
}
