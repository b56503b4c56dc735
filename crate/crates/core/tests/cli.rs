use harborth::cli::main_with;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = main_with(std::iter::once("harborth").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["derive", "--stage", "9"]).0, 2);
    assert_eq!(run(&["derive", "--stage", "0"]).0, 2);
    assert_eq!(run(&["explore", "--grid", "1"]).0, 2);
    assert_eq!(run(&["render", "--frame", "Q", "--out", "x.svg"]).0, 2);
    assert_eq!(run(&["roots", "/nonexistent/poly.json"]).0, 2);
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["certify", "--help"]).0, 0);
}

#[test]
fn explore_table() {
    let (code, out) = run(&["explore", "--grid", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("b = 0.13504537836886322"));
    assert_eq!(lines.len(), 5);
    assert!(lines[2].contains("85.8849649992") && lines[2].ends_with("<90"));
    assert!(lines[4].contains("94.5904252889") && lines[4].ends_with(">90"));
}

#[test]
fn roots_of_a_json_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p.json");
    // x^2 - 2
    std::fs::write(&f, r#"{"var": "x", "ring": "Z", "coeffs": ["-2", "0", "1"]}"#).unwrap();
    let (code, out) = run(&["roots", f.to_str().unwrap(), "--refine", "0.000001"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("2 real roots of the degree-2 polynomial in x"));
    assert!(out.contains("[1.41421"));
    assert!(out.contains("[-1.41421"));
    assert_eq!(run(&["roots", f.to_str().unwrap(), "--refine", "-1"]).0, 2);
    std::fs::write(&f, "not json").unwrap();
    assert_eq!(run(&["roots", f.to_str().unwrap()]).0, 2);
}

#[test]
fn derive_stage_one_writes_records() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("records.json");
    let cache = dir.path().join("cache");
    let (code, out) = run(&["--cache-dir", cache.to_str().unwrap(), "derive", "--stage", "1", "--out", out_file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("27 - 4*yD^2 + 12*yD*T - 36*T^2 = 0"));
    let recs: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(recs.as_array().unwrap().len(), 5);
    assert!(cache.is_dir());
}
