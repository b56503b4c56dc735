use harborth::stages::{digits_to_bits, normalize, relation_text, Pipeline, PipelineError, DEFAULT_BITS};
use harborth_algebra::{MultiPoly, QuadInt};

#[test]
fn relation_text_round_trips() {
    let vars = ["yD", "T"];
    for src in ["27 - 4*yD^2 + 12*yD*T - 36*T^2", "-1 + 4*yD^2 - 12*r3*yD*T + 28*T^2", "-yD^2 + 3*T^2"] {
        let p = MultiPoly::<QuadInt>::parse(src, &vars).unwrap();
        let text = relation_text(&p);
        assert_eq!(MultiPoly::<QuadInt>::parse(&text, &vars).unwrap(), p, "{text}");
    }
}

#[test]
fn normalize_strips_content_and_sign() {
    let vars = ["x", "T"];
    let p = MultiPoly::<QuadInt>::parse("-6x^2 + 18T^2", &vars).unwrap();
    assert_eq!(relation_text(&normalize(&p)), "x^2 - 3*T^2");
}

#[test]
fn digits_convert_to_bits() {
    assert_eq!(digits_to_bits(120), 399);
    assert_eq!(digits_to_bits(1), 4);
    assert_eq!(DEFAULT_BITS, 400);
}

#[test]
fn stages_need_their_predecessors() {
    let mut p = Pipeline::new(DEFAULT_BITS, None);
    assert!(matches!(p.run_stage(3), Err(PipelineError::StageDependencyMissing(3, 1))));
    assert!(matches!(p.run_stage(8), Err(PipelineError::NoSuchStage(8))));
}

#[test]
fn stage1_relations() {
    let mut p = Pipeline::new(DEFAULT_BITS, None);
    p.run_stage(1).unwrap();
    let y = p.store.get("P_yD_T");
    assert_eq!(y.output, "27 - 4*yD^2 + 12*yD*T - 36*T^2");
    assert_eq!(y.extra.get("golden").map(String::as_str), Some("match"));
    assert_eq!(p.store.get("P_xD_T").output, "-1 + 4*xD^2 - 12*r3*xD*T + 28*T^2");
    assert_eq!(p.store.get("P_xE_T").output, "-xE^2 + 3*T^2");
}

#[test]
fn cached_records_equal_fresh_ones() {
    let dir = tempfile::tempdir().unwrap();
    let mut a = Pipeline::new(DEFAULT_BITS, Some(dir.path().to_path_buf()));
    a.run_through(2).unwrap();
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(files, 2);
    let mut b = Pipeline::new(DEFAULT_BITS, Some(dir.path().to_path_buf()));
    b.run_through(2).unwrap();
    let recs = |p: &Pipeline| serde_json::to_string(&p.store.all().collect::<Vec<_>>()).unwrap();
    assert_eq!(recs(&a), recs(&b));
    // a different precision gets its own entries
    let mut c = Pipeline::new(DEFAULT_BITS + 32, Some(dir.path().to_path_buf()));
    c.run_through(1).unwrap();
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 3);
}

proptest::proptest! {
    #[test]
    fn relation_text_round_trips_random(terms in proptest::collection::vec((0u32..4, 0u32..4, -50i64..50, -50i64..50), 1..8)) {
        let vars = ["xF", "T"];
        let p = MultiPoly::from_terms(&vars, terms.iter().map(|&(i, j, a, b)| (vec![i, j], QuadInt::new(a, b))));
        let text = relation_text(&p);
        proptest::prop_assert_eq!(MultiPoly::<QuadInt>::parse(&text, &vars).unwrap(), p);
    }
}
