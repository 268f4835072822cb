use std::path::PathBuf;

use frbcs::{load_csv, synthetic, Error, LabelColumn, LoadOptions};

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

#[test]
fn iris_shape() {
    let l = load_csv(data("../../data/uci/iris.data"), LoadOptions::default()).unwrap();
    let ds = l.dataset;
    assert_eq!((ds.len(), ds.dimensionality(), ds.class_count()), (150, 4, 3));
    assert_eq!(ds.class_counts(), vec![50, 50, 50]);
    assert_eq!(l.dropped_rows, 0);
}

#[test]
fn wisconsin_drops_missing_rows() {
    let l = load_csv(data("../../data/uci/wisconsin.data"), LoadOptions::default()).unwrap();
    assert_eq!(l.dropped_rows, 16);
    assert_eq!(l.dataset.len(), 683);
    assert_eq!(l.dataset.dimensionality(), 9);
    assert_eq!(l.dataset.class_names, vec!["2", "4"]);
}

#[test]
fn label_first_layout_loads_identically() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(data("../../data/uci/iris.data")).unwrap();
    let flipped: String = text
        .lines()
        .map(|l| {
            let (attrs, label) = l.rsplit_once(',').unwrap();
            format!("{label},{attrs}\n")
        })
        .collect();
    let path = dir.path().join("iris-first.csv");
    std::fs::write(&path, flipped).unwrap();
    let a = load_csv(data("../../data/uci/iris.data"), LoadOptions::default()).unwrap().dataset;
    let mut b = load_csv(
        &path,
        LoadOptions {
            label_column: LabelColumn::Index(0),
            ..Default::default()
        },
    )
    .unwrap()
    .dataset;
    b.name = a.name.clone();
    assert_eq!(a, b);
}

#[test]
fn bundled_fixture_matches_generator() {
    let ds = load_csv(data("data/separable.csv"), LoadOptions::default()).unwrap().dataset;
    let gen = synthetic::separable(200, 2024);
    assert_eq!(ds.patterns, gen.patterns);
    assert_eq!(ds.labels, gen.labels);
    assert_eq!(ds.attribute_names, vec!["x", "y"]);
}

#[test]
fn missing_file_is_io_error() {
    let err = load_csv("/definitely/not/here.csv", LoadOptions::default()).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    assert_eq!(err.exit_code(), 2);
}
