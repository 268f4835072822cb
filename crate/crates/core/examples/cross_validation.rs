//! Repeated 10-fold cross-validation of every T-norm on the bundled
//! two-class synthetic dataset, next to the same data with shuffled labels.
//!
//!     cargo run --release --example cross_validation [-- --write-fixture]

use std::path::PathBuf;

use frbcs::{cross_validate_with, synthetic, CvConfig, TNorm};

fn main() -> frbcs::Result<()> {
    let ds = synthetic::separable(200, 2024);
    if std::env::args().any(|a| a == "--write-fixture") {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/separable.csv");
        let mut text = String::from("x,y,class\n");
        for (p, &l) in ds.patterns.iter().zip(&ds.labels) {
            text.push_str(&format!("{},{},{}\n", p[0], p[1], ds.class_names[l]));
        }
        std::fs::write(&path, text).expect("write fixture");
        println!("wrote {}", path.display());
    }

    let shuffled = synthetic::shuffled_labels(&ds, 1);
    let config = CvConfig::default();
    println!("{:<20} {:>10} {:>10} {:>8} {:>9}", "t-norm", "separable", "shuffled", "rules", "rejected");
    for t in TNorm::all_defaults() {
        let s = cross_validate_with(&ds, t, &config)?;
        let r = cross_validate_with(&shuffled, t, &config)?;
        println!(
            "{:<20} {:>10.2} {:>10.2} {:>8.1} {:>8.2}%",
            t.to_string(),
            s.accuracy,
            r.accuracy,
            s.mean_rule_count(),
            100.0 * s.rejection_rate()
        );
    }
    Ok(())
}
