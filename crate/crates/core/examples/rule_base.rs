//! Trains a rule base on Iris, prints its strongest rules and classifies a
//! handful of hand-picked flowers.
//!
//!     cargo run --release --example rule_base [-- <t-norm>]

use std::path::PathBuf;

use frbcs::dataset::MinMaxScaler;
use frbcs::{generate, load_csv, Decision, LoadOptions, TNorm};

fn main() -> frbcs::Result<()> {
    let t: TNorm = std::env::args().nth(1).as_deref().unwrap_or("product").parse()?;
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/uci/iris.data");
    let ds = load_csv(path, LoadOptions::default())?.dataset;

    let scaler = MinMaxScaler::fit(&ds);
    let train = scaler.transform(&ds);
    let rules = generate(&train, t)?;
    println!("{} rules with {t}; the ten strongest:", rules.len());
    for line in rules.dump(Some(&ds.class_names)).lines().take(10) {
        println!("  {line}");
    }

    let eval = rules.evaluate(&train)?;
    println!("\nresubstitution accuracy {:.2}% ({} rejected)", eval.accuracy(), eval.rejected);

    println!();
    let flowers = [[5.0, 3.4, 1.5, 0.2], [6.0, 2.8, 4.5, 1.4], [7.2, 3.0, 6.1, 2.2], [5.9, 3.0, 5.0, 1.7]];
    for raw in flowers {
        let x: Vec<f64> = raw.iter().enumerate().map(|(j, &v)| scaler.scale(j, v)).collect();
        let verdict = match rules.classify(&x)? {
            Decision::Class(c) => ds.class_names[c].clone(),
            Decision::Rejected => "rejected".to_string(),
        };
        println!("{raw:?} -> {verdict}");
    }
    Ok(())
}
