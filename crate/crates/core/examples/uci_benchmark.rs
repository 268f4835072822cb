//! Cross-validates the bundled UCI datasets under all nine T-norms and prints
//! the accuracy table plus the Friedman test over it.
//!
//!     cargo run --release --example uci_benchmark [-- <repeats> <seed>]

use std::path::PathBuf;

use frbcs::{friedman, load_csv, rank_rows, report, run_matrix, LoadOptions, TNorm};

fn main() -> frbcs::Result<()> {
    let mut args = std::env::args().skip(1);
    let repeats = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/uci");
    let datasets = ["iris.data", "wisconsin.data"]
        .iter()
        .map(|f| load_csv(dir.join(f), LoadOptions::default()).map(|l| l.dataset))
        .collect::<frbcs::Result<Vec<_>>>()?;
    for ds in &datasets {
        println!("{}: m={} n={} C={}", ds.name, ds.len(), ds.dimensionality(), ds.class_count());
    }

    let started = std::time::Instant::now();
    let matrix = run_matrix(&datasets, &TNorm::all_defaults(), repeats, seed)?;
    println!("\n{}", report::matrix_markdown(&matrix));
    println!("({repeats} x 10-fold CV, seed {seed}, {:.1?})", started.elapsed());

    let ranks = rank_rows(&matrix)?;
    let result = friedman(&ranks)?;
    println!("\n{}", report::ranks_markdown(&ranks, &result));
    Ok(())
}
