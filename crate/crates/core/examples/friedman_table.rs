//! Ranks nine T-norms over twelve datasets from a published accuracy table
//! and runs the Friedman test on the result.
//!
//!     cargo run --example friedman_table

use frbcs::report::ranks_markdown;
use frbcs::{friedman, rank_rows, AccuracyMatrix, TNormKind};

const DATASETS: [&str; 12] = [
    "Pima", "Haberman", "Liver", "Labor", "Thyroid", "Balance", "Iris", "Post", "Wisconsin", "Heart",
    "Wine", "Ecoli",
];

const ACCURACY: [[f64; 9]; 12] = [
    [69.40, 69.40, 71.00, 65.11, 52.42, 70.69, 72.87, 72.18, 70.37],
    [73.11, 72.76, 72.17, 73.56, 73.00, 73.03, 73.56, 73.10, 73.40],
    [57.97, 58.20, 59.16, 57.97, 51.00, 57.49, 58.54, 57.76, 58.17],
    [84.08, 85.33, 80.46, 65.36, 77.51, 90.50, 84.94, 81.63, 77.51],
    [88.91, 88.72, 91.93, 69.86, 88.80, 91.63, 92.71, 91.68, 91.41],
    [89.37, 89.34, 88.75, 87.53, 89.87, 90.08, 89.86, 89.84, 89.94],
    [96.00, 95.60, 95.46, 95.33, 96.00, 96.80, 95.86, 95.33, 96.00],
    [72.38, 73.51, 72.62, 71.11, 73.17, 70.22, 73.13, 73.17, 73.17],
    [94.91, 95.07, 95.26, 80.30, 94.93, 96.17, 95.77, 95.56, 96.13],
    [79.93, 80.46, 79.61, 73.62, 81.10, 78.22, 79.12, 80.34, 81.10],
    [92.90, 92.67, 93.83, 78.93, 92.97, 94.88, 95.36, 96.09, 93.09],
    [74.51, 73.31, 75.52, 60.01, 66.74, 73.11, 75.54, 75.86, 76.64],
];

fn main() -> frbcs::Result<()> {
    let matrix = AccuracyMatrix {
        dataset_names: DATASETS.iter().map(|s| s.to_string()).collect(),
        tnorm_names: TNormKind::ALL.iter().map(|k| k.title().to_string()).collect(),
        accuracies: ACCURACY.iter().map(|r| r.to_vec()).collect(),
    };
    let ranks = rank_rows(&matrix)?;
    let result = friedman(&ranks)?;
    print!("{}", ranks_markdown(&ranks, &result));
    let verdict = if result.p_value < 0.05 { "differ" } else { "do not differ" };
    println!("at the 5% level the T-norms {verdict}");
    Ok(())
}
