//! Plain-text renderings of accuracy matrices and Friedman results.
//!
//! Percentages are rounded to two decimals here and nowhere else.

use std::fmt::Write;

use crate::cv::{AccuracyMatrix, MatrixRun};
use crate::stats::{FriedmanResult, RankMatrix};

pub fn matrix_csv(m: &AccuracyMatrix) -> String {
    let mut out = String::from("dataset");
    for t in &m.tnorm_names {
        out.push(',');
        out.push_str(t);
    }
    out.push('\n');
    for (name, row) in m.dataset_names.iter().zip(&m.accuracies) {
        out.push_str(name);
        for v in row {
            write!(out, ",{v:.2}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Markdown table with the best cell of each row in bold.
pub fn matrix_markdown(m: &AccuracyMatrix) -> String {
    let mut out = String::from("| Data set |");
    for t in &m.tnorm_names {
        write!(out, " {t} |").unwrap();
    }
    out.push_str("\n|---|");
    out.push_str(&"---:|".repeat(m.tnorm_names.len()));
    out.push('\n');
    for (name, row) in m.dataset_names.iter().zip(&m.accuracies) {
        let best = row
            .iter()
            .map(|v| format!("{v:.2}"))
            .max_by(|a, b| a.parse::<f64>().unwrap().total_cmp(&b.parse().unwrap()));
        write!(out, "| {name} |").unwrap();
        for v in row {
            let cell = format!("{v:.2}");
            if Some(&cell) == best.as_ref() {
                write!(out, " **{cell}** |").unwrap();
            } else {
                write!(out, " {cell} |").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

pub fn ranks_markdown(rm: &RankMatrix, result: &FriedmanResult) -> String {
    let mut out = String::from("| Algorithm | Ranking |\n|---|---:|\n");
    for (name, r) in rm.algorithm_names.iter().zip(&result.average_ranks) {
        writeln!(out, "| {name} | {r:.4} |").unwrap();
    }
    out.push('\n');
    out.push_str(&friedman_summary(result));
    out.push('\n');
    out
}

pub fn friedman_summary(result: &FriedmanResult) -> String {
    format!(
        "Friedman statistic (chi-square with {} degrees of freedom): {:.6}, p-value: {}",
        result.degrees_of_freedom, result.statistic, result.p_value
    )
}

/// One line per cell with everything needed to re-run it in isolation.
pub fn cells_csv(run: &MatrixRun, seed: u64, repeats: usize) -> String {
    let mut out =
        String::from("dataset,tnorm,alpha,seed,repeats,accuracy,mean_rules,rejection_rate\n");
    for (name, row) in run.matrix.dataset_names.iter().zip(&run.cells) {
        for (t, cell) in run.tnorms.iter().zip(row) {
            let alpha = t.alpha().map(|a| a.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{name},{},{alpha},{seed},{repeats},{},{:.1},{:.4}",
                t.kind(),
                cell.accuracy,
                cell.mean_rule_count(),
                cell.rejection_rate()
            )
            .unwrap();
        }
    }
    out
}
