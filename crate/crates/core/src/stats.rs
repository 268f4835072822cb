//! Friedman rank test over an accuracy matrix.

use crate::cv::AccuracyMatrix;
use crate::error::{Error, Result};

/// Per-dataset ranks, 1 = best (highest accuracy).
#[derive(Debug, Clone, PartialEq)]
pub struct RankMatrix {
    pub ranks: Vec<Vec<f64>>,
    pub algorithm_names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FriedmanResult {
    pub average_ranks: Vec<f64>,
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

pub fn rank_rows(matrix: &AccuracyMatrix) -> Result<RankMatrix> {
    rank_rows_with_epsilon(matrix, 0.0)
}

/// Like [`rank_rows`], but values within `epsilon` of the first member of a
/// run of sorted values share a rank.
pub fn rank_rows_with_epsilon(matrix: &AccuracyMatrix, epsilon: f64) -> Result<RankMatrix> {
    let ranks = matrix
        .accuracies
        .iter()
        .enumerate()
        .map(|(row, values)| {
            if let Some(column) = values.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFiniteInput { row, column });
            }
            Ok(rank_descending(values, epsilon))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankMatrix {
        ranks,
        algorithm_names: matrix.tnorm_names.clone(),
    })
}

fn rank_descending(values: &[f64], epsilon: f64) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let head = values[order[start]];
        let mut end = start + 1;
        while end < order.len() && head - values[order[end]] <= epsilon {
            end += 1;
        }
        // positions start..end hold ranks start+1 ..= end
        let shared = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = shared;
        }
        start = end;
    }
    ranks
}

pub fn friedman(rm: &RankMatrix) -> Result<FriedmanResult> {
    let n = rm.ranks.len();
    let k = rm.ranks.first().map_or(0, Vec::len);
    if n < 2 || k < 2 {
        return Err(Error::DegenerateInput {
            datasets: n,
            algorithms: k,
        });
    }
    if rm.ranks.iter().any(|r| r.len() != k) {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: rm.ranks.iter().map(Vec::len).find(|&l| l != k).unwrap_or(k),
        });
    }
    let average_ranks: Vec<f64> = (0..k)
        .map(|j| rm.ranks.iter().map(|r| r[j]).sum::<f64>() / n as f64)
        .collect();
    let (nf, kf) = (n as f64, k as f64);
    let sum_sq: f64 = average_ranks.iter().map(|r| r * r).sum();
    let statistic =
        (12.0 * nf / (kf * (kf + 1.0)) * (sum_sq - kf * (kf + 1.0) * (kf + 1.0) / 4.0)).max(0.0);
    let degrees_of_freedom = k - 1;
    Ok(FriedmanResult {
        p_value: chi_square_upper_tail(statistic, degrees_of_freedom)?,
        average_ranks,
        statistic,
        degrees_of_freedom,
    })
}

/// `P(X >= x)` for a chi-square variable with `df` degrees of freedom,
/// i.e. the regularized upper incomplete gamma `Q(df/2, x/2)`.
pub fn chi_square_upper_tail(x: f64, df: usize) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain {
            what: "chi-square statistic",
            value: x,
        });
    }
    if df == 0 {
        return Err(Error::Config("chi-square needs at least 1 degree of freedom".into()));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    Ok(statrs::function::gamma::gamma_ur(df as f64 / 2.0, x / 2.0).clamp(0.0, 1.0))
}
