//! Independent reference computations used by the integration and
//! acceptance suites. Nothing here calls the rule engine, the partition
//! module or the stats module.

#![allow(dead_code)]

use frbcs::{TNorm, TNormKind};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sets in (granularity, index) order, written out by hand.
pub const SETS: [(u8, u8); 14] = [
    (2, 1),
    (2, 2),
    (3, 1),
    (3, 2),
    (3, 3),
    (4, 1),
    (4, 2),
    (4, 3),
    (4, 4),
    (5, 1),
    (5, 2),
    (5, 3),
    (5, 4),
    (5, 5),
];

pub fn tri(g: u8, k: u8, x: f64) -> f64 {
    let peak = (k - 1) as f64 / (g - 1) as f64;
    let halfwidth = 1.0 / (g - 1) as f64;
    (1.0 - (x - peak).abs() / halfwidth).max(0.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleRule {
    pub sets: [(u8, u8); 2],
    pub consequent: usize,
    pub confidence: f64,
    pub support: f64,
    pub weight: f64,
}

/// Two-attribute rule table computed straight from the definitions: every
/// antecedent, confidence / support per class, argmax of conf * supp with
/// uniqueness, confidence-difference weight, keep if weight > 0.
pub fn oracle_rules(patterns: &[[f64; 2]], labels: &[usize], classes: usize, t: TNorm) -> Vec<OracleRule> {
    let m = patterns.len();
    let mut out = Vec::new();
    for &s0 in &SETS {
        for &s1 in &SETS {
            let mu: Vec<f64> = patterns
                .iter()
                .map(|p| t.apply(tri(s0.0, s0.1, p[0]), tri(s1.0, s1.1, p[1])).unwrap())
                .collect();
            let mut total = 0.0;
            for &v in &mu {
                total += v;
            }
            let class_sum = |c: usize| {
                let mut s = 0.0;
                for p in 0..m {
                    if labels[p] == c {
                        s += mu[p];
                    }
                }
                s
            };
            let conf: Vec<f64> = (0..classes)
                .map(|c| if total == 0.0 { 0.0 } else { class_sum(c) / total })
                .collect();
            let supp: Vec<f64> = (0..classes).map(|c| class_sum(c) / m as f64).collect();
            let score: Vec<f64> = (0..classes).map(|c| conf[c] * supp[c]).collect();
            let best = score.iter().cloned().fold(0.0, f64::max);
            if best <= 0.0 {
                continue;
            }
            let winners: Vec<usize> = (0..classes).filter(|&c| score[c] == best).collect();
            if winners.len() != 1 {
                continue;
            }
            let c = winners[0];
            let mut rival = 0.0;
            for h in 0..classes {
                if h != c {
                    rival += conf[h];
                }
            }
            let weight = conf[c] - rival;
            if weight > 0.0 {
                out.push(OracleRule {
                    sets: [s0, s1],
                    consequent: c,
                    confidence: conf[c],
                    support: supp[c],
                    weight,
                });
            }
        }
    }
    out
}

/// Exhaustive single-winner decision: `None` means rejected.
pub fn oracle_classify(rules: &[OracleRule], x: [f64; 2], t: TNorm) -> Option<usize> {
    let scores: Vec<f64> = rules
        .iter()
        .map(|r| {
            let [a, b] = r.sets;
            t.apply(tri(a.0, a.1, x[0]), tri(b.0, b.1, x[1])).unwrap() * r.weight
        })
        .collect();
    let best = scores.iter().cloned().fold(0.0, f64::max);
    if best <= 0.0 {
        return None;
    }
    let mut classes: Vec<usize> = rules
        .iter()
        .zip(&scores)
        .filter(|(_, &s)| s == best)
        .map(|(r, _)| r.consequent)
        .collect();
    classes.sort();
    classes.dedup();
    (classes.len() == 1).then(|| classes[0])
}

/// A small random two-attribute problem. Even seeds snap values to a
/// quarter grid so that coverage ties and rejections actually occur.
pub fn random_problem(seed: u64) -> (Vec<[f64; 2]>, Vec<usize>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let classes = rng.gen_range(2..=3);
    let m = rng.gen_range(4..=20);
    let snap = seed % 2 == 0;
    let draw = |rng: &mut ChaCha8Rng| {
        let v: f64 = rng.gen();
        if snap {
            (v * 4.0).round() / 4.0
        } else {
            v
        }
    };
    let patterns: Vec<[f64; 2]> = (0..m).map(|_| [draw(&mut rng), draw(&mut rng)]).collect();
    let labels = (0..m).map(|i| if i < classes { i } else { rng.gen_range(0..classes) }).collect();
    (patterns, labels, classes)
}

/// Descending-order ranks with ties averaged, as exact rationals.
pub fn rational_ranks(row: &[f64]) -> Vec<Ratio<i64>> {
    row.iter()
        .map(|&v| {
            let better = row.iter().filter(|&&w| w > v).count() as i64;
            let equal = row.iter().filter(|&&w| w == v).count() as i64;
            // positions better+1 ..= better+equal
            Ratio::new(2 * better + equal + 1, 2)
        })
        .collect()
}

/// Friedman statistic evaluated in exact rational arithmetic.
pub fn rational_friedman(ranks: &[Vec<Ratio<i64>>]) -> Ratio<i64> {
    let n = ranks.len() as i64;
    let k = ranks[0].len() as i64;
    let avg: Vec<Ratio<i64>> = (0..k as usize)
        .map(|j| ranks.iter().map(|r| r[j]).sum::<Ratio<i64>>() / n)
        .collect();
    let sum_sq: Ratio<i64> = avg.iter().map(|r| r * r).sum();
    Ratio::new(12 * n, k * (k + 1)) * (sum_sq - Ratio::new(k * (k + 1) * (k + 1), 4))
}

pub fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Upper chi-square tail by composite Simpson integration of the density
/// after substituting `t = s^2`, which removes the `t^(-1/2)` singularity
/// at df = 1.
pub fn integrated_upper_tail(x: f64, df: usize) -> f64 {
    let k = df as f64 / 2.0;
    let ln_norm = k * 2f64.ln() + ln_gamma_half_integer(df);
    let integrand = |s: f64| {
        if s == 0.0 {
            return if df == 1 { 2.0 * (-ln_norm).exp() } else { 0.0 };
        }
        let t = s * s;
        ((k - 1.0) * t.ln() - t / 2.0 - ln_norm).exp() * 2.0 * s
    };
    let lo = x.sqrt();
    let hi = (x + 40.0 * (2.0 * df as f64).sqrt() + 400.0).sqrt();
    let panels = 200_000;
    let h = (hi - lo) / panels as f64;
    let mut acc = integrand(lo) + integrand(hi);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * integrand(lo + i as f64 * h);
    }
    acc * h / 3.0
}

/// `ln Gamma(df / 2)` by the recurrence from `Gamma(1) = 1`, `Gamma(1/2) = sqrt(pi)`.
pub fn ln_gamma_half_integer(df: usize) -> f64 {
    let mut z = if df % 2 == 0 { 1.0 } else { 0.5 };
    let mut ln = if df % 2 == 0 { 0.0 } else { std::f64::consts::PI.sqrt().ln() };
    while z < df as f64 / 2.0 {
        ln += z.ln();
        z += 1.0;
    }
    ln
}

/// Alpha grids spanning each kind's parameter domain.
pub fn alpha_grid(kind: TNormKind) -> Vec<f64> {
    match kind {
        TNormKind::Minimum | TNormKind::Product => vec![0.0],
        TNormKind::SugenoWeber => vec![-1.0, -0.5, 0.0, 1.0, 2.0, 10.0],
        TNormKind::Hamacher => vec![0.0, 0.5, 1.0, 2.0, 10.0],
        TNormKind::DuboisPrade => vec![0.0, 0.25, 0.5, 0.75, 1.0],
        _ => vec![0.25, 0.5, 1.0, 2.0, 5.0, 10.0],
    }
}

/// The accuracy table of the reference study, rows
/// Pima..Ecoli, columns Minimum..Dubois-Prade.
pub const TABLE3_DATASETS: [&str; 12] = [
    "Pima", "Haberman", "Liver", "Labor", "Thyroid", "Balance", "Iris", "Post", "Wisconsin", "Heart",
    "Wine", "Ecoli",
];

pub const TABLE3: [[f64; 9]; 12] = [
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
