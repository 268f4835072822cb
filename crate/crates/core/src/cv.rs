//! Repeated 10-fold cross-validation and the dataset x T-norm accuracy matrix.
//!
//! All randomness comes from `(seed + repeat, m)`, so cells and folds can run
//! on any thread in any order and still give bit-identical results.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::{normalize, Dataset, MinMaxScaler};
use crate::error::{Error, Result};
use crate::rules::{generate_with, GenerateOptions, WeightMode};
use crate::tnorm::TNorm;

pub const FOLDS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldPlan {
    pub seed: u64,
    pub fold_assignments: Vec<usize>,
}

impl FoldPlan {
    /// Row indices `(train, test)` for holding out `fold`.
    pub fn split(&self, fold: usize) -> (Vec<usize>, Vec<usize>) {
        (0..self.fold_assignments.len()).partition(|&i| self.fold_assignments[i] != fold)
    }

    pub fn fold_sizes(&self) -> [usize; FOLDS] {
        let mut sizes = [0; FOLDS];
        for &f in &self.fold_assignments {
            sizes[f] += 1;
        }
        sizes
    }
}

/// Shuffles `0..m` with a seeded ChaCha8 stream and deals it round-robin
/// into ten folds.
pub fn make_folds(m: usize, seed: u64) -> Result<FoldPlan> {
    if m < FOLDS {
        return Err(Error::TooFewPatterns(m));
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut fold_assignments = vec![0; m];
    for (i, &row) in order.iter().enumerate() {
        fold_assignments[row] = i % FOLDS;
    }
    Ok(FoldPlan {
        seed,
        fold_assignments,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizationMode {
    /// Fit min-max on each fold's training rows, clamp the test rows.
    #[default]
    PerFold,
    /// Fit once on the whole dataset before splitting.
    Global,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CvConfig {
    pub repeats: usize,
    pub seed: u64,
    pub weight_mode: WeightMode,
    pub normalization: NormalizationMode,
}

impl Default for CvConfig {
    fn default() -> Self {
        CvConfig {
            repeats: 5,
            seed: 42,
            weight_mode: WeightMode::default(),
            normalization: NormalizationMode::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoldResult {
    pub repeat: usize,
    pub fold: usize,
    pub accuracy: f64,
    pub rule_count: usize,
    pub test_size: usize,
    pub rejected: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CvSummary {
    /// Mean of the per-fold accuracies, in percent.
    pub accuracy: f64,
    pub folds: Vec<FoldResult>,
}

impl CvSummary {
    pub fn mean_rule_count(&self) -> f64 {
        self.folds.iter().map(|f| f.rule_count as f64).sum::<f64>() / self.folds.len() as f64
    }

    /// Fraction of held-out patterns that were rejected.
    pub fn rejection_rate(&self) -> f64 {
        let tested: usize = self.folds.iter().map(|f| f.test_size).sum();
        let rejected: usize = self.folds.iter().map(|f| f.rejected).sum();
        rejected as f64 / tested as f64
    }
}

/// Mean accuracy in percent over `repeats` x 10 folds.
pub fn cross_validate(ds: &Dataset, t: TNorm, repeats: usize, seed: u64) -> Result<f64> {
    let config = CvConfig {
        repeats,
        seed,
        ..CvConfig::default()
    };
    Ok(cross_validate_with(ds, t, &config)?.accuracy)
}

pub fn cross_validate_with(ds: &Dataset, t: TNorm, config: &CvConfig) -> Result<CvSummary> {
    if ds.dimensionality() < 2 {
        return Err(Error::InsufficientAttributes(ds.dimensionality()));
    }
    if config.repeats == 0 {
        return Err(Error::Config("repeats must be at least 1".into()));
    }
    let plans = (0..config.repeats)
        .map(|r| make_folds(ds.len(), config.seed.wrapping_add(r as u64)))
        .collect::<Result<Vec<_>>>()?;
    let source = match config.normalization {
        NormalizationMode::PerFold => None,
        NormalizationMode::Global => Some(MinMaxScaler::fit(ds).transform(ds)),
    };
    let ds = source.as_ref().unwrap_or(ds);
    let options = GenerateOptions {
        weight_mode: config.weight_mode,
    };

    let units: Vec<(usize, usize)> = (0..config.repeats)
        .flat_map(|r| (0..FOLDS).map(move |f| (r, f)))
        .collect();
    let folds = units
        .par_iter()
        .map(|&(repeat, fold)| {
            let (train_idx, test_idx) = plans[repeat].split(fold);
            let (train, test) = match config.normalization {
                NormalizationMode::PerFold => normalize(&ds.subset(&train_idx), &ds.subset(&test_idx))?,
                NormalizationMode::Global => (ds.subset(&train_idx), ds.subset(&test_idx)),
            };
            let rules = generate_with(&train, t, options)?;
            let eval = rules.evaluate(&test)?;
            log::debug!(
                "{} {t} repeat {repeat} fold {fold}: {} rules, {:.2}% correct, {} rejected",
                ds.name,
                rules.len(),
                eval.accuracy(),
                eval.rejected
            );
            Ok(FoldResult {
                repeat,
                fold,
                accuracy: eval.accuracy(),
                rule_count: rules.len(),
                test_size: eval.total(),
                rejected: eval.rejected,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let accuracy = folds.iter().map(|f| f.accuracy).sum::<f64>() / folds.len() as f64;
    Ok(CvSummary { accuracy, folds })
}

/// Table of mean accuracies, datasets as rows and T-norms as columns.
#[derive(Debug, Clone, PartialEq)]
pub struct AccuracyMatrix {
    pub dataset_names: Vec<String>,
    pub tnorm_names: Vec<String>,
    pub accuracies: Vec<Vec<f64>>,
}

/// A full matrix run together with each cell's fold-level detail.
#[derive(Debug, Clone)]
pub struct MatrixRun {
    pub matrix: AccuracyMatrix,
    pub cells: Vec<Vec<CvSummary>>,
    pub tnorms: Vec<TNorm>,
}

pub fn run_matrix(datasets: &[Dataset], tnorms: &[TNorm], repeats: usize, seed: u64) -> Result<AccuracyMatrix> {
    let config = CvConfig {
        repeats,
        seed,
        ..CvConfig::default()
    };
    Ok(run_matrix_with(datasets, tnorms, &config)?.matrix)
}

pub fn run_matrix_with(datasets: &[Dataset], tnorms: &[TNorm], config: &CvConfig) -> Result<MatrixRun> {
    if datasets.is_empty() || tnorms.is_empty() {
        return Err(Error::Config("need at least one dataset and one T-norm".into()));
    }
    let cells = datasets
        .par_iter()
        .map(|ds| {
            tnorms
                .par_iter()
                .map(|&t| {
                    cross_validate_with(ds, t, config).map_err(|e| Error::Cell {
                        dataset: ds.name.clone(),
                        tnorm: t.to_string(),
                        source: Box::new(e),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = AccuracyMatrix {
        dataset_names: datasets.iter().map(|d| d.name.clone()).collect(),
        tnorm_names: tnorms.iter().map(|t| t.to_string()).collect(),
        accuracies: cells
            .iter()
            .map(|row| row.iter().map(|c| c.accuracy).collect())
            .collect(),
    };
    Ok(MatrixRun {
        matrix,
        cells,
        tnorms: tnorms.to_vec(),
    })
}
