//! Experiment orchestration behind the `frbcs` binary.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cv::{run_matrix_with, CvConfig, MatrixRun, NormalizationMode};
use crate::dataset::{load_csv, normalize, Dataset, LabelColumn, LoadOptions};
use crate::error::{Error, Result};
use crate::report;
use crate::rules::{generate_with, GenerateOptions, WeightMode};
use crate::stats::{friedman, rank_rows, FriedmanResult, RankMatrix};
use crate::tnorm::{TNorm, TNormKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSpec {
    pub path: PathBuf,
    /// Zero-based label column; the last column when absent.
    #[serde(default)]
    pub label_column: Option<usize>,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub header: Option<bool>,
}

impl DatasetSpec {
    pub fn load_options(&self) -> LoadOptions {
        LoadOptions {
            header: self.header,
            label_column: self.label_column.map_or(LabelColumn::Last, LabelColumn::Index),
        }
    }
}

/// `path` or `path:label-col`.
impl std::str::FromStr for DatasetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (path, label_column) = match s.rsplit_once(':') {
            Some((p, col)) if !p.is_empty() && col.parse::<usize>().is_ok() => {
                (p, col.parse().ok())
            }
            _ => (s, None),
        };
        if path.is_empty() {
            return Err(Error::Config("empty dataset path".into()));
        }
        Ok(DatasetSpec {
            path: PathBuf::from(path),
            label_column,
            name: None,
            header: None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TNormSpec {
    Text(String),
    Object { kind: TNormKind, alpha: Option<f64> },
}

impl TNormSpec {
    pub fn resolve(&self) -> Result<TNorm> {
        match self {
            TNormSpec::Text(s) => s.parse(),
            TNormSpec::Object { kind, alpha: None } => Ok(TNorm::with_default_alpha(*kind)),
            TNormSpec::Object {
                kind,
                alpha: Some(a),
            } => TNorm::new(*kind, *a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Md,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Md),
            other => Err(Error::Config(format!("unknown report format `{other}`"))),
        }
    }
}

fn default_tnorms() -> Vec<TNormSpec> {
    TNormKind::ALL
        .iter()
        .map(|k| TNormSpec::Text(k.name().to_string()))
        .collect()
}

fn default_repeats() -> usize {
    5
}

fn default_seed() -> u64 {
    42
}

fn default_out() -> PathBuf {
    PathBuf::from("reports")
}

fn default_formats() -> Vec<ReportFormat> {
    vec![ReportFormat::Csv, ReportFormat::Md]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub datasets: Vec<DatasetSpec>,
    #[serde(default = "default_tnorms")]
    pub tnorms: Vec<TNormSpec>,
    #[serde(default = "default_repeats")]
    pub repeats: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_out")]
    pub out: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<ReportFormat>,
    #[serde(default)]
    pub weight_mode: WeightMode,
    #[serde(default)]
    pub normalization: NormalizationMode,
}

impl RunConfig {
    pub fn new(datasets: Vec<DatasetSpec>, out: impl Into<PathBuf>) -> Self {
        RunConfig {
            datasets,
            tnorms: default_tnorms(),
            repeats: default_repeats(),
            seed: default_seed(),
            out: out.into(),
            formats: default_formats(),
            weight_mode: WeightMode::default(),
            normalization: NormalizationMode::default(),
        }
    }

    /// Reads a JSON config; relative dataset and output paths resolve against
    /// the config file's directory.
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut config: RunConfig = serde_json::from_str(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        if let Some(base) = path.parent() {
            for d in &mut config.datasets {
                if d.path.is_relative() {
                    d.path = base.join(&d.path);
                }
            }
            if config.out.is_relative() {
                config.out = base.join(&config.out);
            }
        }
        Ok(config)
    }

    pub fn resolved_tnorms(&self) -> Result<Vec<TNorm>> {
        if self.tnorms.is_empty() {
            return Err(Error::Config("no T-norms configured".into()));
        }
        self.tnorms.iter().map(TNormSpec::resolve).collect()
    }

    pub fn cv_config(&self) -> CvConfig {
        CvConfig {
            repeats: self.repeats,
            seed: self.seed,
            weight_mode: self.weight_mode,
            normalization: self.normalization,
        }
    }

    fn validate(&self) -> Result<Vec<TNorm>> {
        if self.datasets.is_empty() {
            return Err(Error::Config("no datasets configured".into()));
        }
        if self.repeats == 0 {
            return Err(Error::Config("repeats must be at least 1".into()));
        }
        self.resolved_tnorms()
    }
}

/// Everything a run produced, already written to disk.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub run: MatrixRun,
    pub friedman: Option<(RankMatrix, FriedmanResult)>,
    pub files: Vec<PathBuf>,
}

fn load_spec(spec: &DatasetSpec) -> Result<Dataset> {
    let loaded = load_csv(&spec.path, spec.load_options())?;
    let mut ds = loaded.dataset;
    if let Some(name) = &spec.name {
        ds.name = name.clone();
    }
    log::info!(
        "{}: m={}, n={}, C={}, dropped {} rows with missing values",
        ds.name,
        ds.len(),
        ds.dimensionality(),
        ds.class_count(),
        loaded.dropped_rows
    );
    Ok(ds)
}

fn write(path: PathBuf, contents: &str, files: &mut Vec<PathBuf>) -> Result<()> {
    std::fs::write(&path, contents).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })?;
    files.push(path);
    Ok(())
}

/// Runs the full dataset x T-norm experiment and writes the reports.
pub fn run(config: &RunConfig) -> Result<RunReport> {
    let tnorms = config.validate()?;
    let datasets = config
        .datasets
        .iter()
        .map(load_spec)
        .collect::<Result<Vec<_>>>()?;
    let run = run_matrix_with(&datasets, &tnorms, &config.cv_config())?;

    for (name, row) in run.matrix.dataset_names.iter().zip(&run.cells) {
        for (t, cell) in tnorms.iter().zip(row) {
            log::info!(
                "{name} / {t}: {:.2}% (mean {:.1} rules per fold, {:.2}% rejected)",
                cell.accuracy,
                cell.mean_rule_count(),
                100.0 * cell.rejection_rate()
            );
        }
    }

    let friedman = if datasets.len() >= 2 && tnorms.len() >= 2 {
        let ranks = rank_rows(&run.matrix)?;
        let result = friedman(&ranks)?;
        log::info!("{}", report::friedman_summary(&result));
        Some((ranks, result))
    } else {
        log::info!("Friedman test skipped: needs at least 2 datasets and 2 T-norms");
        None
    };

    std::fs::create_dir_all(&config.out).map_err(|source| Error::Io {
        path: config.out.clone(),
        source,
    })?;
    let mut files = Vec::new();
    write(
        config.out.join("cells.csv"),
        &report::cells_csv(&run, config.seed, config.repeats),
        &mut files,
    )?;
    if config.formats.contains(&ReportFormat::Csv) {
        write(
            config.out.join("accuracy.csv"),
            &report::matrix_csv(&run.matrix),
            &mut files,
        )?;
    }
    if config.formats.contains(&ReportFormat::Md) {
        write(
            config.out.join("accuracy.md"),
            &report::matrix_markdown(&run.matrix),
            &mut files,
        )?;
        if let Some((ranks, result)) = &friedman {
            write(
                config.out.join("friedman.md"),
                &report::ranks_markdown(ranks, result),
                &mut files,
            )?;
        }
    }
    Ok(RunReport {
        run,
        friedman,
        files,
    })
}

/// Trains on the whole dataset (normalized onto itself) and renders the rule
/// base, strongest rule first. The result does not depend on any seed.
pub fn dump_rules(spec: &DatasetSpec, t: TNorm, weight_mode: WeightMode) -> Result<String> {
    let ds = load_spec(spec)?;
    let (train, _) = normalize(&ds, &ds.subset(&[]))?;
    let rules = generate_with(&train, t, GenerateOptions { weight_mode })?;
    let mut out = format!("# {} rules ({}, {t})\n", rules.len(), ds.name);
    out.push_str(&rules.dump(Some(&ds.class_names)));
    Ok(out)
}
