use std::collections::HashMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numeric patterns with dense class labels `0..class_names.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub patterns: Vec<Vec<f64>>,
    pub labels: Vec<usize>,
    pub class_names: Vec<String>,
    pub attribute_names: Vec<String>,
}

impl Dataset {
    /// Builds a dataset, checking row widths and label range.
    pub fn new(
        name: impl Into<String>,
        patterns: Vec<Vec<f64>>,
        labels: Vec<usize>,
        class_names: Vec<String>,
    ) -> Result<Self> {
        let n = patterns.first().map_or(0, Vec::len);
        if patterns.len() != labels.len() {
            return Err(Error::Config(format!(
                "{} patterns but {} labels",
                patterns.len(),
                labels.len()
            )));
        }
        if let Some(row) = patterns.iter().position(|p| p.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: patterns[row].len(),
            });
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= class_names.len()) {
            return Err(Error::Config(format!(
                "label {bad} out of range for {} classes",
                class_names.len()
            )));
        }
        Ok(Dataset {
            name: name.into(),
            attribute_names: (0..n).map(|i| format!("attr{i}")).collect(),
            patterns,
            labels,
            class_names,
        })
    }

    /// Pattern count `m`.
    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Attribute count `n`.
    pub fn dimensionality(&self) -> usize {
        self.attribute_names.len()
    }

    /// Class count `C`.
    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    /// Rows at `indices`, keeping class and attribute names.
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        Dataset {
            name: self.name.clone(),
            patterns: indices.iter().map(|&i| self.patterns[i].clone()).collect(),
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
            class_names: self.class_names.clone(),
            attribute_names: self.attribute_names.clone(),
        }
    }

    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.class_count()];
        for &l in &self.labels {
            counts[l] += 1;
        }
        counts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelColumn {
    #[default]
    Last,
    Index(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LoadOptions {
    /// `None` detects a header: the first row is one if any attribute field
    /// fails to parse as a number.
    pub header: Option<bool>,
    pub label_column: LabelColumn,
}

/// A loaded dataset plus the number of rows dropped for missing values.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub dataset: Dataset,
    pub dropped_rows: usize,
}

pub fn load_csv(path: impl AsRef<Path>, options: LoadOptions) -> Result<Loaded> {
    let path = path.as_ref();
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = std::fs::read_to_string(path).map_err(io_err)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".into());
    parse_csv(&text, &name, path.to_path_buf(), options)
}

/// Parses CSV text; `origin` is only used in diagnostics.
pub fn parse_csv(text: &str, name: &str, origin: PathBuf, options: LoadOptions) -> Result<Loaded> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let parse_err = |row: usize, message: String| Error::Parse {
        path: origin.clone(),
        row,
        message,
    };

    let mut records = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| parse_err(i + 1, e.to_string()))?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        records.push((i + 1, rec));
    }
    let Some((_, first)) = records.first() else {
        return Err(Error::EmptyDataset {
            path: origin,
            dropped: 0,
        });
    };
    let width = first.len();
    if width < 2 {
        return Err(parse_err(1, "need at least one attribute and a label column".into()));
    }
    let label_col = match options.label_column {
        LabelColumn::Last => width - 1,
        LabelColumn::Index(i) if i < width => i,
        LabelColumn::Index(i) => {
            return Err(Error::Config(format!(
                "label column {i} out of range for {width} columns"
            )))
        }
    };

    let is_missing = |f: &str| f.is_empty() || f == "?";
    let has_header = options.header.unwrap_or_else(|| {
        first
            .iter()
            .enumerate()
            .any(|(c, f)| c != label_col && !is_missing(f) && f.parse::<f64>().is_err())
    });

    let mut attribute_names: Vec<String> = (0..width - 1).map(|i| format!("attr{i}")).collect();
    let body = if has_header {
        let (_, head) = &records[0];
        attribute_names = head
            .iter()
            .enumerate()
            .filter(|&(c, _)| c != label_col)
            .map(|(_, f)| f.to_string())
            .collect();
        &records[1..]
    } else {
        &records[..]
    };

    let mut class_index: HashMap<String, usize> = HashMap::new();
    let mut class_names = Vec::new();
    let mut patterns = Vec::new();
    let mut labels = Vec::new();
    let mut dropped = 0;

    for (row, rec) in body {
        if rec.len() != width {
            return Err(parse_err(
                *row,
                format!("expected {width} fields, found {}", rec.len()),
            ));
        }
        if rec.iter().any(is_missing) {
            dropped += 1;
            continue;
        }
        let mut values = Vec::with_capacity(width - 1);
        for (c, field) in rec.iter().enumerate() {
            if c == label_col {
                continue;
            }
            let v: f64 = field
                .parse()
                .map_err(|_| parse_err(*row, format!("column {c}: `{field}` is not numeric")))?;
            if !v.is_finite() {
                return Err(parse_err(*row, format!("column {c}: non-finite value")));
            }
            values.push(v);
        }
        let label = &rec[label_col];
        let next = class_names.len();
        let class = *class_index.entry(label.to_string()).or_insert_with(|| {
            class_names.push(label.to_string());
            next
        });
        patterns.push(values);
        labels.push(class);
    }

    if patterns.is_empty() {
        return Err(Error::EmptyDataset {
            path: origin,
            dropped,
        });
    }
    if dropped > 0 {
        log::info!("{name}: dropped {dropped} rows with missing values");
    }
    Ok(Loaded {
        dataset: Dataset {
            name: name.to_string(),
            patterns,
            labels,
            class_names,
            attribute_names,
        },
        dropped_rows: dropped,
    })
}

/// Per-attribute min-max transform onto `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinMaxScaler {
    ranges: Vec<(f64, f64)>,
}

impl MinMaxScaler {
    pub fn fit(ds: &Dataset) -> Self {
        let n = ds.dimensionality();
        let mut ranges = vec![(f64::INFINITY, f64::NEG_INFINITY); n];
        for p in &ds.patterns {
            for (r, &v) in ranges.iter_mut().zip(p) {
                r.0 = r.0.min(v);
                r.1 = r.1.max(v);
            }
        }
        MinMaxScaler { ranges }
    }

    pub fn ranges(&self) -> &[(f64, f64)] {
        &self.ranges
    }

    /// Constant attributes map to 0.5; values outside the fitted range clamp.
    pub fn scale(&self, attribute: usize, v: f64) -> f64 {
        let (lo, hi) = self.ranges[attribute];
        if hi <= lo {
            0.5
        } else {
            ((v - lo) / (hi - lo)).clamp(0.0, 1.0)
        }
    }

    pub fn transform(&self, ds: &Dataset) -> Dataset {
        let mut out = ds.clone();
        for p in &mut out.patterns {
            for (i, v) in p.iter_mut().enumerate() {
                *v = self.scale(i, *v);
            }
        }
        out
    }
}

/// Fits min-max scaling on `train` and applies it to both sets.
pub fn normalize(train: &Dataset, test: &Dataset) -> Result<(Dataset, Dataset)> {
    if train.is_empty() {
        return Err(Error::Config("cannot fit normalization on an empty training set".into()));
    }
    if !test.is_empty() && test.dimensionality() != train.dimensionality() {
        return Err(Error::DimensionMismatch {
            expected: train.dimensionality(),
            got: test.dimensionality(),
        });
    }
    let scaler = MinMaxScaler::fit(train);
    Ok((scaler.transform(train), scaler.transform(test)))
}
