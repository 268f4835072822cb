//! Fuzzy rule-based classification with pluggable T-norms.
//!
//! The crate builds two-antecedent fuzzy if-then classifiers over a fixed
//! family of 14 triangular fuzzy sets. Confidence, support, rule weight and
//! compatibility all go through one of nine [`TNorm`] operators. A seeded
//! cross-validation harness compares those operators across datasets, and a
//! Friedman rank test checks whether the differences are significant.
//!
//! ```
//! use frbcs::{generate, synthetic, normalize, TNorm, TNormKind};
//!
//! let ds = synthetic::separable(100, 7);
//! let (train, _) = normalize(&ds, &ds.subset(&[])).unwrap();
//! let rules = generate(&train, TNorm::with_default_alpha(TNormKind::AczelAlsina)).unwrap();
//! let eval = rules.evaluate(&train).unwrap();
//! assert!(eval.accuracy() > 95.0);
//! ```

pub mod cli;
pub mod cv;
pub mod dataset;
pub mod error;
pub mod partition;
pub mod report;
pub mod rules;
pub mod stats;
pub mod synthetic;
pub mod tnorm;

pub use cv::{cross_validate, cross_validate_with, make_folds, run_matrix, run_matrix_with, AccuracyMatrix, CvConfig, FoldPlan, NormalizationMode};
pub use dataset::{load_csv, normalize, Dataset, LabelColumn, LoadOptions};
pub use error::{Error, Result};
pub use partition::{family, FuzzySet, FuzzySetId};
pub use rules::{compatibility, confidence, generate, generate_with, rule_weight, support, Antecedent, AntecedentAtom, Decision, GenerateOptions, Rule, RuleSet, WeightMode};
pub use stats::{chi_square_upper_tail, friedman, rank_rows, FriedmanResult, RankMatrix};
pub use tnorm::{TNorm, TNormKind};
