//! Two-antecedent fuzzy classification rules.
//!
//! A rule `attr_i is A AND attr_j is B => class c with CF` is scored against a
//! normalized training set through a chosen [`TNorm`]:
//!
//! * compatibility `mu(x) = T(A(x_i), B(x_j))`
//! * confidence `sum_{x in c} mu(x) / sum_x mu(x)` (0 when nothing is covered)
//! * support `sum_{x in c} mu(x) / m`
//! * weight `CF = conf(c) - sum_{h != c} conf(h)`
//!
//! [`generate`] enumerates every attribute pair and every pair of sets from
//! the 14-set family. The consequent is the class with the largest
//! `conf * supp`. The antecedent is dropped when that maximum is zero or is
//! shared by two classes, and a rule whose weight is not positive is also
//! dropped. [`RuleSet::classify`] picks the single rule maximizing `mu * CF`.

use std::fmt;

use rayon::prelude::*;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::partition::{self, family, FuzzySet, FuzzySetId, FAMILY_SIZE};
use crate::tnorm::TNorm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AntecedentAtom {
    pub attribute: usize,
    pub fuzzy_set: FuzzySetId,
}

impl AntecedentAtom {
    pub fn new(attribute: usize, fuzzy_set: FuzzySetId) -> Self {
        AntecedentAtom {
            attribute,
            fuzzy_set,
        }
    }
}

impl fmt::Display for AntecedentAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "attr{} is {}", self.attribute, self.fuzzy_set)
    }
}

/// Two conditions on distinct attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Antecedent(pub [AntecedentAtom; 2]);

impl Antecedent {
    pub fn new(first: AntecedentAtom, second: AntecedentAtom) -> Self {
        Antecedent([first, second])
    }

    fn check(&self, n: usize) -> Result<()> {
        let [a, b] = self.0;
        if a.attribute == b.attribute {
            return Err(Error::Config(format!(
                "antecedent constrains attr{} twice",
                a.attribute
            )));
        }
        let widest = a.attribute.max(b.attribute);
        if widest >= n {
            return Err(Error::DimensionMismatch {
                expected: widest + 1,
                got: n,
            });
        }
        Ok(())
    }

    fn sets(&self) -> [FuzzySet; 2] {
        self.0.map(|atom| FuzzySet::from_id(atom.fuzzy_set))
    }
}

impl fmt::Display for Antecedent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} AND {}", self.0[0], self.0[1])
    }
}

/// How the certainty grade `CF` of an emitted rule is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMode {
    /// `conf(c) - sum of the other classes' confidences`.
    #[default]
    ConfidenceDifference,
    /// `conf(c) * supp(c)`, the same quantity that selects the consequent.
    ConfidenceTimesSupport,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rule {
    pub antecedent: Antecedent,
    pub consequent: usize,
    pub confidence: f64,
    pub support: f64,
    pub weight: f64,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} => class {} (conf={:.4}, supp={:.4}, CF={:.4})",
            self.antecedent, self.consequent, self.confidence, self.support, self.weight
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleSet {
    pub rules: Vec<Rule>,
    pub tnorm: TNorm,
    pub dimensionality: usize,
    pub class_count: usize,
    pub weight_mode: WeightMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Class(usize),
    Rejected,
}

impl Decision {
    pub fn class(self) -> Option<usize> {
        match self {
            Decision::Class(c) => Some(c),
            Decision::Rejected => None,
        }
    }
}

/// Per-class and total compatibility sums, accumulated in pattern order.
#[derive(Debug, Clone, PartialEq)]
struct Coverage {
    per_class: Vec<f64>,
    total: f64,
    m: usize,
}

impl Coverage {
    fn new(class_count: usize, m: usize) -> Self {
        Coverage {
            per_class: vec![0.0; class_count],
            total: 0.0,
            m,
        }
    }

    fn add(&mut self, class: usize, mu: f64) {
        self.per_class[class] += mu;
        self.total += mu;
    }

    fn confidence(&self, class: usize) -> f64 {
        if self.total == 0.0 {
            0.0
        } else {
            self.per_class[class] / self.total
        }
    }

    fn support(&self, class: usize) -> f64 {
        self.per_class[class] / self.m as f64
    }

    fn weight(&self, class: usize) -> f64 {
        let rivals: f64 = (0..self.per_class.len())
            .filter(|&h| h != class)
            .map(|h| self.confidence(h))
            .sum();
        self.confidence(class) - rivals
    }
}

fn check_pattern(pattern: &[f64]) -> Result<()> {
    match pattern.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        Some(&value) => Err(Error::Domain {
            what: "attribute value",
            value,
        }),
        None => Ok(()),
    }
}

/// Compatibility degree of `pattern` with `antecedent`.
pub fn compatibility(antecedent: &Antecedent, pattern: &[f64], t: TNorm) -> Result<f64> {
    antecedent.check(pattern.len())?;
    let [a, b] = antecedent.0;
    let [sa, sb] = antecedent.sets();
    let ga = sa.membership(pattern[a.attribute])?;
    let gb = sb.membership(pattern[b.attribute])?;
    t.fold(&[ga, gb])
}

fn coverage(antecedent: &Antecedent, train: &Dataset, t: TNorm) -> Result<Coverage> {
    antecedent.check(train.dimensionality())?;
    let mut cov = Coverage::new(train.class_count(), train.len());
    for (p, &label) in train.patterns.iter().zip(&train.labels) {
        cov.add(label, compatibility(antecedent, p, t)?);
    }
    Ok(cov)
}

pub fn confidence(antecedent: &Antecedent, class: usize, train: &Dataset, t: TNorm) -> Result<f64> {
    Ok(coverage(antecedent, train, t)?.confidence(class))
}

pub fn support(antecedent: &Antecedent, class: usize, train: &Dataset, t: TNorm) -> Result<f64> {
    Ok(coverage(antecedent, train, t)?.support(class))
}

/// `CF = conf(consequent) - sum of the confidences of every other class`.
pub fn rule_weight(antecedent: &Antecedent, consequent: usize, train: &Dataset, t: TNorm) -> Result<f64> {
    Ok(coverage(antecedent, train, t)?.weight(consequent))
}

/// All 14 grades of every attribute of a pattern.
fn grade_table(pattern: &[f64]) -> Vec<[f64; FAMILY_SIZE]> {
    pattern.iter().map(|&x| partition::grades(x)).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenerateOptions {
    pub weight_mode: WeightMode,
}

pub fn generate(train: &Dataset, t: TNorm) -> Result<RuleSet> {
    generate_with(train, t, GenerateOptions::default())
}

pub fn generate_with(train: &Dataset, t: TNorm, options: GenerateOptions) -> Result<RuleSet> {
    let n = train.dimensionality();
    if n < 2 {
        return Err(Error::InsufficientAttributes(n));
    }
    if train.is_empty() {
        return Err(Error::Config("cannot generate rules from an empty training set".into()));
    }
    for p in &train.patterns {
        check_pattern(p)?;
    }
    let grades: Vec<_> = train.patterns.iter().map(|p| grade_table(p)).collect();
    let class_count = train.class_count();
    let m = train.len();

    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let fam = family();

    let rules: Vec<Rule> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let mut out = Vec::new();
            for sa in 0..FAMILY_SIZE {
                // patterns with nonzero grade on the first atom; others add 0 to every sum
                let touched: Vec<usize> = (0..m).filter(|&p| grades[p][a][sa] > 0.0).collect();
                if touched.is_empty() {
                    continue;
                }
                for sb in 0..FAMILY_SIZE {
                    let mut cov = Coverage::new(class_count, m);
                    for &p in &touched {
                        let gb = grades[p][b][sb];
                        if gb > 0.0 {
                            cov.add(train.labels[p], t.eval(grades[p][a][sa], gb));
                        }
                    }
                    let antecedent = Antecedent::new(
                        AntecedentAtom::new(a, fam[sa].id),
                        AntecedentAtom::new(b, fam[sb].id),
                    );
                    if let Some(rule) = score(antecedent, &cov, options.weight_mode) {
                        out.push(rule);
                    }
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    Ok(RuleSet {
        rules,
        tnorm: t,
        dimensionality: n,
        class_count,
        weight_mode: options.weight_mode,
    })
}

fn score(antecedent: Antecedent, cov: &Coverage, mode: WeightMode) -> Option<Rule> {
    let products: Vec<f64> = (0..cov.per_class.len())
        .map(|c| cov.confidence(c) * cov.support(c))
        .collect();
    let best = products.iter().copied().fold(0.0, f64::max);
    if best <= 0.0 {
        return None;
    }
    let mut winners = products.iter().enumerate().filter(|&(_, &v)| v == best);
    let (consequent, _) = winners.next()?;
    if winners.next().is_some() {
        return None;
    }
    let confidence = cov.confidence(consequent);
    let support = cov.support(consequent);
    let weight = match mode {
        WeightMode::ConfidenceDifference => cov.weight(consequent),
        WeightMode::ConfidenceTimesSupport => products[consequent],
    };
    (weight > 0.0).then_some(Rule {
        antecedent,
        consequent,
        confidence,
        support,
        weight,
    })
}

impl RuleSet {
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Single-winner reasoning. Rejects when no rule covers the pattern or
    /// when rules of different classes share the maximal `mu * CF`.
    pub fn classify(&self, pattern: &[f64]) -> Result<Decision> {
        if pattern.len() != self.dimensionality {
            return Err(Error::DimensionMismatch {
                expected: self.dimensionality,
                got: pattern.len(),
            });
        }
        check_pattern(pattern)?;
        let grades = grade_table(pattern);
        let mut best = 0.0;
        let mut winner: Option<usize> = None;
        let mut conflict = false;
        for rule in &self.rules {
            let [a, b] = rule.antecedent.0;
            let mu = self.tnorm.eval(
                grades[a.attribute][a.fuzzy_set.ordinal()],
                grades[b.attribute][b.fuzzy_set.ordinal()],
            );
            let v = mu * rule.weight;
            if v > best {
                best = v;
                winner = Some(rule.consequent);
                conflict = false;
            } else if v == best && v > 0.0 && winner != Some(rule.consequent) {
                conflict = true;
            }
        }
        Ok(match winner {
            Some(c) if !conflict => Decision::Class(c),
            _ => Decision::Rejected,
        })
    }

    /// Classifies every pattern of `test`.
    pub fn evaluate(&self, test: &Dataset) -> Result<Evaluation> {
        let mut eval = Evaluation::default();
        for (p, &label) in test.patterns.iter().zip(&test.labels) {
            match self.classify(p)? {
                Decision::Class(c) if c == label => eval.correct += 1,
                Decision::Class(_) => eval.wrong += 1,
                Decision::Rejected => eval.rejected += 1,
            }
        }
        Ok(eval)
    }

    /// One rule per line, highest CF first; class indices are replaced by
    /// `class_names` when given.
    pub fn dump(&self, class_names: Option<&[String]>) -> String {
        let mut order: Vec<&Rule> = self.rules.iter().collect();
        order.sort_by(|x, y| y.weight.total_cmp(&x.weight));
        let mut out = String::new();
        for r in order {
            let class = class_names
                .and_then(|names| names.get(r.consequent).cloned())
                .unwrap_or_else(|| r.consequent.to_string());
            out.push_str(&format!(
                "{} => class {} (conf={:.4}, supp={:.4}, CF={:.4})\n",
                r.antecedent, class, r.confidence, r.support, r.weight
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Evaluation {
    pub correct: usize,
    pub wrong: usize,
    pub rejected: usize,
}

impl Evaluation {
    pub fn total(&self) -> usize {
        self.correct + self.wrong + self.rejected
    }

    /// Percent correct; rejections count as errors.
    pub fn accuracy(&self) -> f64 {
        if self.total() == 0 {
            0.0
        } else {
            100.0 * self.correct as f64 / self.total() as f64
        }
    }
}
