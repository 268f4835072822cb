//! The nine triangular norms used as the fuzzy "and" throughout rule scoring.
//!
//! Every operator is evaluated in `f64` and clamped into `[0, 1]`. The
//! boundary cases `T(x, 0) = 0` and `T(x, 1) = x` are answered before the
//! closed-form expression is evaluated, which also covers the singular points
//! of the Dombi, Aczel-Alsina, Hamacher, Schweizer-Sklar and Dubois-Prade
//! formulas (`0/0`, `ln 0`, `0^-a`).
//!
//! Two rows deviate from a literal transcription of the usual printed table:
//!
//! * Yager and Sugeno-Weber are clamped with `max(.., 0)`, otherwise they leave
//!   the unit interval.
//! * Schweizer-Sklar is `(x^-a + y^-a - 1)^(-1/a)`. The form with a positive
//!   outer exponent `1/a` gives `T(0.5, 0.5) = 3` at `a = 1` and breaks the
//!   identity axiom.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TNormKind {
    Minimum,
    Product,
    Yager,
    SugenoWeber,
    Hamacher,
    SchweizerSklar,
    AczelAlsina,
    Dombi,
    DuboisPrade,
}

impl TNormKind {
    pub const ALL: [TNormKind; 9] = [
        TNormKind::Minimum,
        TNormKind::Product,
        TNormKind::Yager,
        TNormKind::SugenoWeber,
        TNormKind::Hamacher,
        TNormKind::SchweizerSklar,
        TNormKind::AczelAlsina,
        TNormKind::Dombi,
        TNormKind::DuboisPrade,
    ];

    /// Canonical lowercase identifier used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            TNormKind::Minimum => "minimum",
            TNormKind::Product => "product",
            TNormKind::Yager => "yager",
            TNormKind::SugenoWeber => "sugeno-weber",
            TNormKind::Hamacher => "hamacher",
            TNormKind::SchweizerSklar => "schweizer-sklar",
            TNormKind::AczelAlsina => "aczel-alsina",
            TNormKind::Dombi => "dombi",
            TNormKind::DuboisPrade => "dubois-prade",
        }
    }

    /// Human-readable column header, e.g. `Aczel-Alsina`.
    pub fn title(self) -> &'static str {
        match self {
            TNormKind::Minimum => "Minimum",
            TNormKind::Product => "Product",
            TNormKind::Yager => "Yager",
            TNormKind::SugenoWeber => "Sugeno-Weber",
            TNormKind::Hamacher => "Hamacher",
            TNormKind::SchweizerSklar => "Schweizer-Sklar",
            TNormKind::AczelAlsina => "Aczel-Alsina",
            TNormKind::Dombi => "Dombi",
            TNormKind::DuboisPrade => "Dubois-Prade",
        }
    }

    pub fn is_parametric(self) -> bool {
        !matches!(self, TNormKind::Minimum | TNormKind::Product)
    }

    /// Alpha used when none is given: 0.5 for Dubois-Prade, 2.0 for the other
    /// parametric families.
    pub fn default_alpha(self) -> Option<f64> {
        match self {
            TNormKind::Minimum | TNormKind::Product => None,
            TNormKind::DuboisPrade => Some(0.5),
            _ => Some(2.0),
        }
    }

    fn constraint(self) -> &'static str {
        match self {
            TNormKind::Minimum | TNormKind::Product => "(unused)",
            TNormKind::Yager
            | TNormKind::SchweizerSklar
            | TNormKind::AczelAlsina
            | TNormKind::Dombi => "> 0",
            TNormKind::SugenoWeber => ">= -1",
            TNormKind::Hamacher => ">= 0",
            TNormKind::DuboisPrade => "in [0, 1]",
        }
    }

    fn admits(self, alpha: f64) -> bool {
        if !alpha.is_finite() {
            return false;
        }
        match self {
            TNormKind::Minimum | TNormKind::Product => true,
            TNormKind::Yager
            | TNormKind::SchweizerSklar
            | TNormKind::AczelAlsina
            | TNormKind::Dombi => alpha > 0.0,
            TNormKind::SugenoWeber => alpha >= -1.0,
            TNormKind::Hamacher => alpha >= 0.0,
            TNormKind::DuboisPrade => (0.0..=1.0).contains(&alpha),
        }
    }
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TNormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        TNormKind::ALL
            .into_iter()
            .find(|k| k.name() == wanted)
            .ok_or_else(|| Error::Config(format!("unknown T-norm `{s}`")))
    }
}

/// A validated T-norm: an operator kind together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TNorm {
    kind: TNormKind,
    alpha: Option<f64>,
}

impl TNorm {
    pub const MINIMUM: TNorm = TNorm {
        kind: TNormKind::Minimum,
        alpha: None,
    };
    pub const PRODUCT: TNorm = TNorm {
        kind: TNormKind::Product,
        alpha: None,
    };

    /// Checks `alpha` against the kind's parameter domain. Minimum and Product
    /// accept and discard any alpha.
    pub fn new(kind: TNormKind, alpha: f64) -> Result<Self> {
        if !kind.is_parametric() {
            return Ok(TNorm { kind, alpha: None });
        }
        if !kind.admits(alpha) {
            return Err(Error::ParameterOutOfDomain {
                kind,
                alpha,
                constraint: kind.constraint(),
            });
        }
        Ok(TNorm {
            kind,
            alpha: Some(alpha),
        })
    }

    pub fn with_default_alpha(kind: TNormKind) -> Self {
        TNorm {
            kind,
            alpha: kind.default_alpha(),
        }
    }

    /// All nine operators at their default alpha, in canonical order.
    pub fn all_defaults() -> Vec<TNorm> {
        TNormKind::ALL
            .into_iter()
            .map(TNorm::with_default_alpha)
            .collect()
    }

    pub fn kind(&self) -> TNormKind {
        self.kind
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// `T(x, y)`, rejecting grades outside the unit interval.
    pub fn apply(&self, x: f64, y: f64) -> Result<f64> {
        check_grade(x)?;
        check_grade(y)?;
        Ok(self.eval(x, y))
    }

    /// Left fold of [`TNorm::apply`] over `values`.
    pub fn fold(&self, values: &[f64]) -> Result<f64> {
        let (first, rest) = values.split_first().ok_or(Error::EmptyInput)?;
        check_grade(*first)?;
        rest.iter().try_fold(*first, |acc, &v| self.apply(acc, v))
    }

    /// `T(x, y)` without input validation, for the inner loops of rule scoring.
    /// Callers guarantee `x, y` are in `[0, 1]`.
    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y));
        if x == 0.0 || y == 0.0 {
            return 0.0;
        }
        if x == 1.0 {
            return y;
        }
        if y == 1.0 {
            return x;
        }
        let a = self.alpha.unwrap_or(0.0);
        let v = match self.kind {
            TNormKind::Minimum => x.min(y),
            TNormKind::Product => x * y,
            TNormKind::Yager => {
                let s = (1.0 - x).powf(a) + (1.0 - y).powf(a);
                (1.0 - s.powf(1.0 / a)).max(0.0)
            }
            TNormKind::SugenoWeber => {
                if a == -1.0 {
                    // limit a -> -1 is the drastic product; both grades are < 1 here
                    0.0
                } else {
                    ((x + y - 1.0 + a * (x * y)) / (1.0 + a)).max(0.0)
                }
            }
            TNormKind::Hamacher => x * y / (a + (1.0 - a) * (x + y - x * y)),
            TNormKind::SchweizerSklar => schweizer_sklar(x, y, a),
            TNormKind::AczelAlsina => {
                let s = (-x.ln()).powf(a) + (-y.ln()).powf(a);
                (-s.powf(1.0 / a)).exp()
            }
            TNormKind::Dombi => {
                let s = ((1.0 - x) / x).powf(a) + ((1.0 - y) / y).powf(a);
                1.0 / (1.0 + s.powf(1.0 / a))
            }
            TNormKind::DuboisPrade => x * y / x.max(y).max(a),
        };
        if v.is_nan() {
            0.0
        } else {
            v.clamp(0.0, 1.0)
        }
    }
}

// (x^-a + y^-a - 1)^(-1/a) evaluated through u = -a ln x, v = -a ln y so that
// neither x^-a overflow nor cancellation near x, y = 1 loses precision.
fn schweizer_sklar(x: f64, y: f64, a: f64) -> f64 {
    let u = -a * x.ln();
    let v = -a * y.ln();
    let hi = u.max(v);
    let ln_s = if hi < 700.0 {
        (u.exp_m1() + v.exp_m1()).ln_1p()
    } else {
        hi + ((u - hi).exp() + (v - hi).exp() - (-hi).exp()).ln()
    };
    (-ln_s / a).exp()
}

fn check_grade(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "membership grade",
            value: x,
        })
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha {
            Some(a) => write!(f, "{}:{}", self.kind, a),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// Parses `name` or `name:alpha`; a bare parametric name takes its default alpha.
impl FromStr for TNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => Ok(TNorm::with_default_alpha(s.parse()?)),
            Some((name, alpha)) => {
                let kind: TNormKind = name.parse()?;
                let alpha: f64 = alpha.trim().parse().map_err(|_| {
                    Error::Config(format!("`{alpha}` is not a number (T-norm `{s}`)"))
                })?;
                TNorm::new(kind, alpha)
            }
        }
    }
}
