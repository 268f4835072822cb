//! Uniform triangular partitions of `[0, 1]` with 2, 3, 4 and 5 sets.
//!
//! Together they form a fixed family of 14 linguistic terms; every rule
//! antecedent picks one of them per constrained attribute.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const GRANULARITIES: [u8; 4] = [2, 3, 4, 5];
pub const FAMILY_SIZE: usize = 14;

/// Identifies a set by its partition size and 1-based position, printed as
/// `L<granularity>.<index>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzySetId {
    granularity: u8,
    index: u8,
}

impl FuzzySetId {
    pub fn new(granularity: u8, index: u8) -> Option<Self> {
        (GRANULARITIES.contains(&granularity) && (1..=granularity).contains(&index))
            .then_some(FuzzySetId { granularity, index })
    }

    pub fn granularity(self) -> u8 {
        self.granularity
    }

    pub fn index(self) -> u8 {
        self.index
    }

    /// Position of this set within [`family`].
    pub fn ordinal(self) -> usize {
        let before: usize = GRANULARITIES
            .iter()
            .take_while(|&&g| g < self.granularity)
            .map(|&g| g as usize)
            .sum();
        before + self.index as usize - 1
    }
}

impl fmt::Display for FuzzySetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}.{}", self.granularity, self.index)
    }
}

impl FromStr for FuzzySetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("`{s}` is not a fuzzy set name like L5.3"));
        let (g, k) = s
            .strip_prefix('L')
            .and_then(|rest| rest.split_once('.'))
            .ok_or_else(bad)?;
        let g = g.parse().map_err(|_| bad())?;
        let k = k.parse().map_err(|_| bad())?;
        FuzzySetId::new(g, k).ok_or_else(bad)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzySet {
    pub id: FuzzySetId,
    pub peak: f64,
    pub halfwidth: f64,
}

impl FuzzySet {
    pub fn from_id(id: FuzzySetId) -> Self {
        let steps = f64::from(id.granularity - 1);
        FuzzySet {
            id,
            peak: f64::from(id.index - 1) / steps,
            halfwidth: 1.0 / steps,
        }
    }

    /// Triangular membership `max(1 - |x - peak| / halfwidth, 0)`.
    pub fn membership(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Domain {
                what: "attribute value",
                value: x,
            });
        }
        Ok(self.grade(x))
    }

    #[inline]
    pub(crate) fn grade(&self, x: f64) -> f64 {
        (1.0 - (x - self.peak).abs() / self.halfwidth).max(0.0)
    }
}

/// The 14 sets ordered by granularity, then index.
pub fn family() -> &'static [FuzzySet; FAMILY_SIZE] {
    static FAMILY: OnceLock<[FuzzySet; FAMILY_SIZE]> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let sets: Vec<FuzzySet> = GRANULARITIES
            .iter()
            .flat_map(|&g| (1..=g).map(move |k| FuzzySet::from_id(FuzzySetId { granularity: g, index: k })))
            .collect();
        sets.try_into().expect("2 + 3 + 4 + 5 sets")
    })
}

/// Grades of `x` in all 14 sets, in family order.
pub(crate) fn grades(x: f64) -> [f64; FAMILY_SIZE] {
    let fam = family();
    std::array::from_fn(|i| fam[i].grade(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: u8, k: u8) -> FuzzySet {
        FuzzySet::from_id(FuzzySetId::new(g, k).unwrap())
    }

    #[test]
    fn family_shape() {
        let fam = family();
        assert_eq!(fam.len(), 14);
        let first = fam[0];
        assert_eq!((first.id.granularity(), first.id.index()), (2, 1));
        assert_eq!((first.peak, first.halfwidth), (0.0, 1.0));
        let last = fam[13];
        assert_eq!((last.id.granularity(), last.id.index()), (5, 5));
        assert_eq!((last.peak, last.halfwidth), (1.0, 0.25));
        for (i, s) in fam.iter().enumerate() {
            assert_eq!(s.id.ordinal(), i);
        }
    }

    #[test]
    fn peaks_are_evenly_spaced() {
        for g in GRANULARITIES {
            let sets: Vec<_> = family().iter().filter(|s| s.id.granularity() == g).collect();
            assert_eq!(sets.len(), g as usize);
            assert_eq!(sets[0].peak, 0.0);
            assert_eq!(sets[sets.len() - 1].peak, 1.0);
            for w in sets.windows(2) {
                assert!((w[1].peak - w[0].peak - w[0].halfwidth).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert_eq!(set(2, 1).membership(0.25).unwrap(), 0.75);
        assert_eq!(set(5, 3).membership(0.5).unwrap(), 1.0);
        assert!((set(3, 2).membership(0.9).unwrap() - 0.2).abs() < 1e-12);
        assert!(set(3, 2).membership(1.1).is_err());
        assert!(set(3, 2).membership(-0.01).is_err());
    }

    #[test]
    fn peak_normality_and_support() {
        for s in family() {
            assert_eq!(s.membership(s.peak).unwrap(), 1.0);
            for i in 0..=200 {
                let x = i as f64 / 200.0;
                let m = s.membership(x).unwrap();
                assert!((0.0..=1.0).contains(&m));
                assert_eq!(m == 0.0, (x - s.peak).abs() >= s.halfwidth, "{} at {x}", s.id);
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for s in family() {
            assert_eq!(s.id.to_string().parse::<FuzzySetId>().unwrap(), s.id);
        }
        assert_eq!(set(5, 3).id.to_string(), "L5.3");
        assert!("L6.1".parse::<FuzzySetId>().is_err());
        assert!("L3.0".parse::<FuzzySetId>().is_err());
        assert!("x".parse::<FuzzySetId>().is_err());
    }
}
