//! Small generated datasets for smoke tests and examples.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::Dataset;

/// Two balanced classes split on the first attribute: class `a` draws it from
/// `[0, 0.4]`, class `b` from `[0.6, 1]`. The second attribute is uniform noise.
pub fn separable(m: usize, seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut patterns = Vec::with_capacity(m);
    let mut labels = Vec::with_capacity(m);
    for i in 0..m {
        let class = i % 2;
        let lo = if class == 0 { 0.0 } else { 0.6 };
        patterns.push(vec![lo + 0.4 * rng.gen::<f64>(), rng.gen::<f64>()]);
        labels.push(class);
    }
    Dataset::new("separable", patterns, labels, vec!["a".into(), "b".into()])
        .expect("well-formed by construction")
}

/// The same patterns with labels randomly permuted.
pub fn shuffled_labels(ds: &Dataset, seed: u64) -> Dataset {
    let mut out = ds.clone();
    out.labels.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    out.name = format!("{}-shuffled", ds.name);
    out
}
