//! Prints the 14 triangular linguistic terms and the membership profile of
//! a few points, one column per granularity.
//!
//!     cargo run --example fuzzy_partition

use frbcs::partition::GRANULARITIES;
use frbcs::{family, FuzzySet};

fn main() -> frbcs::Result<()> {
    for set in family() {
        println!("{:<5} peak {:.4} half-width {:.4}", set.id.to_string(), set.peak, set.halfwidth);
    }

    println!();
    for x in [0.0, 0.2, 0.37, 0.5, 0.9] {
        println!("x = {x}");
        for g in GRANULARITIES {
            let sets: Vec<&FuzzySet> = family().iter().filter(|s| s.id.granularity() == g).collect();
            let mut line = Vec::new();
            let mut sum = 0.0;
            for s in sets {
                let mu = s.membership(x)?;
                sum += mu;
                if mu > 0.0 {
                    line.push(format!("{}={mu:.3}", s.id));
                }
            }
            println!("  {:<30} sum {sum:.3}", line.join(" "));
        }
    }
    Ok(())
}
