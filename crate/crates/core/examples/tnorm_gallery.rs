//! Evaluates each of the nine T-norms on a few membership pairs and shows
//! how the parametric ones move between the product and the minimum as
//! alpha changes.
//!
//!     cargo run --example tnorm_gallery

use frbcs::{TNorm, TNormKind};

fn main() -> frbcs::Result<()> {
    let pairs = [(0.3, 0.7), (0.5, 0.5), (0.9, 0.8)];
    print!("{:<22}", "t-norm");
    for (x, y) in pairs {
        print!(" {:>10}", format!("T({x},{y})"));
    }
    println!();
    for t in TNorm::all_defaults() {
        print!("{:<22}", t.to_string());
        for (x, y) in pairs {
            print!(" {:>10.6}", t.apply(x, y)?);
        }
        println!();
    }

    println!("\nalpha sweep at (0.6, 0.8)");
    for kind in TNormKind::ALL.into_iter().filter(|k| k.is_parametric()) {
        let alphas: &[f64] = match kind {
            TNormKind::DuboisPrade => &[0.0, 0.25, 0.5, 0.75, 1.0],
            TNormKind::SugenoWeber => &[-1.0, 0.0, 1.0, 10.0, 100.0],
            _ => &[0.5, 1.0, 2.0, 10.0, 100.0],
        };
        let values = alphas
            .iter()
            .map(|&a| Ok(format!("{a}:{:.4}", TNorm::new(kind, a)?.apply(0.6, 0.8)?)))
            .collect::<frbcs::Result<Vec<_>>>()?;
        println!("{:<16} {}", kind.name(), values.join("  "));
    }

    // out-of-domain parameters are rejected up front
    match "dombi:0".parse::<TNorm>() {
        Ok(t) => println!("\nunexpectedly accepted {t}"),
        Err(e) => println!("\n{e}"),
    }
    Ok(())
}
