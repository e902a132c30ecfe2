//! Lists the planar trees and forests of small degree and compares the
//! counts with the generating-function coefficients.
//!
//!     cargo run --example enumerate -- 4

use hoch::{enumerate_forests, enumerate_trees, hoch_series, tinf_series, Alphabet};

fn main() -> hoch::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let alphabet = Alphabet::default();

    println!("trees with {n} leaves:");
    for t in enumerate_trees(n, alphabet)? {
        println!("  {t}");
    }
    println!("forests with {n} leaves:");
    for f in enumerate_forests(n, alphabet)? {
        println!("  {f}  ({} trees)", f.tree_count());
    }

    let trees = tinf_series(n)?;
    let forests = hoch_series(n)?;
    println!("\n n  trees  forests");
    for k in 1..=n {
        println!(
            "{k:>2}  {:>5}  {:>7}   series: {} / {}",
            enumerate_trees(k, alphabet)?.len(),
            enumerate_forests(k, alphabet)?.len(),
            trees.coefficient(k),
            forests.coefficient(k)
        );
    }

    // two generators: every leaf independently picks a label
    let two = Alphabet::new(2)?;
    println!("\ntrees with 2 leaves over two generators:");
    for t in enumerate_trees(2, two)? {
        println!("  {t}");
    }
    Ok(())
}
