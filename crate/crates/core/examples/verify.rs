//! Runs every verification suite, then the same suites against an engine
//! with the wrong sign on the `x ⊗ y` term to show which ones notice.
//!
//!     cargo run --release --example verify -- 5

use hoch::{Suite, Verifier};

fn main() -> hoch::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);

    for (label, verifier) in [
        ("standard", Verifier::new(n)),
        ("flipped cross-term", Verifier::negative_control(n)),
    ] {
        println!("== {label} coproduct, degree <= {n}");
        for report in verifier.run_all(&Suite::ALL)? {
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            let status = if failed == 0 { "PASS" } else { "FAIL" };
            println!(
                "  {:<10} {status}  {} checks, {failed} failed, {:.2?}",
                report.suite,
                report.checks.len(),
                report.elapsed
            );
        }
    }
    Ok(())
}
