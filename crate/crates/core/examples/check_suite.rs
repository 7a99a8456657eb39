//! Runs the check suites from a config file (default: the bundled fixture
//! config) and prints a summary.
use std::path::PathBuf;

use ordex::experiment::{run_suite, ExperimentConfig};

fn main() -> ordex::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/suite.json"));
    let config = ExperimentConfig::load(&path)?;
    let summary = run_suite(&config)?;
    for s in &summary.suites {
        println!("{} {}", if s.passed { "ok  " } else { "FAIL" }, s.suite);
        for c in &s.checks {
            println!(
                "     {} {}: {}",
                if c.passed { "+" } else { "-" },
                c.name,
                c.detail
            );
        }
    }
    println!("passed: {}", summary.passed);
    Ok(())
}
