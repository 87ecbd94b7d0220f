//! Runs every suite and prints one line per claim.

use kummer_verify::suites::{run_suite, SuiteName, SuiteOptions};

fn main() {
    let report = run_suite(SuiteName::All, &SuiteOptions::default()).normalized();
    for c in &report.claims {
        println!("{:<9} {}", c.status.as_str(), c.id);
    }
    println!("failures: {}", report.failures().len());
}
