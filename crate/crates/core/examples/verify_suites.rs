//! Runs the built-in suites and prints a summary plus any record that is
//! not a plain pass. `baskakov verify` does the same with file output.
//!
//!     cargo run --release --example verify_suites

use std::time::Instant;

use baskakov_entropy::verify::{run_suite, Suite, Summary, VerifyConfig};
use baskakov_entropy::Status;

fn main() {
    let cfg = VerifyConfig::default();
    let mut all_ok = true;
    for suite in [Suite::Family, Suite::Shannon, Suite::Quadratic, Suite::Exact] {
        let start = Instant::now();
        let records = run_suite(suite, &cfg);
        let summary = Summary::of(&records);
        all_ok &= summary.ok();
        println!("{suite}: {summary} in {:.2?}", start.elapsed());
        for r in records.iter().filter(|r| r.status != Status::Pass) {
            println!("  {r}");
        }
    }
    std::process::exit(if all_ok { 0 } else { 1 });
}
