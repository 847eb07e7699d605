//! The log-ratio sandwich for c >= 0 and the binomial log-odds sandwich on
//! (0, 1/2), with their margins.
//!
//!     cargo run --example inequalities

use baskakov_entropy::shannon::{binomial_log_ratio_bounds, jensen_log_ratio_bounds};
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    for (c, n) in [(0.0, 1.0), (0.5, 2.0), (2.0, 5.0)] {
        let f = make_family(c, n)?;
        for x in [0.01, 1.0, 50.0] {
            let m = jensen_log_ratio_bounds(&f, x, &policy)?;
            println!("{f} x={x:<5} lower gap {:.3e}  upper gap {:.3e}", m.lower_gap, m.upper_gap);
        }
    }
    for n in [1, 5, 12] {
        for x in [0.05, 0.25, 0.45] {
            let m = binomial_log_ratio_bounds(n, x)?;
            println!("binomial n={n:<2} x={x:<4} lower gap {:.3e}  upper gap {:.3e}", m.lower_gap, m.upper_gap);
        }
    }
    Ok(())
}
