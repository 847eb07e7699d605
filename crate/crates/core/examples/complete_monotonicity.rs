//! Derivatives of S from the equation, and the alternating sign pattern
//! (-1)^m S^(m) > 0 for c >= 0.
//!
//!     cargo run --example complete_monotonicity

use baskakov_entropy::grid::logspace;
use baskakov_entropy::quadratic::{complete_monotonicity_scan, derivative_tower, origin_tower};
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    let f = make_family(1.0, 2.0)?;
    println!("{f}");
    println!("at 0: {:?}", origin_tower(&f, 6)?.values);
    let t = derivative_tower(&f, 0.8, 8, &policy)?;
    for (m, v) in t.values.iter().enumerate() {
        println!("  S^({m})(0.8) = {v:+.10e}");
    }
    for (c, n) in [(0.0, 1.0), (1.0, 2.0), (2.5, 3.0)] {
        let f = make_family(c, n)?;
        let rec = complete_monotonicity_scan(&f, &logspace(0.1, 10.0, 50)?, 6, &policy)?;
        println!("{rec}");
    }
    Ok(())
}
