//! Shannon entropy for c >= 0: H' > 0 and the two-sided bound on H''.
//!
//!     cargo run --example shannon_concavity

use baskakov_entropy::grid::logspace;
use baskakov_entropy::shannon::{
    second_derivative_lower_bound, second_derivative_upper_bound, shannon_with_derivatives,
};
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    for (c, n) in [(0.0, 1.0), (1.0, 3.0)] {
        let f = make_family(c, n)?;
        println!("{f}");
        println!("{:>10} {:>12} {:>12} {:>14} {:>14} {:>14}", "x", "H", "H'", "lower", "H''", "upper");
        for x in logspace(1e-2, 1e2, 9)? {
            let e = shannon_with_derivatives(&f, x, &policy)?;
            let (h1, h2) = (e.h_prime.unwrap(), e.h_second.unwrap());
            let lo = second_derivative_lower_bound(&f, x);
            let hi = second_derivative_upper_bound(&f, x);
            assert!(h1 > 0.0 && lo < h2 && h2 < hi);
            println!("{x:>10.4} {:>12.8} {h1:>12.6e} {lo:>14.6e} {h2:>14.6e} {hi:>14.6e}", e.h);
        }
    }
    Ok(())
}
