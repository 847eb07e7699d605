//! Weights of the three regimes, certified truncation and the derivative
//! recurrence `p'_k = n (p^{n+c}_{k-1} - p^{n+c}_k)`.
//!
//!     cargo run --example family_weights

use baskakov_entropy::family::{mass_check, truncation_index, weight, weight_derivative};
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    for (c, n, x) in [(-1.0, 6.0, 0.3), (0.0, 4.0, 1.5), (1.0, 2.0, 3.0)] {
        let f = make_family(c, n)?;
        let t = truncation_index(&f, x, &policy)?;
        let (mass, _) = mass_check(&f, x, &policy)?;
        println!("{f} at x={x}: K={} tail<={:.1e} sum-1={:+.1e}", t.k_max, t.tail_bound, mass - 1.0);
        for k in 0..4 {
            let p = weight(&f, k, x)?;
            let d = weight_derivative(&f, k, x)?;
            println!("  k={k}  p={:.12}  ln p={:+.6}  p'={:+.12}", p.value, p.log_value, d);
        }
    }

    // Far in the tail the weight underflows but its logarithm stays exact.
    let f = make_family(0.0, 1.0)?;
    let deep = weight(&f, 400, 1.0)?;
    println!("Poisson(1) at k=400: value={:e}, ln value={:.6}", deep.value, deep.log_value);
    Ok(())
}
