//! Index of coincidence S = sum p^2, Renyi entropy -ln S and Tsallis entropy
//! 1 - S, with S' from the derivative recurrence.
//!
//!     cargo run --example renyi_tsallis

use baskakov_entropy::grid::linspace;
use baskakov_entropy::quadratic::{s_prime, s_value};
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    for (c, n, hi) in [(-1.0, 4.0, 1.0), (0.0, 2.0, 4.0), (2.0, 3.0, 4.0)] {
        let f = make_family(c, n)?;
        println!("{f}");
        println!("{:>6} {:>12} {:>12} {:>12} {:>12} {:>6}", "x", "S", "Renyi", "Tsallis", "S'", "K");
        for x in linspace(0.0, hi, 9)? {
            let q = s_value(&f, x, &policy)?;
            let d = if x == 0.0 || x == hi && c < 0.0 { None } else { Some(s_prime(&f, x, &policy)?) };
            let d = d.map_or("-".to_string(), |v| format!("{v:.6}"));
            println!("{x:>6.2} {:>12.8} {:>12.8} {:>12.8} {d:>12} {:>6}", q.s, q.renyi, q.tsallis, q.truncation_k);
        }
    }
    Ok(())
}
