//! Evidence on log-convexity of S for c < 0, where it is an open question:
//! the minimum second difference of ln S over a fine grid for each l.
//!
//!     cargo run --release --example log_convexity_probe

use baskakov_entropy::grid::linspace;
use baskakov_entropy::quadratic::log_convexity_minimum;
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    println!("c,l,min_second_diff,argmin_x");
    for c in [-1.0, -0.5] {
        let grid = linspace(0.0, -1.0 / c, 2001)?;
        for l in 1..=12u32 {
            let f = make_family(c, -c * f64::from(l))?;
            let (min, at) = log_convexity_minimum(&f, &grid, &policy)?;
            println!("{c},{l},{min:e},{at}");
        }
    }
    Ok(())
}
