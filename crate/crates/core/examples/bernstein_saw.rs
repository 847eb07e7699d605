//! The Bernstein image of the saw-shaped function w_n is the convex
//! polynomial S_n, checked exactly, plus an exact sign scan of S_n''.
//!
//!     cargo run --example bernstein_saw

use baskakov_entropy::exact::{bernstein_apply, s_poly, s_second_derivative_grid, saw_nodes};
use baskakov_entropy::Result;

fn main() -> Result<()> {
    for n in [1, 2, 3, 8] {
        let nodes = saw_nodes(n);
        let image = bernstein_apply(2 * n, &nodes)?;
        let shown: Vec<String> = nodes.iter().map(ToString::to_string).collect();
        println!("n={n}: nodes [{}]", shown.join(", "));
        println!("      B w = S exactly: {}", image == s_poly(n)?);
    }
    println!("{}", s_second_derivative_grid(12, 1000)?);
    Ok(())
}
