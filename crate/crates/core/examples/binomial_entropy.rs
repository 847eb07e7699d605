//! Binomial case (c < 0): symmetry about -1/(2c), the integral formula for
//! H'' and the integral representation of H itself.
//!
//!     cargo run --example binomial_entropy

use baskakov_entropy::grid::interior_linspace;
use baskakov_entropy::numerics::central_diff;
use baskakov_entropy::shannon::{shannon, shannon_integral_rep, shannon_second_integral, symmetry_check};
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    let l: u32 = 7;
    let f = make_family(-1.0, f64::from(l))?;
    println!("{f}: symmetry gap at t=0.2: {:e}", symmetry_check(&f, 0.2, &policy)?);
    println!("{:>6} {:>14} {:>14} {:>16} {:>16}", "x", "H", "integral rep", "H'' (integral)", "H'' (differences)");
    for x in interior_linspace(0.0, 1.0, 9)? {
        let h = shannon(&f, x, &policy)?.h;
        let rep = shannon_integral_rep(u64::from(l), x)?;
        let h2 = shannon_second_integral(&f, x)?;
        let fd = central_diff(|t| shannon(&f, t, &policy).unwrap().h, x, 2)?.value;
        println!("{x:>6.2} {h:>14.10} {rep:>14.10} {h2:>16.10} {fd:>16.10}");
    }

    // Other negative c rescale to c = -1 with y = -cx.
    let g = make_family(-0.5, 3.0)?;
    println!("{g}: H''(0.7) = {:.10}", shannon_second_integral(&g, 0.7)?);
    Ok(())
}
