//! Exact rational checks for c = -1: the central expansion of S, the
//! polynomial f_n, its Taylor coefficients at 1, and the c_nk decomposition.
//!
//!     cargo run --example exact_identities

use baskakov_entropy::exact::{
    central_derivative, central_form, cnk_solve, derivative_at_one, f_identity_holds, f_poly, f_shifted,
    recentered_s_poly, s_poly,
};
use baskakov_entropy::Result;

fn main() -> Result<()> {
    let n = 4;
    println!("S_{n}(x) = {}", s_poly(n)?);
    let cf = central_form(n)?;
    println!("a_k = [{}]", cf.a.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    println!("recentred S equals the central expansion: {}", recentered_s_poly(n)? == cf.as_poly_in_y());
    for j in 0..=n {
        println!("  S^({})(1/2) = {}", 2 * j, central_derivative(n, j)?);
    }
    println!("f_{n}(t) = {}", f_poly(n)?);
    println!("f_{n}(1+u) = {}", f_shifted(n)?);
    println!("2n f_n(t) = (t+1)^(2n-1) S'(t/(t+1)): {}", f_identity_holds(n)?);
    for i in 0..2 * n {
        let (direct, closed) = derivative_at_one(n, i)?;
        println!("  f^({i})(1) = {direct} (closed sum {closed})");
    }
    let d = cnk_solve(n)?;
    println!("c_nk = [{}]", d.c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    Ok(())
}
