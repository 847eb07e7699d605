//! Residuals of the second-order equation for S and of its Heun, confluent
//! Heun, Riccati and Tsallis forms. S'' comes from finite differences, so
//! nothing on the way uses the equation being checked.
//!
//!     cargo run --example ode_residuals

use baskakov_entropy::quadratic::{
    confluent_heun_residual, heun_residual, ode_residual, riccati_residual, tsallis_ode_residual,
    DerivativeSource,
};
use baskakov_entropy::{make_family, Result, TruncationPolicy};

fn main() -> Result<()> {
    let policy = TruncationPolicy::default();
    let src = DerivativeSource::FiniteDifference;
    for (c, n, x) in [(-1.0, 3.0, 0.3), (0.0, 2.0, 0.7), (1.0, 2.0, 1.5)] {
        let f = make_family(c, n)?;
        println!("{f} at x={x}");
        println!("  equation  {:.2e}", ode_residual(&f, x, src, &policy)?.relative());
        println!("  Riccati   {:.2e}", riccati_residual(&f, x, src, &policy)?.relative());
        println!("  Tsallis   {:.2e}", tsallis_ode_residual(&f, x, src, &policy)?.relative());
        if c == 0.0 {
            println!("  confluent {:.2e}", confluent_heun_residual(n, x, src, &policy)?.relative());
        } else {
            println!("  Heun      {:.2e}", heun_residual(&f, x, src, &policy)?.relative());
        }
    }
    // The singular points of the equation are refused.
    let f = make_family(-1.0, 3.0)?;
    println!("at x=1/2: {}", ode_residual(&f, 0.5, src, &policy).unwrap_err());
    Ok(())
}
