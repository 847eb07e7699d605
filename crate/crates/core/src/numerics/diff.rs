//! Central finite differences with one Richardson pass.

use std::convert::Infallible;

use crate::error::{Error, Result};

/// Shape of a central-difference stencil: derivative order, number of
/// distinct evaluation points (including the Richardson half-step), and the
/// outer step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffStencil {
    pub order: u32,
    pub points: u32,
    pub step: f64,
}

impl DiffStencil {
    /// Default stencil for `order` at `x`.
    ///
    /// The base formulas have `O(h^2)` error and the Richardson pass removes
    /// it, so the step balances `h^4` truncation against `eps / h^order`
    /// rounding: `h = eps^(1 / (order + 4)) * max(1, |x|)`.
    pub fn new(order: u32, x: f64) -> Result<Self> {
        let step = f64::EPSILON.powf(1.0 / (f64::from(order) + 4.0)) * x.abs().max(1.0);
        Self::with_step(order, step)
    }

    pub fn with_step(order: u32, step: f64) -> Result<Self> {
        let points = match order {
            1 => 4,
            2 => 5,
            3 => 6,
            4 => 7,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "finite-difference order must be 1..=4, got {order}"
                )))
            }
        };
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
        }
        Ok(DiffStencil { order, points, step })
    }

    /// Furthest distance from `x` at which the function is evaluated.
    pub fn reach(&self) -> f64 {
        if self.order >= 3 {
            2.0 * self.step
        } else {
            self.step
        }
    }
}

/// A derivative estimate with a crude error indicator (difference between the
/// extrapolated value and the finer raw estimate).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffEstimate {
    pub value: f64,
    pub error: f64,
}

fn raw<F, E>(f: &F, x: f64, order: u32, h: f64) -> std::result::Result<f64, E>
where
    F: Fn(f64) -> std::result::Result<f64, E>,
{
    // Exactly representable offsets.
    let h1 = (x + h) - x;
    let h2 = (x + 2.0 * h1) - x;
    Ok(match order {
        1 => (f(x + h1)? - f(x - h1)?) / (2.0 * h1),
        2 => (f(x + h1)? - 2.0 * f(x)? + f(x - h1)?) / (h1 * h1),
        3 => (f(x + h2)? - 2.0 * f(x + h1)? + 2.0 * f(x - h1)? - f(x - h2)?) / (2.0 * h1.powi(3)),
        4 => {
            (f(x + h2)? - 4.0 * f(x + h1)? + 6.0 * f(x)? - 4.0 * f(x - h1)? + f(x - h2)?)
                / h1.powi(4)
        }
        _ => unreachable!("order validated by DiffStencil"),
    })
}

/// Central-difference estimate of the `stencil.order`-th derivative of a
/// fallible function, Richardson-extrapolated once from steps `h` and `h/2`.
pub fn try_central_diff<F, E>(f: F, x: f64, stencil: DiffStencil) -> std::result::Result<DiffEstimate, E>
where
    F: Fn(f64) -> std::result::Result<f64, E>,
{
    let coarse = raw(&f, x, stencil.order, stencil.step)?;
    let fine = raw(&f, x, stencil.order, 0.5 * stencil.step)?;
    let value = (4.0 * fine - coarse) / 3.0;
    Ok(DiffEstimate { value, error: (value - fine).abs() })
}

/// Infallible convenience wrapper around [`try_central_diff`] using the
/// default step for `order`.
pub fn central_diff(f: impl Fn(f64) -> f64, x: f64, order: u32) -> Result<DiffEstimate> {
    let stencil = DiffStencil::new(order, x)?;
    let est = try_central_diff(|t| Ok::<_, Infallible>(f(t)), x, stencil);
    Ok(match est {
        Ok(e) => e,
        Err(never) => match never {},
    })
}
