//! Evaluation grids and discrete difference checks.

use crate::error::{Error, Result};

/// `steps` equally spaced points from `lo` to `hi` inclusive. The last point
/// is exactly `hi`.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    validate(lo, hi, steps)?;
    let span = hi - lo;
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i + 1 == steps { hi } else { lo + span * (i as f64 / last) })
        .collect())
}

/// `steps` log-spaced points from `lo` to `hi` inclusive (`0 < lo < hi`).
pub fn logspace(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    validate(lo, hi, steps)?;
    if lo <= 0.0 {
        return Err(Error::InvalidArgument(format!("log grid needs lo > 0, got {lo}")));
    }
    let (a, b) = (lo.ln(), hi.ln());
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| match i {
            0 => lo,
            _ if i + 1 == steps => hi,
            _ => (a + (b - a) * (i as f64 / last)).exp(),
        })
        .collect())
}

/// `steps` equally spaced points strictly inside `(lo, hi)`.
pub fn interior_linspace(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    let full = linspace(lo, hi, steps + 2)?;
    Ok(full[1..full.len() - 1].to_vec())
}

fn validate(lo: f64, hi: f64, steps: usize) -> Result<()> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidArgument(format!("grid needs finite lo < hi, got [{lo}, {hi}]")));
    }
    if steps < 2 {
        return Err(Error::InvalidArgument(format!("grid needs at least 2 steps, got {steps}")));
    }
    Ok(())
}

/// Second divided differences `2 [f_{i+1} - f_i]/(x_{i+1}-x_i) - ... / (x_{i+1} - x_{i-1})`
/// at each interior grid index, returned as `(x_i, value)`.
pub fn second_divided_differences(xs: &[f64], fs: &[f64]) -> Vec<(f64, f64)> {
    assert_eq!(xs.len(), fs.len());
    xs.windows(3)
        .zip(fs.windows(3))
        .map(|(x, f)| {
            let right = (f[2] - f[1]) / (x[2] - x[1]);
            let left = (f[1] - f[0]) / (x[1] - x[0]);
            (x[1], 2.0 * (right - left) / (x[2] - x[0]))
        })
        .collect()
}

/// Forward first differences `f_{i+1} - f_i`, tagged with the left point.
pub fn first_differences(xs: &[f64], fs: &[f64]) -> Vec<(f64, f64)> {
    assert_eq!(xs.len(), fs.len());
    xs.iter().zip(fs.windows(2)).map(|(&x, f)| (x, f[1] - f[0])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_endpoints() {
        let g = linspace(0.0, 1.0, 101).unwrap();
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[100], 1.0);
        assert!((g[50] - 0.5).abs() < 1e-16);
        assert!(linspace(1.0, 1.0, 3).is_err());
        assert!(linspace(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn logspace_endpoints() {
        let g = logspace(1e-3, 1e3, 200).unwrap();
        assert_eq!(g[0], 1e-3);
        assert_eq!(g[199], 1e3);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(logspace(0.0, 1.0, 5).is_err());
    }

    #[test]
    fn divided_differences_of_quadratic() {
        let xs = logspace(0.1, 10.0, 30).unwrap();
        let fs: Vec<f64> = xs.iter().map(|x| 3.0 * x * x - x).collect();
        for (_, d) in second_divided_differences(&xs, &fs) {
            assert!((d - 6.0).abs() < 1e-9);
        }
    }
}
