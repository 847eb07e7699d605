//! Pinned parameter sets for the built-in suites. Changing any of these
//! changes what `verify` means, so bump [`MANIFEST_VERSION`] with them.

pub const MANIFEST_VERSION: &str = "1";

/// `(c, n)` pairs for weight-level checks.
pub const FAMILY_CASES: &[(f64, f64)] = &[
    (-1.0, 1.0),
    (-1.0, 7.0),
    (-0.5, 3.0),
    (-0.25, 10.0),
    (0.0, 1.0),
    (0.0, 12.5),
    (0.5, 0.7),
    (1.0, 2.0),
    (2.0, 2.5),
    (2.5, 3.0),
];

/// Points tried for every family case; those outside the domain interior are
/// skipped.
pub const FAMILY_POINTS: &[f64] = &[0.05, 0.3, 0.9, 1.7, 2.5, 17.0];

/// `c >= 0` values for concavity of `H` and the bounds on `H''`.
pub const CONCAVE_C: &[f64] = &[0.0, 0.5, 1.0, 2.0];
pub const CONCAVE_N: &[f64] = &[2.5, 3.5, 10.0];
/// Log grid `(lo, hi, steps)` for the `c >= 0` Shannon checks.
pub const SHANNON_LOG_GRID: (f64, f64, usize) = (1e-3, 1e3, 200);

/// Poisson cases for the sign pattern of the derivatives of `H'`, on a log
/// grid `(lo, hi, steps)`, orders up to 4.
pub const POISSON_MONOTONE_N: &[f64] = &[1.0, 4.0];
pub const POISSON_MONOTONE_GRID: (f64, f64, usize) = (0.05, 10.0, 30);

/// Binomial orders checked for `c = -1`.
pub const BINOMIAL_L_MAX: u64 = 10;
/// Extra `c < 0` families `(c, l)` beyond `c = -1`.
pub const NEGATIVE_C_CASES: &[(f64, u64)] = &[(-0.5, 3), (-0.5, 6), (-2.0, 4)];

/// Largest `n` for the binomial log-odds sandwich.
pub const LOG_ODDS_N_MAX: u64 = 12;
pub const LOG_ODDS_POINTS: &[f64] = &[0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45];

/// `(c, n, lo, hi)`: residual checks use 20 interior points on `[lo, hi]`.
pub const RESIDUAL_CASES: &[(f64, f64, f64, f64)] = &[
    (-1.0, 3.0, 0.02, 0.98),
    (-1.0, 8.0, 0.02, 0.98),
    (0.0, 1.0, 0.05, 5.0),
    (0.0, 4.0, 0.05, 5.0),
    (1.0, 2.0, 0.05, 5.0),
    (1.0, 1.5, 0.05, 5.0),
];
pub const RESIDUAL_POINTS: usize = 20;
pub const RESIDUAL_TOLERANCE: f64 = 1e-5;

/// `(c, n)` for the sign pattern of derivatives, on a 50-point log grid over
/// `[0.1, 10]`, orders up to 6.
pub const MONOTONE_CASES: &[(f64, f64)] = &[(0.0, 1.0), (0.0, 5.0), (1.0, 2.0), (1.0, 1.5), (2.5, 3.0), (2.5, 10.0)];
pub const MONOTONE_GRID: (f64, f64, usize) = (0.1, 10.0, 50);
pub const MONOTONE_ORDER: usize = 6;

/// `c < 0` families `(c, l_max)` for convexity of `S`.
pub const CONVEX_NEGATIVE: &[(f64, u64)] = &[(-1.0, 10), (-0.5, 8)];
pub const CONVEX_STEPS: usize = 201;

/// Sweep used by the log-convexity probe for `c < 0`.
pub const PROBE_C: &[f64] = &[-1.0, -0.5];
pub const PROBE_L_MAX: u64 = 12;
pub const PROBE_STEPS: usize = 2001;

/// Exact suite sizes: the cheaper identities run to `EXACT_N_WIDE`, the rest
/// to `EXACT_N`.
pub const EXACT_N: u32 = 30;
pub const EXACT_N_WIDE: u32 = 50;
pub const EXACT_GRID_POINTS: u32 = 1000;
