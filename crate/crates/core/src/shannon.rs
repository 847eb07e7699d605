//! Shannon entropy `H_{n,c}(x) = -sum_k p_{n,k}(x) ln p_{n,k}(x)` and its
//! first two derivatives.
//!
//! For `c >= 0` the derivatives come from series over the shifted families
//! `(c, n + c)` and `(c, n + 2c)`. For `c < 0` the first derivative is the
//! termwise derivative of the finite sum and the second derivative comes from
//! an integral against the weight `(s - 1) / ln s` on `[0, 1]`, evaluated in
//! the rescaled variable `y = -c x`.
//!
//! All logarithms are natural; entropies are in nats.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{
    truncation_index, weight_derivative_unchecked, weight_unchecked, FamilyParams, NeumaierSum,
    SupportKind, Truncation, TruncationPolicy,
};
use crate::numerics::quadrature::{integrate_unit_graded, GaussOrder};
use crate::numerics::special::mu;

/// Entropy at one point, with optional derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShannonEval {
    pub h: f64,
    pub h_prime: Option<f64>,
    pub h_second: Option<f64>,
    pub truncation_k: u64,
    /// Bound on the omitted part of `-sum p ln p`.
    pub tail_bound: f64,
}

/// Both sides of a two-sided inequality `lower <= middle <= upper`, as gaps
/// `middle - lower` and `upper - middle`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityMargin {
    pub name: String,
    pub x: f64,
    pub lower_gap: f64,
    pub upper_gap: f64,
}

impl InequalityMargin {
    pub fn holds(&self) -> bool {
        self.lower_gap >= 0.0 && self.upper_gap >= 0.0
    }

    pub fn holds_strictly(&self) -> bool {
        self.lower_gap > 0.0 && self.upper_gap > 0.0
    }

    pub fn worst(&self) -> f64 {
        self.lower_gap.min(self.upper_gap)
    }
}

/// `sum_{k <= K} p_{n,k}(x) term(k)` over a certified truncation of `family`.
fn weighted_series(
    family: &FamilyParams,
    x: f64,
    policy: &TruncationPolicy,
    term: impl Fn(u64) -> f64,
) -> Result<(f64, Truncation)> {
    let t = truncation_index(family, x, policy)?;
    let mut acc = NeumaierSum::default();
    for k in 0..=t.k_max {
        let p = weight_unchecked(family, k, x).value;
        if p > 0.0 {
            acc.add(p * term(k));
        }
    }
    Ok((acc.total(), t))
}

/// `H_{n,c}(x)`.
pub fn shannon(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<ShannonEval> {
    let t = truncation_index(params, x, policy)?;
    let mut acc = NeumaierSum::default();
    for k in 0..=t.k_max {
        acc.add(weight_unchecked(params, k, x).entropy_term());
    }
    Ok(ShannonEval {
        h: acc.total().max(0.0),
        h_prime: None,
        h_second: None,
        truncation_k: t.k_max,
        tail_bound: t.entropy_tail_bound(),
    })
}

/// `H`, `H'` and `H''` together. Derivatives are only filled in at interior
/// points of the domain.
pub fn shannon_with_derivatives(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<ShannonEval> {
    let mut eval = shannon(params, x, policy)?;
    if params.domain().contains_interior(x) {
        eval.h_prime = Some(shannon_prime(params, x, policy)?);
        eval.h_second = Some(shannon_second(params, x, policy)?);
    }
    Ok(eval)
}

fn require_nonnegative_c(params: &FamilyParams, what: &str) -> Result<()> {
    if params.c() < 0.0 {
        return Err(Error::UnsupportedParams(format!(
            "{what} is only defined for c >= 0 (got c = {})",
            params.c()
        )));
    }
    Ok(())
}

fn require_negative_c(params: &FamilyParams, what: &str) -> Result<u64> {
    params.l().ok_or_else(|| {
        Error::UnsupportedParams(format!("{what} is only defined for c < 0 (got c = {})", params.c()))
    })
}

/// `H'(x) = n (ln((1 + cx) / x) + sum_k p_{n+c,k}(x) ln((k + 1) / (n + ck)))`, `c >= 0`.
pub fn shannon_prime_series(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<f64> {
    require_nonnegative_c(params, "the series form of H'")?;
    params.check_interior(x)?;
    let (n, c) = (params.n(), params.c());
    let (sum, _) = weighted_series(&params.shifted(1), x, policy, |k| {
        let kf = k as f64;
        ((kf + 1.0) / (n + c * kf)).ln()
    })?;
    Ok(n * ((1.0 + c * x).ln() - x.ln() + sum))
}

/// `H''(x) = -n / (x (1 + cx)) + n (n + c) sum_k p_{n+2c,k}(x) ln((k+2)(n+ck) / ((k+1)(n+ck+c)))`, `c >= 0`.
///
/// The log argument equals `1 + (n - c) / ((k + 1)(n + ck + c))`, which is
/// what gets evaluated.
pub fn shannon_second_series(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<f64> {
    require_nonnegative_c(params, "the series form of H''")?;
    params.check_interior(x)?;
    let (n, c) = (params.n(), params.c());
    let (sum, _) = weighted_series(&params.shifted(2), x, policy, |k| {
        let kf = k as f64;
        ((n - c) / ((kf + 1.0) * (n + c * kf + c))).ln_1p()
    })?;
    Ok(-n / (x * (1.0 + c * x)) + n * (n + c) * sum)
}

/// `H'` for any family: the series for `c >= 0`, the termwise derivative
/// `-sum_k p'_k ln p_k` of the finite sum for `c < 0`.
pub fn shannon_prime(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<f64> {
    match params.support() {
        SupportKind::Infinite => shannon_prime_series(params, x, policy),
        SupportKind::Finite(l) => {
            params.check_interior(x)?;
            let mut acc = NeumaierSum::default();
            for k in 0..=l {
                let w = weight_unchecked(params, k, x);
                if w.value > 0.0 {
                    acc.add(-weight_derivative_unchecked(params, k, x) * w.log_value);
                }
            }
            Ok(acc.total())
        }
    }
}

/// `H''` for any family: series for `c >= 0`, integral form for `c < 0`.
pub fn shannon_second(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<f64> {
    match params.support() {
        SupportKind::Infinite => shannon_second_series(params, x, policy),
        SupportKind::Finite(_) => shannon_second_integral(params, x),
    }
}

/// `H''` for `c < 0` from
/// `-n / (x(1+cx)) + c^2 l (l-1) int_0^1 mu(s) [(1+cx-cxs)^{l-2} + ((1+cx)s-cx)^{l-2}] ds`
/// with `mu(s) = (s - 1) / ln s`.
pub fn shannon_second_integral(params: &FamilyParams, x: f64) -> Result<f64> {
    shannon_second_integral_with(params, x, GaussOrder::N64)
}

pub fn shannon_second_integral_with(params: &FamilyParams, x: f64, order: GaussOrder) -> Result<f64> {
    let l = require_negative_c(params, "the integral form of H''")?;
    params.check_interior(x)?;
    let c = params.c();
    let y = -c * x;
    Ok(c * c * binomial_entropy_second(l, y, order))
}

/// `d^2/dy^2 H_{l,-1}(y)` on `(0, 1)`.
pub(crate) fn binomial_entropy_second(l: u64, y: f64, order: GaussOrder) -> f64 {
    let lf = l as f64;
    let base = -lf / (y * (1.0 - y));
    if l < 2 {
        return base;
    }
    let e = (l - 2) as i32;
    let integral = integrate_unit_graded(
        |s| mu(s) * ((1.0 - y + y * s).powi(e) + ((1.0 - y) * s + y).powi(e)),
        order,
    );
    base + lf * (lf - 1.0) * integral
}

/// `H_{l,-1}(y)` from the integral representation
/// `-l [y ln y + (1-y) ln(1-y)] + int_0^1 mu(s) q(s) ds`, where
/// `q(s) = ((1-y+ys)^l + ((1-y)s+y)^l - 1 - s^l) / (s-1)^2`.
///
/// The numerator has a double zero at `s = 1`, so `q` is a polynomial of
/// degree `l - 2`; near `s = 1` it is evaluated from its Taylor expansion
/// `sum_{j >= 2} C(l, j) (y^j + (1-y)^j - 1) (s-1)^{j-2}`.
pub fn shannon_integral_rep(l: u64, y: f64) -> Result<f64> {
    shannon_integral_rep_with(l, y, GaussOrder::N64)
}

pub fn shannon_integral_rep_with(l: u64, y: f64, order: GaussOrder) -> Result<f64> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::DomainError { x: y, lo: 0.0, hi: 1.0 });
    }
    let lf = l as f64;
    let base = -lf * (y * y.ln() + (1.0 - y) * (1.0 - y).ln());
    if l < 2 {
        return Ok(base);
    }
    let li = l as i32;
    let taylor: Vec<f64> = {
        let mut coeffs = Vec::with_capacity(l as usize - 1);
        let mut binom = lf * (lf - 1.0) / 2.0;
        for j in 2..=l {
            let ji = j as i32;
            coeffs.push(binom * (y.powi(ji) + (1.0 - y).powi(ji) - 1.0));
            binom = binom * (lf - j as f64) / (j as f64 + 1.0);
        }
        coeffs
    };
    let quotient = |s: f64| {
        let h = s - 1.0;
        if h.abs() >= 0.25 {
            let num = (1.0 - y + y * s).powi(li) + ((1.0 - y) * s + y).powi(li) - 1.0 - s.powi(li);
            num / (h * h)
        } else {
            taylor.iter().rev().fold(0.0, |acc, &a| acc * h + a)
        }
    };
    Ok(base + integrate_unit_graded(|s| mu(s) * quotient(s), order))
}

/// Lower bound `-n / (x (1 + cx))` for `H''`.
pub fn second_derivative_lower_bound(params: &FamilyParams, x: f64) -> f64 {
    -params.n() / (x * (1.0 + params.c() * x))
}

/// Upper bound for `H''`:
/// `-(n / (x(1+cx))) (c/n + (1 - c/n)(1+cx)^{-n/c})` for `c >= 0`
/// (with `e^{-nx}` in place of the power at `c = 0`), and
/// `-n ((1+cx)^l + (-cx)^l) / (x (1+cx))` for `c < 0`.
pub fn second_derivative_upper_bound(params: &FamilyParams, x: f64) -> f64 {
    let (n, c) = (params.n(), params.c());
    let base = n / (x * (1.0 + c * x));
    match params.support() {
        SupportKind::Finite(l) => {
            let li = l as i32;
            -base * ((1.0 + c * x).powi(li) + (-c * x).powi(li))
        }
        SupportKind::Infinite => {
            let decay = if c == 0.0 { (-n * x).exp() } else { (-(n / c) * (c * x).ln_1p()).exp() };
            -base * (c / n + (1.0 - c / n) * decay)
        }
    }
}

/// `Phi(x) = H(x) + n x ln x` for `c = 0` and
/// `Phi(x) = H(x) + (n/c)(c x ln x - (1+cx) ln(1+cx))` otherwise, which is
/// convex because `H'' > -n / (x(1+cx))`. For `c < 0` this needs `l >= 2`.
pub fn companion_convexity_value(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<f64> {
    if params.l() == Some(1) {
        return Err(Error::UnsupportedParams(
            "the companion function is only convex for l >= 2 when c < 0".into(),
        ));
    }
    params.check_interior(x)?;
    let h = shannon(params, x, policy)?.h;
    let (n, c) = (params.n(), params.c());
    if c == 0.0 {
        Ok(h + n * x * x.ln())
    } else {
        let opc = 1.0 + c * x;
        Ok(h + (n / c) * (c * x * x.ln() - opc * opc.ln()))
    }
}

/// Margins of
/// `ln(x/(1+cx)) <= sum_k p_{n+c,k}(x) ln((k+1)/(ck+n)) <= ln((x + 1/n)/(1+cx))`, `c >= 0`.
pub fn jensen_log_ratio_bounds(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<InequalityMargin> {
    require_nonnegative_c(params, "the log-ratio sandwich")?;
    params.check_interior(x)?;
    let (n, c) = (params.n(), params.c());
    let (middle, _) = weighted_series(&params.shifted(1), x, policy, |k| {
        let kf = k as f64;
        ((kf + 1.0) / (c * kf + n)).ln()
    })?;
    let opc = (c * x).ln_1p();
    let lower = x.ln() - opc;
    let upper = (x + 1.0 / n).ln() - opc;
    Ok(InequalityMargin {
        name: "log-ratio sandwich".into(),
        x,
        lower_gap: middle - lower,
        upper_gap: upper - middle,
    })
}

/// Margins of the binomial log-odds sandwich on `0 < x < 1/2`:
/// `ln(x/(1-x)) < sum_k C(n,k) x^k (1-x)^{n-k} ln((k+1)/(n+1-k))
///   < ln(x/(1-x) + (1 - (n+2) x^{n+1}) / ((n+1)(1-x)))`.
pub fn binomial_log_ratio_bounds(n: u64, x: f64) -> Result<InequalityMargin> {
    if !(x > 0.0 && x < 0.5) {
        return Err(Error::DomainError { x, lo: 0.0, hi: 0.5 });
    }
    let family = FamilyParams::binomial(n)?;
    let middle = binomial_log_ratio_middle(&family, n, x);
    let nf = n as f64;
    let odds = x / (1.0 - x);
    let lower = odds.ln();
    let upper = (odds + (1.0 - (nf + 2.0) * x.powi(n as i32 + 1)) / ((nf + 1.0) * (1.0 - x))).ln();
    Ok(InequalityMargin {
        name: "binomial log-odds sandwich".into(),
        x,
        lower_gap: middle - lower,
        upper_gap: upper - middle,
    })
}

fn binomial_log_ratio_middle(family: &FamilyParams, n: u64, x: f64) -> f64 {
    let nf = n as f64;
    let mut acc = NeumaierSum::default();
    for k in 0..=n {
        let kf = k as f64;
        acc.add(weight_unchecked(family, k, x).value * ((kf + 1.0) / (nf + 1.0 - kf)).ln());
    }
    acc.total()
}

/// `sum_k C(n,k) x^k (1-x)^{n-k} ln((k+1)/(n+1-k))` at any `x` in `[0, 1]`.
pub fn binomial_log_ratio_sum(n: u64, x: f64) -> Result<f64> {
    let family = FamilyParams::binomial(n)?;
    family.check_domain(x)?;
    Ok(binomial_log_ratio_middle(&family, n, x))
}

/// `|H(-1/(2c) - t) - H(-1/(2c) + t)|` for `c < 0`.
pub fn symmetry_check(params: &FamilyParams, t: f64, policy: &TruncationPolicy) -> Result<f64> {
    require_negative_c(params, "the reflection symmetry")?;
    let mid = -0.5 / params.c();
    if !(0.0..=mid).contains(&t) {
        return Err(Error::DomainError { x: t, lo: 0.0, hi: mid });
    }
    let hi = params.domain().hi;
    let left = (mid - t).clamp(0.0, hi);
    let right = (mid + t).clamp(0.0, hi);
    Ok((shannon(params, left, policy)?.h - shannon(params, right, policy)?.h).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::make_family;
    use crate::numerics::diff::central_diff;
    use std::f64::consts::LN_2;

    fn pol() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    fn h(c: f64, n: f64, x: f64) -> f64 {
        shannon(&make_family(c, n).unwrap(), x, &pol()).unwrap().h
    }

    #[test]
    fn point_mass_has_zero_entropy() {
        for (c, n) in [(-1.0, 3.0), (0.0, 1.0), (2.0, 5.0)] {
            assert_eq!(h(c, n, 0.0), 0.0);
        }
        assert_eq!(h(-1.0, 3.0, 1.0), 0.0);
    }

    #[test]
    fn two_point_uniform() {
        assert!((h(-1.0, 1.0, 0.5) - LN_2).abs() < 1e-15);
    }

    #[test]
    fn poisson_entropy_against_brute_force() {
        // H = sum_k e^{-1}/k! (1 + ln k!) at x = 1, n = 1
        let mut lnfact = 0.0f64;
        let mut oracle = 0.0;
        for k in 0..60u32 {
            if k > 0 {
                lnfact += f64::from(k).ln();
            }
            let p = (-1.0 - lnfact).exp();
            oracle += p * (1.0 + lnfact);
        }
        assert!((h(0.0, 1.0, 1.0) - oracle).abs() < 1e-14);
    }

    #[test]
    fn prime_series_matches_finite_differences() {
        for (c, n) in [(0.0, 1.0), (0.5, 2.0), (1.0, 1.5), (2.0, 4.0)] {
            let fam = make_family(c, n).unwrap();
            for &x in &[0.05, 0.3, 1.0, 4.0, 20.0] {
                let series = shannon_prime_series(&fam, x, &pol()).unwrap();
                let fd = central_diff(|t| shannon(&fam, t, &pol()).unwrap().h, x, 1).unwrap();
                assert!((series - fd.value).abs() <= 1e-7 * series.abs().max(1e-3), "c={c} x={x}");
            }
        }
    }

    #[test]
    fn prime_series_sign_and_blowup() {
        let fam = make_family(0.0, 1.0).unwrap();
        let mut prev = f64::INFINITY;
        for i in 0..=20 {
            let x = 0.01 * 1000f64.powf(f64::from(i) / 20.0);
            let d = shannon_prime_series(&fam, x, &pol()).unwrap();
            assert!(d > 0.0);
            assert!(d < prev);
            prev = d;
        }
        let tiny = shannon_prime_series(&fam, 1e-6, &pol()).unwrap();
        assert!((tiny / -(1e-6f64).ln() - 1.0).abs() < 0.05);
        let at_one = shannon_prime_series(&fam, 1.0, &pol()).unwrap();
        assert!(at_one > 0.0 && at_one <= 1.0);
    }

    #[test]
    fn second_series_matches_finite_differences() {
        for (c, n) in [(0.0, 1.0), (0.5, 2.0), (1.0, 3.0), (2.0, 2.5)] {
            let fam = make_family(c, n).unwrap();
            for &x in &[0.1, 0.5, 2.0, 7.0] {
                let series = shannon_second_series(&fam, x, &pol()).unwrap();
                let fd = central_diff(|t| shannon(&fam, t, &pol()).unwrap().h, x, 2).unwrap();
                assert!((series - fd.value).abs() <= 1e-5 * series.abs(), "c={c} x={x}: {series} vs {}", fd.value);
                assert!(series < 0.0);
                assert!(series > second_derivative_lower_bound(&fam, x));
                assert!(series < second_derivative_upper_bound(&fam, x));
            }
        }
    }

    #[test]
    fn series_forms_reject_negative_c() {
        let fam = make_family(-1.0, 3.0).unwrap();
        assert!(matches!(shannon_prime_series(&fam, 0.3, &pol()), Err(Error::UnsupportedParams(_))));
        assert!(matches!(shannon_second_series(&fam, 0.3, &pol()), Err(Error::UnsupportedParams(_))));
        let pos = make_family(1.0, 2.0).unwrap();
        assert!(matches!(shannon_second_integral(&pos, 0.3), Err(Error::UnsupportedParams(_))));
    }

    #[test]
    fn integral_second_derivative_single_trial() {
        // l = 1: H'' = -n / (x (1 + cx))
        let fam = make_family(-0.5, 0.5).unwrap();
        for &x in &[0.2, 1.0, 1.7] {
            let v = shannon_second_integral(&fam, x).unwrap();
            assert!((v - second_derivative_lower_bound(&fam, x)).abs() < 1e-12);
        }
    }

    #[test]
    fn integral_second_derivative_matches_finite_differences() {
        for l in 2..=8u64 {
            for &c in &[-1.0, -0.5] {
                let fam = make_family(c, -c * l as f64).unwrap();
                let hi = fam.domain().hi;
                for &frac in &[0.13, 0.5, 0.81] {
                    let x = frac * hi;
                    let v = shannon_second_integral(&fam, x).unwrap();
                    let fd = central_diff(|t| shannon(&fam, t, &pol()).unwrap().h, x, 2).unwrap();
                    assert!((v - fd.value).abs() <= 1e-6 * v.abs(), "l={l} c={c} x={x}");
                    assert!(v < second_derivative_upper_bound(&fam, x));
                    assert!(v > second_derivative_lower_bound(&fam, x));
                }
            }
        }
    }

    #[test]
    fn integral_quadrature_doubling() {
        for l in 1..=20u64 {
            for &y in &[0.05, 0.3, 0.5, 0.92] {
                let a = binomial_entropy_second(l, y, GaussOrder::N64);
                let b = binomial_entropy_second(l, y, GaussOrder::N128);
                assert!((a - b).abs() <= 1e-10, "l={l} y={y}");
                let a = shannon_integral_rep_with(l, y, GaussOrder::N64).unwrap();
                let b = shannon_integral_rep_with(l, y, GaussOrder::N128).unwrap();
                assert!((a - b).abs() <= 1e-10, "rep l={l} y={y}");
            }
        }
    }

    #[test]
    fn integral_representation_matches_direct_sum() {
        assert!((shannon_integral_rep(1, 0.5).unwrap() - LN_2).abs() < 1e-15);
        for l in 1..=6u64 {
            let fam = FamilyParams::binomial(l).unwrap();
            for i in 1..=9 {
                let y = f64::from(i) / 10.0;
                let rep = shannon_integral_rep(l, y).unwrap();
                let direct = shannon(&fam, y, &pol()).unwrap().h;
                assert!((rep - direct).abs() <= 1e-8, "l={l} y={y}");
                let mirrored = shannon_integral_rep(l, 1.0 - y).unwrap();
                assert!((rep - mirrored).abs() <= 1e-12);
            }
        }
        assert!(shannon_integral_rep(3, 0.0).is_err());
        assert!(shannon_integral_rep(0, 0.5).is_err());
    }

    #[test]
    fn companion_function() {
        let fam = make_family(-1.0, 1.0).unwrap();
        assert!(matches!(companion_convexity_value(&fam, 0.5, &pol()), Err(Error::UnsupportedParams(_))));
        for (c, n) in [(0.0, 1.0), (1.0, 2.0), (-1.0, 2.0), (-1.0, 4.0)] {
            let fam = make_family(c, n).unwrap();
            let hi = if c < 0.0 { 0.95 } else { 5.0 };
            for i in 1..40 {
                let x = 0.05 + (hi - 0.05) * f64::from(i) / 40.0;
                let d2 = central_diff(|t| companion_convexity_value(&fam, t, &pol()).unwrap(), x, 2).unwrap();
                assert!(d2.value >= -1e-8, "c={c} n={n} x={x}: {}", d2.value);
            }
        }
    }

    #[test]
    fn poisson_log_factorial_sandwich() {
        let fam = make_family(0.0, 1.0).unwrap();
        let m = jensen_log_ratio_bounds(&fam, 1.0, &pol()).unwrap();
        assert!(m.holds());
        // middle term is sum e^{-1}/k! ln(k+1), between 0 and ln 2
        let middle = m.lower_gap;
        assert!(middle > 0.0 && middle < LN_2);
        assert!((m.upper_gap - (LN_2 - middle)).abs() < 1e-15);
    }

    #[test]
    fn sandwich_gaps_shrink_for_large_x() {
        let fam = make_family(0.0, 1.0).unwrap();
        let far = jensen_log_ratio_bounds(&fam, 1000.0, &pol()).unwrap();
        let near = jensen_log_ratio_bounds(&fam, 10.0, &pol()).unwrap();
        assert!(far.lower_gap < near.lower_gap && far.upper_gap < near.upper_gap);
        assert!(far.holds());
    }

    #[test]
    fn binomial_log_odds_examples() {
        let m = binomial_log_ratio_bounds(1, 0.25).unwrap();
        let middle = m.lower_gap + (1.0f64 / 3.0).ln();
        assert!((middle + 0.5 * LN_2).abs() < 1e-15);
        for n in 1..=12 {
            assert!(binomial_log_ratio_sum(n, 0.5).unwrap().abs() < 1e-15);
        }
        assert!(binomial_log_ratio_bounds(3, 0.5).is_err());
    }

    #[test]
    fn reflection_symmetry() {
        let fam = make_family(-1.0, 3.0).unwrap();
        assert!(symmetry_check(&fam, 0.2, &pol()).unwrap() <= 1e-12);
        assert_eq!(symmetry_check(&fam, 0.0, &pol()).unwrap(), 0.0);
        assert_eq!(symmetry_check(&fam, 0.5, &pol()).unwrap(), 0.0);
        let other = make_family(-0.25, 1.5).unwrap();
        for &t in &[0.3, 1.1, 1.9] {
            assert!(symmetry_check(&other, t, &pol()).unwrap() <= 1e-12);
        }
    }
}
