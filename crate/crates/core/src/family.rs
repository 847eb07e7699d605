//! The weights `p_{n,k}^{[c]}(x)` of the binomial (`c < 0`), Poisson
//! (`c = 0`) and negative-binomial (`c > 0`) family, their derivative
//! recurrence, and certified truncation of the infinite support.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::special::{log_binomial, log_negative_binomial, log_poisson};

/// Tolerance for recognising `n / (-c)` as an integer.
pub const L_INTEGER_TOLERANCE: f64 = 1e-9;

/// Finite support `{0, ..., l}` for `c < 0`, all of `N_0` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SupportKind {
    Finite(u64),
    Infinite,
}

/// `[0, -1/c]` for `c < 0` and `[0, +inf)` for `c >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainInterval {
    pub lo: f64,
    pub hi: f64,
}

impl DomainInterval {
    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub fn contains_interior(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.hi.is_finite()
    }
}

/// A validated `(c, n)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    c: f64,
    n: f64,
    support: SupportKind,
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.support {
            SupportKind::Finite(l) => write!(f, "c={} n={} (l={l})", self.c, self.n),
            SupportKind::Infinite => write!(f, "c={} n={}", self.c, self.n),
        }
    }
}

/// Validate `(c, n)`.
///
/// For `c < 0` the order must be `n = -c l` with a positive integer `l`; the
/// stored `n` is snapped to exactly `-c * l`.
pub fn make_family(c: f64, n: f64) -> Result<FamilyParams> {
    FamilyParams::new(c, n)
}

impl FamilyParams {
    pub fn new(c: f64, n: f64) -> Result<Self> {
        if !c.is_finite() || !n.is_finite() || n <= 0.0 {
            return Err(Error::InvalidOrder { c, n });
        }
        if c >= 0.0 {
            if n <= c {
                return Err(Error::InvalidOrder { c, n });
            }
            return Ok(FamilyParams { c, n, support: SupportKind::Infinite });
        }
        let ratio = n / -c;
        let l = ratio.round();
        if l < 1.0 || (ratio - l).abs() > L_INTEGER_TOLERANCE {
            return Err(Error::NonIntegerL { c, n, ratio });
        }
        Ok(Self::binomial_type(c, l as u64))
    }

    /// `c < 0` family with `n = -c l`. `l = 0` is the point mass at `k = 0`,
    /// which only arises as a shifted family.
    pub(crate) fn binomial_type(c: f64, l: u64) -> Self {
        debug_assert!(c < 0.0);
        FamilyParams { c, n: -c * l as f64, support: SupportKind::Finite(l) }
    }

    /// The binomial distribution `C(l, k) x^k (1-x)^{l-k}` (the `c = -1` case).
    pub fn binomial(l: u64) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidOrder { c: -1.0, n: 0.0 });
        }
        Ok(Self::binomial_type(-1.0, l))
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    /// `l = n / (-c)` when `c < 0`.
    pub fn l(&self) -> Option<u64> {
        match self.support {
            SupportKind::Finite(l) => Some(l),
            SupportKind::Infinite => None,
        }
    }

    pub fn support(&self) -> SupportKind {
        self.support
    }

    pub fn domain(&self) -> DomainInterval {
        let hi = if self.c < 0.0 { -1.0 / self.c } else { f64::INFINITY };
        DomainInterval { lo: 0.0, hi }
    }

    /// The family `(c, n + j c)`. Always valid for `j >= 0`: `n + j c > c`
    /// when `c >= 0`, and `l` only grows when `c < 0`. For negative `j` with
    /// `c < 0`, `l + j` must stay nonnegative.
    pub fn shifted(&self, j: i64) -> Self {
        match self.support {
            SupportKind::Finite(l) => {
                let l = l as i64 + j;
                assert!(l >= 0, "shifted family would have negative l");
                Self::binomial_type(self.c, l as u64)
            }
            SupportKind::Infinite => {
                FamilyParams { c: self.c, n: self.n + j as f64 * self.c, support: SupportKind::Infinite }
            }
        }
    }

    /// The family evaluated by `p_{n+c,k}` in the derivative recurrence.
    pub fn raised(&self) -> Self {
        match self.support {
            SupportKind::Finite(_) => self.shifted(-1),
            SupportKind::Infinite => self.shifted(1),
        }
    }

    pub(crate) fn check_domain(&self, x: f64) -> Result<()> {
        let d = self.domain();
        if x.is_nan() || !d.contains(x) {
            return Err(Error::DomainError { x, lo: d.lo, hi: d.hi });
        }
        Ok(())
    }

    pub(crate) fn check_interior(&self, x: f64) -> Result<()> {
        let d = self.domain();
        if x.is_nan() || !d.contains_interior(x) {
            return Err(Error::DomainError { x, lo: d.lo, hi: d.hi });
        }
        Ok(())
    }

    /// `1 + c x`, clamped at zero against rounding at the right endpoint.
    pub(crate) fn one_plus_cx(&self, x: f64) -> f64 {
        (1.0 + self.c * x).max(0.0)
    }

    /// Ratio `p_{k+1} / p_k` for the infinite-support families.
    pub(crate) fn term_ratio(&self, k: u64, x: f64) -> f64 {
        let kf = k as f64;
        if self.c == 0.0 {
            self.n * x / (kf + 1.0)
        } else {
            let cx = self.c * x;
            ((self.n / self.c + kf) / (kf + 1.0)) * (cx / (1.0 + cx))
        }
    }

    /// `sup_{j >= k} p_{j+1} / p_j`.
    fn ratio_bound_from(&self, k: u64, x: f64) -> f64 {
        let rk = self.term_ratio(k, x);
        if self.c == 0.0 {
            rk
        } else {
            // (a + j) / (j + 1) is monotone in j and tends to 1.
            let cx = self.c * x;
            rk.max(cx / (1.0 + cx))
        }
    }
}

/// One weight, both as a value and as its logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightEval {
    pub k: u64,
    pub value: f64,
    /// `-inf` when the weight is exactly zero.
    pub log_value: f64,
}

impl WeightEval {
    fn zero(k: u64) -> Self {
        WeightEval { k, value: 0.0, log_value: f64::NEG_INFINITY }
    }

    fn from_log(k: u64, log_value: f64) -> Self {
        WeightEval { k, value: log_value.exp(), log_value }
    }

    /// `-p log p` with `0 log 0 = 0`.
    pub fn entropy_term(&self) -> f64 {
        if self.value > 0.0 {
            -self.value * self.log_value
        } else {
            0.0
        }
    }
}

/// Largest `l` for which binomial weights are formed by direct products;
/// beyond this `C(l, k)` may overflow a double.
const DIRECT_BINOMIAL_MAX_L: u64 = 1000;

fn binomial_coefficient_f64(l: u64, k: u64) -> f64 {
    let k = k.min(l - k);
    let mut c = 1.0;
    for i in 0..k {
        c = c * (l - i) as f64 / (i + 1) as f64;
    }
    c
}

/// `p_{n,k}^{[c]}(x)`.
pub fn weight(params: &FamilyParams, k: u64, x: f64) -> Result<WeightEval> {
    params.check_domain(x)?;
    Ok(weight_unchecked(params, k, x))
}

pub(crate) fn weight_unchecked(params: &FamilyParams, k: u64, x: f64) -> WeightEval {
    match params.support {
        SupportKind::Finite(l) => binomial_weight(l, k, -params.c * x, params.one_plus_cx(x)),
        SupportKind::Infinite if params.c == 0.0 => {
            if x == 0.0 {
                return if k == 0 { WeightEval { k, value: 1.0, log_value: 0.0 } } else { WeightEval::zero(k) };
            }
            WeightEval::from_log(k, log_poisson(k, params.n * x))
        }
        SupportKind::Infinite => {
            if x == 0.0 {
                return if k == 0 { WeightEval { k, value: 1.0, log_value: 0.0 } } else { WeightEval::zero(k) };
            }
            let cx = params.c * x;
            let q = cx / (1.0 + cx);
            let p = 1.0 / (1.0 + cx);
            WeightEval::from_log(k, log_negative_binomial(k, params.n / params.c, p, q))
        }
    }
}

/// `C(l, k) y^k q^{l-k}` with `q = 1 - y` supplied by the caller.
fn binomial_weight(l: u64, k: u64, y: f64, q: f64) -> WeightEval {
    if k > l {
        return WeightEval::zero(k);
    }
    if (y == 0.0 && k > 0) || (q == 0.0 && k < l) {
        return WeightEval::zero(k);
    }
    let exponent_y = k as i32;
    let exponent_q = (l - k) as i32;
    if l <= DIRECT_BINOMIAL_MAX_L {
        let value = binomial_coefficient_f64(l, k) * y.powi(exponent_y) * q.powi(exponent_q);
        if value.is_normal() {
            return WeightEval { k, value, log_value: value.ln() };
        }
    }
    let log_c = match log_binomial(l as f64, k) {
        crate::numerics::LogBinomial::Value { log_abs, .. } => log_abs,
        crate::numerics::LogBinomial::Zero => return WeightEval::zero(k),
    };
    let ly = if k == 0 { 0.0 } else { k as f64 * y.ln() };
    let lq = if k == l { 0.0 } else { (l - k) as f64 * q.ln() };
    WeightEval::from_log(k, log_c + ly + lq)
}

/// `d/dx p_{n,k}(x) = n (p_{n+c,k-1}(x) - p_{n+c,k}(x))`, with `p_{., -1} = 0`.
pub fn weight_derivative(params: &FamilyParams, k: u64, x: f64) -> Result<f64> {
    params.check_interior(x)?;
    Ok(weight_derivative_unchecked(params, k, x))
}

pub(crate) fn weight_derivative_unchecked(params: &FamilyParams, k: u64, x: f64) -> f64 {
    let raised = params.raised();
    let left = if k == 0 { 0.0 } else { weight_unchecked(&raised, k - 1, x).value };
    let right = weight_unchecked(&raised, k, x).value;
    params.n * (left - right)
}

/// Controls truncation of infinite series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    epsilon: f64,
    max_terms: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { epsilon: 1e-15, max_terms: 2_000_000 }
    }
}

impl TruncationPolicy {
    pub fn new(epsilon: f64, max_terms: usize) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidArgument(format!("epsilon must lie in (0, 1), got {epsilon}")));
        }
        if max_terms < 8 {
            return Err(Error::InvalidArgument(format!("max_terms must be at least 8, got {max_terms}")));
        }
        Ok(TruncationPolicy { epsilon, max_terms })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

/// Where a series was cut and what that costs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    /// Last included index; the sums run over `k = 0..=k_max`.
    pub k_max: u64,
    /// Certified bound on `sum_{k > k_max} p_k`.
    pub tail_bound: f64,
    /// Bound `r*` on every term ratio past `k_max` (0 for finite support).
    pub ratio_bound: f64,
    /// `p_{k_max}`.
    pub last_weight: f64,
}

impl Truncation {
    /// Certified bound on `sum_{k > K} p_k^2`.
    pub fn square_tail_bound(&self) -> f64 {
        let r2 = self.ratio_bound * self.ratio_bound;
        self.last_weight * self.last_weight * r2 / (1.0 - r2)
    }

    /// Bound on `sum_{k > K} -p_k ln p_k`.
    ///
    /// With `p_j <= p_K r^{j-K}` and `-p ln p` increasing below `1/e`, the
    /// tail is at most `p_K sum_i r^i (L + i lambda)` where `L = -ln p_K` and
    /// `lambda = -ln r`; that sum is `tail (L + lambda / (1 - r))`.
    pub fn entropy_tail_bound(&self) -> f64 {
        if self.tail_bound == 0.0 {
            return 0.0;
        }
        let r = self.ratio_bound;
        let big_l = -self.last_weight.ln();
        let lambda = -r.ln();
        let bound = self.tail_bound * (big_l + lambda / (1.0 - r));
        if self.last_weight <= (-1.0f64).exp() {
            bound
        } else {
            // Outside the monotone regime of -p ln p; fall back to the
            // crude per-term maximum 1/e.
            bound.max(self.tail_bound / self.last_weight * (-1.0f64).exp())
        }
    }
}

/// Certified truncation index for the series `sum_k p_{n,k}(x)`.
///
/// For finite support this is `(l, 0)`. Otherwise it is the first index past
/// the mode at which the geometric tail bound `p_K r* / (1 - r*)` drops below
/// `policy.epsilon`.
pub fn truncation_index(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<Truncation> {
    params.check_domain(x)?;
    if let SupportKind::Finite(l) = params.support {
        let last_weight = weight_unchecked(params, l, x).value;
        return Ok(Truncation { k_max: l, tail_bound: 0.0, ratio_bound: 0.0, last_weight });
    }
    if x == 0.0 {
        return Ok(Truncation { k_max: 0, tail_bound: 0.0, ratio_bound: 0.0, last_weight: 1.0 });
    }
    let mut best = f64::INFINITY;
    for k in 0..policy.max_terms as u64 {
        let r_k = params.term_ratio(k, x);
        if r_k >= 1.0 {
            continue;
        }
        let r_star = params.ratio_bound_from(k, x);
        if r_star >= 1.0 {
            continue;
        }
        let p_k = weight_unchecked(params, k, x).value;
        let bound = p_k * r_star / (1.0 - r_star);
        best = best.min(bound);
        if bound <= policy.epsilon {
            return Ok(Truncation { k_max: k, tail_bound: bound, ratio_bound: r_star, last_weight: p_k });
        }
    }
    Err(Error::CapExceeded { max_terms: policy.max_terms, achieved_bound: best })
}

/// Truncation valid simultaneously for several related families: the largest
/// cut and the summed tail.
pub(crate) fn joint_truncation(
    families: &[FamilyParams],
    x: f64,
    policy: &TruncationPolicy,
) -> Result<Truncation> {
    let mut joint: Option<Truncation> = None;
    for fam in families {
        let t = truncation_index(fam, x, policy)?;
        joint = Some(match joint {
            None => t,
            Some(j) if t.k_max > j.k_max => Truncation { tail_bound: t.tail_bound + j.tail_bound, ..t },
            Some(j) => Truncation { tail_bound: t.tail_bound + j.tail_bound, ..j },
        });
    }
    joint.ok_or_else(|| Error::InvalidArgument("no families given".into()))
}

/// `sum_{k <= K} p_{n,k}(x)`; within `tail_bound` of 1 by construction.
pub fn mass_check(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<(f64, Truncation)> {
    let t = truncation_index(params, x, policy)?;
    let mut acc = NeumaierSum::default();
    for k in 0..=t.k_max {
        acc.add(weight_unchecked(params, k, x).value);
    }
    Ok((acc.total(), t))
}

/// Compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    #[test]
    fn make_family_examples() {
        let f = make_family(-1.0, 3.0).unwrap();
        assert_eq!(f.l(), Some(3));
        assert_eq!(f.support(), SupportKind::Finite(3));
        let p = make_family(0.0, 1.0).unwrap();
        assert_eq!(p.support(), SupportKind::Infinite);
        assert!(matches!(make_family(-1.0, 2.5), Err(Error::NonIntegerL { .. })));
    }

    #[test]
    fn make_family_rejects_bad_orders() {
        assert!(matches!(make_family(0.0, 0.0), Err(Error::InvalidOrder { .. })));
        assert!(matches!(make_family(1.0, 1.0), Err(Error::InvalidOrder { .. })));
        assert!(matches!(make_family(2.0, 1.5), Err(Error::InvalidOrder { .. })));
        assert!(matches!(make_family(-1.0, -3.0), Err(Error::InvalidOrder { .. })));
        assert!(matches!(make_family(-1.0, 0.4), Err(Error::NonIntegerL { .. })));
    }

    #[test]
    fn make_family_snaps_round_tripped_l() {
        let c = -0.3;
        let n = 0.3 * 7.0 * (1.0 / 0.3) * 0.3;
        let f = make_family(c, n).unwrap();
        assert_eq!(f.l(), Some(7));
        assert_eq!(f.n(), -c * 7.0);
    }

    #[test]
    fn domain_interval() {
        let d = make_family(-0.5, 1.0).unwrap().domain();
        assert_eq!((d.lo, d.hi), (0.0, 2.0));
        assert!(!make_family(1.0, 2.0).unwrap().domain().is_bounded());
    }

    #[test]
    fn weight_examples() {
        let poisson = make_family(0.0, 1.0).unwrap();
        assert_eq!(weight(&poisson, 0, 0.0).unwrap().value, 1.0);
        let bin = make_family(-1.0, 2.0).unwrap();
        assert!((weight(&bin, 1, 0.5).unwrap().value - 0.5).abs() < 1e-16);
        let nb = make_family(1.0, 2.0).unwrap();
        assert!((weight(&nb, 0, 1.0).unwrap().value - 0.25).abs() < 1e-16);
    }

    #[test]
    fn weight_domain_errors() {
        let bin = make_family(-1.0, 2.0).unwrap();
        assert!(matches!(weight(&bin, 0, 1.5), Err(Error::DomainError { .. })));
        assert!(matches!(weight(&bin, 0, -0.1), Err(Error::DomainError { .. })));
        assert!(weight(&bin, 0, 1.0).is_ok());
        assert_eq!(weight(&bin, 3, 0.4).unwrap().value, 0.0);
    }

    #[test]
    fn weight_at_origin() {
        for (c, n) in [(-1.0, 4.0), (0.0, 2.0), (1.5, 3.0)] {
            let f = make_family(c, n).unwrap();
            assert_eq!(weight(&f, 0, 0.0).unwrap().value, 1.0);
            for k in 1..6 {
                assert_eq!(weight(&f, k, 0.0).unwrap().value, 0.0);
            }
        }
    }

    #[test]
    fn log_value_consistent() {
        let f = make_family(0.5, 3.0).unwrap();
        for k in 0..200 {
            let w = weight(&f, k, 2.0).unwrap();
            if w.value > 0.0 {
                assert!((w.value - w.log_value.exp()).abs() <= 4.0 * f64::EPSILON * w.value);
            }
        }
        // deep underflow keeps a finite log
        let w = weight(&make_family(0.0, 1.0).unwrap(), 400, 1.0).unwrap();
        assert_eq!(w.value, 0.0);
        assert!(w.log_value.is_finite() && w.log_value < -700.0);
    }

    #[test]
    fn derivative_examples() {
        let poisson = make_family(0.0, 1.0).unwrap();
        for &x in &[0.1, 1.0, 3.7] {
            let d = weight_derivative(&poisson, 0, x).unwrap();
            assert!((d + (-x).exp()).abs() < 1e-15);
        }
        let edge = make_family(-1.0, 1.0).unwrap();
        assert!((weight_derivative(&edge, 1, 0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!(weight_derivative(&edge, 1, 0.0).is_err());
        assert!(weight_derivative(&edge, 1, 1.0).is_err());
    }

    #[test]
    fn truncation_finite_support() {
        let t = truncation_index(&make_family(-1.0, 5.0).unwrap(), 0.3, &pol()).unwrap();
        assert_eq!((t.k_max, t.tail_bound), (5, 0.0));
    }

    #[test]
    fn truncation_poisson_bound_is_certified() {
        let policy = TruncationPolicy::new(1e-12, 1000).unwrap();
        let f = make_family(0.0, 1.0).unwrap();
        let t = truncation_index(&f, 1.0, &policy).unwrap();
        assert!(t.tail_bound <= 1e-12);
        // exact tail e^{-1} sum_{k > K} 1/k!, summed over 200 terms
        let mut term = (-1.0f64).exp();
        let mut tail = 0.0;
        for k in 1..=200u64 {
            term /= k as f64;
            if k > t.k_max {
                tail += term;
            }
        }
        assert!(tail <= t.tail_bound, "tail {tail} > bound {}", t.tail_bound);
        assert!(tail > 0.0);
    }

    #[test]
    fn truncation_cap() {
        let policy = TruncationPolicy::new(1e-15, 8).unwrap();
        let f = make_family(1.0, 2.0).unwrap();
        assert!(matches!(truncation_index(&f, 1e4, &policy), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn policy_validation() {
        assert!(TruncationPolicy::new(0.0, 100).is_err());
        assert!(TruncationPolicy::new(1.0, 100).is_err());
        assert!(TruncationPolicy::new(1e-10, 7).is_err());
    }

    #[test]
    fn mass_examples() {
        let (m, _) = mass_check(&make_family(-1.0, 4.0).unwrap(), 0.7, &pol()).unwrap();
        assert!((m - 1.0).abs() < 1e-15);
        let policy = TruncationPolicy::new(1e-12, 10_000).unwrap();
        let (m, t) = mass_check(&make_family(0.0, 1.0).unwrap(), 2.0, &policy).unwrap();
        assert!((m - 1.0).abs() <= t.tail_bound + 1e-15);
        let (m, _) = mass_check(&make_family(1.0, 2.0).unwrap(), 0.0, &pol()).unwrap();
        assert_eq!(m, 1.0);
    }

    #[test]
    fn small_shape_negative_binomial_ratio_bound() {
        // n / c < 1: ratios increase towards cx / (1 + cx)
        let f = make_family(2.0, 2.5).unwrap();
        let policy = TruncationPolicy::new(1e-13, 100_000).unwrap();
        let (m, t) = mass_check(&f, 3.0, &policy).unwrap();
        assert!((m - 1.0).abs() <= t.tail_bound + 1e-12);
        for j in t.k_max..t.k_max + 500 {
            assert!(f.term_ratio(j, 3.0) <= t.ratio_bound + 1e-15);
        }
    }
}
