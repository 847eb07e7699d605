//! Log-space special functions used by the weight evaluators.
//!
//! `stirlerr` and `bd0` are the two pieces of Loader's saddle-point
//! decomposition of Poisson and binomial-type probabilities. Writing a
//! weight as `exp(-stirlerr - bd0) / sqrt(2 pi k)` keeps the relative error
//! near machine precision even when `k` and the mean are in the thousands,
//! where a plain difference of `lgamma` values loses several digits.

use std::f64::consts::PI;

/// `ln(sqrt(2 pi))`.
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Natural log of the gamma function (musl implementation via `libm`).
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Result of [`log_binomial`]: either `log |C(alpha, k)|` with its sign, or
/// the exact zero that occurs for integer `0 <= alpha < k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogBinomial {
    Value { log_abs: f64, sign: i8 },
    Zero,
}

impl LogBinomial {
    /// The coefficient itself, as a float (may overflow to infinity).
    pub fn to_f64(self) -> f64 {
        match self {
            LogBinomial::Value { log_abs, sign } => f64::from(sign) * log_abs.exp(),
            LogBinomial::Zero => 0.0,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, LogBinomial::Zero)
    }
}

const DIRECT_PRODUCT_MAX_K: u64 = 32;

/// Generalized binomial coefficient `C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!`
/// in log space.
///
/// Small `k` and the `alpha <= k - 1` regime go through the signed product
/// directly; everything else uses log-gamma.
pub fn log_binomial(alpha: f64, k: u64) -> LogBinomial {
    if k == 0 {
        return LogBinomial::Value { log_abs: 0.0, sign: 1 };
    }
    if alpha >= 0.0 && alpha.fract() == 0.0 && alpha < k as f64 {
        return LogBinomial::Zero;
    }
    let kf = k as f64;
    if alpha > kf - 1.0 && k > DIRECT_PRODUCT_MAX_K {
        let log_abs = ln_gamma(alpha + 1.0) - ln_gamma(kf + 1.0) - ln_gamma(alpha - kf + 1.0);
        return LogBinomial::Value { log_abs, sign: 1 };
    }
    let mut log_abs = 0.0;
    let mut negative = false;
    for i in 0..k {
        let factor = alpha - i as f64;
        if factor == 0.0 {
            return LogBinomial::Zero;
        }
        if factor < 0.0 {
            negative = !negative;
        }
        log_abs += factor.abs().ln() - ((i + 1) as f64).ln();
    }
    LogBinomial::Value { log_abs, sign: if negative { -1 } else { 1 } }
}

/// Stirling-formula remainder `ln Gamma(x+1) - (x + 1/2) ln x + x - ln sqrt(2 pi)`.
pub fn stirlerr(x: f64) -> f64 {
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;

    if x <= 15.0 {
        return ln_gamma(x + 1.0) - (x + 0.5) * x.ln() + x - LN_SQRT_2PI;
    }
    let nn = x * x;
    if x > 500.0 {
        (S0 - S1 / nn) / x
    } else if x > 80.0 {
        (S0 - (S1 - S2 / nn) / nn) / x
    } else if x > 35.0 {
        (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / x
    } else {
        (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / x
    }
}

/// Deviance term `x ln(x / m) + m - x`, evaluated without cancellation when
/// `x` is close to `m`.
pub fn bd0(x: f64, m: f64) -> f64 {
    if (x - m).abs() < 0.1 * (x + m) {
        let mut v = (x - m) / (x + m);
        let mut s = (x - m) * v;
        if s.abs() < f64::MIN_POSITIVE {
            return s;
        }
        let mut ej = 2.0 * x * v;
        v *= v;
        for j in 1..1000 {
            ej *= v;
            let s1 = s + ej / f64::from(2 * j + 1);
            if s1 == s {
                return s1;
            }
            s = s1;
        }
        s
    } else {
        x * (x / m).ln() + m - x
    }
}

/// Log of the Poisson probability `e^{-lambda} lambda^k / k!`.
pub fn log_poisson(k: u64, lambda: f64) -> f64 {
    if lambda == 0.0 {
        return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    if k == 0 {
        return -lambda;
    }
    let kf = k as f64;
    -stirlerr(kf) - bd0(kf, lambda) - 0.5 * (2.0 * PI * kf).ln()
}

/// Log of the negative-binomial probability
/// `Gamma(size + k) / (Gamma(size) k!) * q^k * (1 - q)^size`
/// with real `size > 0` and success-complement `q` in `[0, 1)`.
///
/// `p = 1 - q` is passed separately so callers can supply it without
/// cancellation.
pub fn log_negative_binomial(k: u64, size: f64, p: f64, q: f64) -> f64 {
    if q == 0.0 {
        return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    if k == 0 {
        return size * (-q).ln_1p();
    }
    let kf = k as f64;
    let total = size + kf;
    let lc = stirlerr(total)
        - stirlerr(size)
        - stirlerr(kf)
        - bd0(size, total * p)
        - bd0(kf, total * q);
    let lf = (2.0 * PI).ln() + size.ln() + (kf / total).ln();
    (size / total).ln() + lc - 0.5 * lf
}

/// `(s - 1) / ln s` on `[0, 1]`, continued by its limits 0 at `s = 0` and 1 at
/// `s = 1`. Strictly increasing, with values in `(0, 1)` on the open interval.
pub fn mu(s: f64) -> f64 {
    if s <= 0.0 {
        0.0
    } else if s >= 1.0 {
        1.0
    } else {
        let h = s - 1.0;
        h / h.ln_1p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_binomial(a: u64, k: u64) -> f64 {
        let mut c = 1u128;
        for i in 0..k {
            c = c * u128::from(a - i) / u128::from(i + 1);
        }
        c as f64
    }

    #[test]
    fn log_binomial_integer_cases() {
        match log_binomial(5.0, 2) {
            LogBinomial::Value { log_abs, sign } => {
                assert!((log_abs - 10f64.ln()).abs() < 1e-15);
                assert_eq!(sign, 1);
            }
            LogBinomial::Zero => panic!("C(5,2) is not zero"),
        }
        assert_eq!(log_binomial(1.7, 0), LogBinomial::Value { log_abs: 0.0, sign: 1 });
        assert!(log_binomial(3.0, 5).is_zero());
    }

    #[test]
    fn log_binomial_matches_exact_integers() {
        for a in 0..=60u64 {
            for k in 0..=a {
                let exact = exact_binomial(a, k).ln();
                match log_binomial(a as f64, k) {
                    LogBinomial::Value { log_abs, sign } => {
                        assert_eq!(sign, 1);
                        assert!((log_abs - exact).abs() <= 1e-12, "C({a},{k})");
                    }
                    LogBinomial::Zero => panic!("C({a},{k}) flagged zero"),
                }
            }
        }
    }

    #[test]
    fn log_binomial_negative_alpha_sign() {
        // C(-1/2, 3) = (-1/2)(-3/2)(-5/2)/6 = -5/16
        let v = log_binomial(-0.5, 3).to_f64();
        assert!((v + 5.0 / 16.0).abs() < 1e-15);
        // C(-2, k) = (-1)^k (k + 1)
        for k in 0..40 {
            let v = log_binomial(-2.0, k).to_f64();
            let expected = if k % 2 == 0 { 1.0 } else { -1.0 } * (k + 1) as f64;
            assert!((v - expected).abs() <= 1e-12 * expected.abs());
        }
    }

    #[test]
    fn stirlerr_is_continuous_across_branches() {
        for &x in &[15.0, 35.0, 80.0, 500.0] {
            let below = stirlerr(x - 1e-9);
            let above = stirlerr(x + 1e-9);
            assert!((below - above).abs() < 1e-12, "jump at {x}");
        }
        // direct definition at a moderate point
        let x = 40.0_f64;
        let direct = ln_gamma(x + 1.0) - (x + 0.5) * x.ln() + x - LN_SQRT_2PI;
        assert!((stirlerr(x) - direct).abs() < 1e-13);
    }

    #[test]
    fn bd0_branches_agree() {
        for &(x, m) in &[(10.0f64, 10.5f64), (100.0, 101.0), (3.0, 3.2)] {
            let naive: f64 = x * (x / m).ln() + m - x;
            assert!((bd0(x, m) - naive).abs() < 1e-12);
        }
        assert_eq!(bd0(7.0, 7.0), 0.0);
    }

    #[test]
    fn poisson_log_weights() {
        let direct = |k: u64, l: f64| k as f64 * l.ln() - l - ln_gamma(k as f64 + 1.0);
        for &l in &[0.3, 1.0, 4.5, 30.0] {
            for k in 0..60 {
                assert!((log_poisson(k, l) - direct(k, l)).abs() < 1e-12, "k={k} l={l}");
            }
        }
        assert_eq!(log_poisson(0, 0.0), 0.0);
        assert_eq!(log_poisson(3, 0.0), f64::NEG_INFINITY);
    }

    #[test]
    fn negative_binomial_log_weights() {
        let direct = |k: u64, r: f64, q: f64| {
            ln_gamma(r + k as f64) - ln_gamma(r) - ln_gamma(k as f64 + 1.0)
                + k as f64 * q.ln()
                + r * (1.0 - q).ln()
        };
        for &(r, q) in &[(0.5, 0.3), (2.0, 0.5), (7.3, 0.9)] {
            for k in 0..80 {
                let got = log_negative_binomial(k, r, 1.0 - q, q);
                assert!((got - direct(k, r, q)).abs() < 1e-11, "k={k} r={r} q={q}");
            }
        }
    }

    #[test]
    fn mu_limits_and_range() {
        assert_eq!(mu(0.0), 0.0);
        assert_eq!(mu(1.0), 1.0);
        let near = mu(1.0 - 1e-9);
        assert!((near - (1.0 - 0.5e-9)).abs() < 1e-12);
        assert!((near - 1.0).abs() < 1e-8);
        let mut prev = 0.0;
        for i in 1..10_000 {
            let s = f64::from(i) / 10_000.0;
            let m = mu(s);
            assert!(m > 0.0 && m < 1.0);
            assert!(m > prev, "not increasing at {s}");
            prev = m;
        }
    }
}
