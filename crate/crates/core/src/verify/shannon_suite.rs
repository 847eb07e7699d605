use super::manifest::{
    BINOMIAL_L_MAX, CONCAVE_C, CONCAVE_N, LOG_ODDS_N_MAX, LOG_ODDS_POINTS, NEGATIVE_C_CASES, POISSON_MONOTONE_GRID,
    POISSON_MONOTONE_N, SHANNON_LOG_GRID,
};
use super::{check, strict, VerifyConfig};
use crate::error::Result;
use crate::family::make_family;
use crate::grid::{first_differences, interior_linspace, linspace, logspace, second_divided_differences};
use crate::numerics::quadrature::GaussOrder;
use crate::quadratic::fd_in_domain;
use crate::record::VerificationRecord;
use crate::shannon::{
    binomial_log_ratio_bounds, companion_convexity_value, jensen_log_ratio_bounds, second_derivative_lower_bound,
    second_derivative_upper_bound, shannon, shannon_integral_rep, shannon_prime, shannon_prime_series,
    shannon_second_integral, shannon_second_integral_with, shannon_second_series, symmetry_check,
};

const SUITE: &str = "shannon";

pub fn shannon_suite(cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    let mut out = Vec::new();
    for &c in CONCAVE_C {
        for &n in CONCAVE_N {
            out.extend(concave_family_checks(c, n, cfg));
        }
    }
    for l in 1..=BINOMIAL_L_MAX {
        out.extend(negative_c_checks(-1.0, l, cfg));
    }
    for &(c, l) in NEGATIVE_C_CASES {
        out.extend(negative_c_checks(c, l, cfg));
    }
    for &n in POISSON_MONOTONE_N {
        out.push(check(SUITE, format!("sign pattern of derivatives of H' c=0 n={n}"), |rec| {
            let f = make_family(0.0, n)?;
            let (lo, hi, steps) = POISSON_MONOTONE_GRID;
            let h2 = |x: f64| shannon_second_series(&f, x, &cfg.policy);
            for x in logspace(lo, hi, steps)? {
                let d = [
                    shannon_prime_series(&f, x, &cfg.policy)?,
                    h2(x)?,
                    fd_in_domain(&f, h2, x, 1)?,
                    fd_in_domain(&f, h2, x, 2)?,
                    fd_in_domain(&f, h2, x, 3)?,
                ];
                for (m, v) in d.into_iter().enumerate() {
                    let signed = if m % 2 == 0 { v } else { -v };
                    rec.observe(strict(signed), || format!("x={x} m={m} value={v:e}"));
                }
            }
            Ok(())
        }));
    }
    out.push(check(SUITE, "log-ratio sandwich c=0 n=1", |rec| {
        let f = make_family(0.0, 1.0)?;
        for x in logspace(1e-3, 1e3, 60)? {
            let m = jensen_log_ratio_bounds(&f, x, &cfg.policy)?;
            rec.observe(m.worst(), || format!("x={x}"));
        }
        Ok(())
    }));
    for n in 1..=LOG_ODDS_N_MAX {
        out.push(check(SUITE, format!("binomial log-odds sandwich n={n}"), |rec| {
            for &x in LOG_ODDS_POINTS {
                let m = binomial_log_ratio_bounds(n, x)?;
                rec.observe(strict(m.worst()), || format!("x={x}"));
            }
            Ok(())
        }));
    }
    out
}

fn concave_family_checks(c: f64, n: f64, cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    let label = format!("c={c} n={n}");
    let pol = &cfg.policy;
    let (lo, hi, steps) = SHANNON_LOG_GRID;
    let grid = || logspace(lo, hi, steps);
    let mut out = Vec::new();
    out.push(check(SUITE, format!("H'' < 0 within bounds {label}"), |rec| {
        let f = make_family(c, n)?;
        for x in grid()? {
            let h2 = shannon_second_series(&f, x, pol)?;
            let lower = second_derivative_lower_bound(&f, x);
            let upper = second_derivative_upper_bound(&f, x);
            let scale = lower.abs();
            rec.observe(strict(-h2), || format!("x={x} H''={h2:e}"));
            rec.observe(strict((h2 - lower) / scale), || format!("x={x} lower gap"));
            rec.observe(strict((upper - h2) / scale), || format!("x={x} upper gap"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("H' > 0 {label}"), |rec| {
        let f = make_family(c, n)?;
        for x in grid()? {
            let h1 = shannon_prime(&f, x, pol)?;
            rec.observe(strict(h1), || format!("x={x} H'={h1:e}"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("discrete concavity of H {label}"), |rec| {
        let f = make_family(c, n)?;
        let xs = grid()?;
        let hs = values(&xs, |x| Ok(shannon(&f, x, pol)?.h))?;
        for (x, d2) in second_divided_differences(&xs, &hs) {
            rec.observe(1e-8 - d2, || format!("x={x} d2={d2:e}"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("log-ratio sandwich {label}"), |rec| {
        let f = make_family(c, n)?;
        for x in logspace(1e-2, 1e2, 30)? {
            let m = jensen_log_ratio_bounds(&f, x, pol)?;
            rec.observe(m.worst(), || format!("x={x}"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("companion function convex {label}"), |rec| {
        let f = make_family(c, n)?;
        let xs = logspace(1e-2, 1e2, 80)?;
        let phi = values(&xs, |x| companion_convexity_value(&f, x, pol))?;
        for (x, d2) in second_divided_differences(&xs, &phi) {
            rec.observe(d2 + 1e-8, || format!("x={x} d2={d2:e}"));
        }
        Ok(())
    }));
    out
}

fn negative_c_checks(c: f64, l: u64, cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    let n = -c * l as f64;
    let label = format!("c={c} l={l}");
    let pol = &cfg.policy;
    let mut out = Vec::new();
    let family = || make_family(c, n);
    let end = -1.0 / c;
    let mid = 0.5 * end;
    out.push(check(SUITE, format!("symmetry about the midpoint {label}"), |rec| {
        let f = family()?;
        for t in linspace(0.0, mid, 11)? {
            let gap = symmetry_check(&f, t, pol)?;
            rec.observe(1e-12 - gap, || format!("t={t} gap={gap:e}"));
        }
        Ok(())
    }));
    out.push(check(SUITE, format!("discrete concavity and turning point of H {label}"), |rec| {
        let f = family()?;
        let xs = linspace(0.0, end, 201)?;
        let hs = values(&xs, |x| Ok(shannon(&f, x, pol)?.h))?;
        for (x, d2) in second_divided_differences(&xs, &hs) {
            rec.observe(1e-8 - d2, || format!("x={x} d2={d2:e}"));
        }
        for (i, (x, d)) in first_differences(&xs, &hs).into_iter().enumerate() {
            if xs[i + 1] <= mid {
                rec.observe(d + 1e-10, || format!("rising part x={x} diff={d:e}"));
            } else if x >= mid {
                rec.observe(1e-10 - d, || format!("falling part x={x} diff={d:e}"));
            }
        }
        Ok(())
    }));
    if l >= 2 {
        out.push(check(SUITE, format!("integral H'' against finite differences {label}"), |rec| {
            let f = family()?;
            for x in interior_linspace(0.0, end, 9)? {
                let h2 = shannon_second_integral(&f, x)?;
                let fd = fd_in_domain(&f, |t| Ok(shannon(&f, t, pol)?.h), x, 2)?;
                rec.observe(1e-6 - (h2 - fd).abs() / h2.abs(), || format!("x={x} H''={h2:e} fd={fd:e}"));
            }
            Ok(())
        }));
        out.push(check(SUITE, format!("H'' bounds {label}"), |rec| {
            let f = family()?;
            for x in interior_linspace(0.0, end, 19)? {
                let h2 = shannon_second_integral(&f, x)?;
                let lower = second_derivative_lower_bound(&f, x);
                let upper = second_derivative_upper_bound(&f, x);
                let scale = lower.abs();
                rec.observe(strict((h2 - lower) / scale), || format!("x={x} lower gap"));
                rec.observe((upper - h2) / scale + 1e-12, || format!("x={x} upper gap"));
            }
            Ok(())
        }));
        out.push(check(SUITE, format!("quadrature doubling {label}"), |rec| {
            let f = family()?;
            for x in interior_linspace(0.0, end, 9)? {
                let a = shannon_second_integral_with(&f, x, GaussOrder::N64)?;
                let b = shannon_second_integral_with(&f, x, GaussOrder::N128)?;
                rec.observe(1e-10 - (a - b).abs() / b.abs().max(1.0), || format!("x={x}"));
            }
            Ok(())
        }));
    }
    if c == -1.0 {
        out.push(check(SUITE, format!("integral representation of H {label}"), |rec| {
            let f = family()?;
            for y in interior_linspace(0.0, 1.0, 9)? {
                let rep = shannon_integral_rep(l, y)?;
                let h = shannon(&f, y, pol)?.h;
                rec.observe(1e-12 - (rep - h).abs(), || format!("y={y} rep={rep} H={h}"));
            }
            Ok(())
        }));
    }
    out
}

fn values(xs: &[f64], f: impl Fn(f64) -> Result<f64>) -> Result<Vec<f64>> {
    xs.iter().map(|&x| f(x)).collect()
}

