use super::manifest::{
    CONVEX_NEGATIVE, CONVEX_STEPS, MONOTONE_CASES, MONOTONE_GRID, MONOTONE_ORDER, PROBE_C, RESIDUAL_CASES,
    RESIDUAL_POINTS, RESIDUAL_TOLERANCE,
};
use super::{check, VerifyConfig};
use crate::error::Result;
use crate::family::{make_family, FamilyParams, TruncationPolicy};
use crate::grid::{first_differences, interior_linspace, linspace, logspace, second_divided_differences};
use crate::quadratic::{
    complete_monotonicity_scan, confluent_heun_residual, convexity_scan_s, derivative_tower, fd_in_domain,
    heun_residual, log_convexity_probe, ode_residual, riccati_residual, s_prime, s_value,
    tsallis_ode_residual, unimodality_scan_s, DerivativeSource, Residual,
};
use crate::record::VerificationRecord;

const SUITE: &str = "quadratic";

type ResidualFn = fn(&FamilyParams, f64, DerivativeSource, &TruncationPolicy) -> Result<Residual>;

pub fn quadratic_suite(cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    let mut out = Vec::new();
    let pol = &cfg.policy;
    for &(c, n, lo, hi) in RESIDUAL_CASES {
        let label = format!("c={c} n={n}");
        let mut equations: Vec<(&str, ResidualFn)> = vec![
            ("second-order equation", ode_residual),
            ("Riccati form", riccati_residual),
            ("Tsallis form", tsallis_ode_residual),
        ];
        if c != 0.0 {
            equations.push(("Heun form", heun_residual));
        } else {
            equations.push(("confluent Heun form", |f, x, src, pol| confluent_heun_residual(f.n(), x, src, pol)));
        }
        for (name, eq) in equations {
            out.push(check(SUITE, format!("{name} residual {label}"), |rec| {
                let f = make_family(c, n)?;
                for x in residual_grid(&f, lo, hi)? {
                    let r = eq(&f, x, DerivativeSource::FiniteDifference, pol)?;
                    let rel = r.relative();
                    rec.observe(RESIDUAL_TOLERANCE - rel, || format!("x={x} relative={rel:e}"));
                }
                Ok(())
            }));
        }
        out.push(check(SUITE, format!("S' against finite differences {label}"), |rec| {
            let f = make_family(c, n)?;
            for x in residual_grid(&f, lo, hi)? {
                let d = cfg.derivative_sign() * s_prime(&f, x, pol)?;
                let fd = fd_in_domain(&f, |t| Ok(s_value(&f, t, pol)?.s), x, 1)?;
                let rel = (d - fd).abs() / d.abs().max(fd.abs());
                rec.observe(1e-6 - rel, || format!("x={x} S'={d:e} fd={fd:e}"));
            }
            Ok(())
        }));
        out.push(check(SUITE, format!("tower against finite differences {label}"), |rec| {
            let f = make_family(c, n)?;
            for x in residual_grid(&f, lo, hi)? {
                let t = derivative_tower(&f, x, 3, pol)?;
                let d2 = fd_in_domain(&f, |u| Ok(s_value(&f, u, pol)?.s), x, 2)?;
                let d3 = fd_in_domain(&f, |u| s_prime(&f, u, pol), x, 2)?;
                for (order, fd) in [(2usize, d2), (3, d3)] {
                    let v = t.values[order];
                    let rel = (v - fd).abs() / v.abs().max(fd.abs());
                    rec.observe(1e-4 - rel, || format!("x={x} order={order} tower={v:e} fd={fd:e}"));
                }
            }
            Ok(())
        }));
    }
    for &(c, n) in MONOTONE_CASES {
        out.push(check(SUITE, format!("sign pattern of derivatives c={c} n={n}"), |rec| {
            let (lo, hi, steps) = MONOTONE_GRID;
            let f = make_family(c, n)?;
            let r = complete_monotonicity_scan(&f, &logspace(lo, hi, steps)?, MONOTONE_ORDER, pol)?;
            adopt(rec, r);
            Ok(())
        }));
        out.push(check(SUITE, format!("Renyi concave increasing, Tsallis concave c={c} n={n}"), |rec| {
            let f = make_family(c, n)?;
            renyi_tsallis_shape(&f, &logspace(1e-2, 1e2, 120)?, pol, rec)
        }));
        out.push(check(SUITE, format!("log-convexity of S c={c} n={n}"), |rec| {
            let f = make_family(c, n)?;
            let r = log_convexity_probe(&f, &linspace(0.0, 10.0, 401)?, pol)?;
            adopt(rec, r);
            Ok(())
        }));
    }
    for &(c, l_max) in CONVEX_NEGATIVE {
        for l in 1..=l_max {
            let n = -c * l as f64;
            let label = format!("c={c} l={l}");
            out.push(check(SUITE, format!("convexity of S {label}"), |rec| {
                let f = make_family(c, n)?;
                let r = convexity_scan_s(&f, &linspace(0.0, -1.0 / c, CONVEX_STEPS)?, pol)?;
                adopt(rec, r);
                Ok(())
            }));
            out.push(check(SUITE, format!("S falls then rises {label}"), |rec| {
                let f = make_family(c, n)?;
                let r = unimodality_scan_s(&f, &linspace(0.0, -1.0 / c, CONVEX_STEPS)?, pol)?;
                adopt(rec, r);
                Ok(())
            }));
            out.push(check(SUITE, format!("Tsallis concave, rises then falls {label}"), |rec| {
                let f = make_family(c, n)?;
                renyi_tsallis_shape(&f, &linspace(0.0, -1.0 / c, CONVEX_STEPS)?, pol, rec)
            }));
            out.push(check(SUITE, format!("symmetry of S {label}"), |rec| {
                let f = make_family(c, n)?;
                let mid = -0.5 / c;
                for t in linspace(0.0, mid, 11)? {
                    let a = s_value(&f, mid - t, pol)?.s;
                    let b = s_value(&f, (mid + t).min(-1.0 / c), pol)?.s;
                    rec.observe(1e-12 - (a - b).abs(), || format!("t={t}"));
                }
                Ok(())
            }));
        }
    }
    for &c in PROBE_C {
        for l in [2u64, 6] {
            out.push(check(SUITE, format!("log-convexity probe c={c} l={l}"), |rec| {
                let f = make_family(c, -c * l as f64)?;
                let r = log_convexity_probe(&f, &linspace(0.0, -1.0 / c, 401)?, pol)?;
                adopt(rec, r);
                Ok(())
            }));
        }
    }
    out
}

/// Interior points avoiding the singular points of the equation.
fn residual_grid(f: &FamilyParams, lo: f64, hi: f64) -> Result<Vec<f64>> {
    let pts = interior_linspace(lo, hi, RESIDUAL_POINTS)?;
    Ok(pts.into_iter().filter(|&x| !crate::quadratic::is_singular(f, x) && (x - 1.0).abs() > 1e-9).collect())
}

/// Renyi concave and increasing for `c >= 0`; Tsallis concave for all `c`,
/// rising then falling about `-1/(2c)` for `c < 0`.
fn renyi_tsallis_shape(f: &FamilyParams, xs: &[f64], pol: &TruncationPolicy, rec: &mut VerificationRecord) -> Result<()> {
    let evals = xs.iter().map(|&x| s_value(f, x, pol)).collect::<Result<Vec<_>>>()?;
    let t: Vec<f64> = evals.iter().map(|q| q.tsallis).collect();
    for (x, d2) in second_divided_differences(xs, &t) {
        rec.observe(1e-8 - d2, || format!("Tsallis x={x} d2={d2:e}"));
    }
    if f.c() >= 0.0 {
        let r: Vec<f64> = evals.iter().map(|q| q.renyi).collect();
        for (x, d2) in second_divided_differences(xs, &r) {
            rec.observe(1e-8 - d2, || format!("Renyi x={x} d2={d2:e}"));
        }
        for (x, d) in first_differences(xs, &r) {
            rec.observe(d + 1e-10, || format!("Renyi x={x} diff={d:e}"));
        }
    } else {
        let mid = -0.5 / f.c();
        for (i, (x, d)) in first_differences(xs, &t).into_iter().enumerate() {
            if xs[i + 1] <= mid {
                rec.observe(d + 1e-10, || format!("Tsallis rising x={x} diff={d:e}"));
            } else if x >= mid {
                rec.observe(1e-10 - d, || format!("Tsallis falling x={x} diff={d:e}"));
            }
        }
    }
    Ok(())
}


/// Takes over the outcome of a scan while keeping this suite's case id.
fn adopt(rec: &mut VerificationRecord, scan: VerificationRecord) {
    *rec = VerificationRecord { suite: SUITE.into(), case_id: std::mem::take(&mut rec.case_id), ..scan };
}
