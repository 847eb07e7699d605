use super::manifest::{FAMILY_CASES, FAMILY_POINTS};
use super::{check, VerifyConfig};
use crate::family::{make_family, mass_check, weight, weight_derivative, FamilyParams, SupportKind};
use crate::numerics::diff::{try_central_diff, DiffStencil};
use crate::record::VerificationRecord;

const SUITE: &str = "family";

pub fn family_suite(cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    let mut out = Vec::new();
    for &(c, n) in FAMILY_CASES {
        let label = format!("c={c} n={n}");
        out.push(check(SUITE, format!("normalisation {label}"), |rec| {
            let f = make_family(c, n)?;
            for x in points(&f) {
                let (sum, t) = mass_check(&f, x, &cfg.policy)?;
                let slack = t.tail_bound + 1e-12 - (sum - 1.0).abs();
                rec.observe(slack, || format!("x={x} sum={sum:e}"));
            }
            Ok(())
        }));
        out.push(check(SUITE, format!("derivative recurrence {label}"), |rec| {
            let f = make_family(c, n)?;
            for x in points(&f) {
                for k in probe_indices(&f, x) {
                    let d = cfg.derivative_sign() * weight_derivative(&f, k, x)?;
                    let stencil = DiffStencil::with_step(1, oracle_step(&f, k, x))?;
                    let fd = try_central_diff(|t| weight(&f, k, t).map(|w| w.value), x, stencil)?.value;
                    let scale = recurrence_scale(&f, k, x)?.max(d.abs());
                    rec.observe(1e-6 - (d - fd).abs() / scale, || format!("x={x} k={k} d={d:e} fd={fd:e}"));
                }
            }
            Ok(())
        }));
        out.push(check(SUITE, format!("nonnegative weights {label}"), |rec| {
            let f = make_family(c, n)?;
            for x in points(&f) {
                for k in probe_indices(&f, x) {
                    let v = weight(&f, k, x)?.value;
                    rec.observe(v, || format!("x={x} k={k}"));
                }
            }
            Ok(())
        }));
    }
    out
}

fn points(f: &FamilyParams) -> Vec<f64> {
    FAMILY_POINTS.iter().copied().filter(|&x| f.domain().contains_interior(x)).collect()
}

/// Difference step matched to the length scale `1 / |d ln p_k / dx|` of the
/// weight, and kept well inside the domain.
pub(crate) fn oracle_step(f: &FamilyParams, k: u64, x: f64) -> f64 {
    let (n, c, kf) = (f.n(), f.c(), k as f64);
    let log_slope = (kf / x - (n + c * kf) / (1.0 + c * x)).abs();
    let d = f.domain();
    let room = (x - d.lo).min(d.hi - x);
    let base = f64::EPSILON.powf(0.2);
    (base * x.max(1.0).min(1.0 / log_slope)).min(0.25 * room)
}

/// `n (p_{k-1} + p_k)` over the raised family: the size of the two terms
/// whose difference is the derivative. Relative errors are measured against
/// it because the derivative itself cancels to zero near the mode.
pub(crate) fn recurrence_scale(f: &FamilyParams, k: u64, x: f64) -> crate::error::Result<f64> {
    let up = f.raised();
    let below = if k == 0 { 0.0 } else { weight(&up, k - 1, x)?.value };
    Ok(f.n() * (below + weight(&up, k, x)?.value))
}

/// Small indices, the bulk of the distribution (mean plus eight standard
/// deviations) and the far end of a finite support.
fn probe_indices(f: &FamilyParams, x: f64) -> Vec<u64> {
    let mean = f.n() * x;
    let sd = (mean * (1.0 + f.c() * x)).max(0.0).sqrt();
    let hi = match f.support() {
        SupportKind::Finite(l) => l,
        SupportKind::Infinite => (mean + 8.0 * sd + 10.0) as u64,
    };
    let mut ks: Vec<u64> = (0..=hi.min(40)).collect();
    ks.extend([hi / 2, hi.saturating_sub(1), hi]);
    ks.sort_unstable();
    ks.dedup();
    ks
}
