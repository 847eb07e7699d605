//! The index of coincidence `S_{n,c}(x) = sum_k p_{n,k}(x)^2`, the order-2
//! Rényi and Tsallis entropies `R = -ln S` and `T = 1 - S`, and the
//! second-order linear equation
//!
//! ```text
//! x(1+cx)(1+2cx) y'' + (4(n+c) x(1+cx) + 1) y' + 2n(1+2cx) y = 0
//! ```
//!
//! that `S` satisfies, together with its Heun, confluent Heun, Riccati and
//! inhomogeneous (Tsallis) forms.

use crate::error::{Error, Result};
use crate::family::{
    joint_truncation, truncation_index, weight_derivative_unchecked, weight_unchecked,
    FamilyParams, NeumaierSum, SupportKind, TruncationPolicy,
};
use crate::grid::{first_differences, second_divided_differences};
use crate::numerics::diff::{try_central_diff, DiffStencil};
use crate::record::VerificationRecord;

/// Highest derivative order the tower produces by default.
pub const DEFAULT_TOWER_CAP: usize = 24;

/// Tolerance used by the discrete convexity and monotonicity scans.
pub const SCAN_TOLERANCE: f64 = 1e-8;

/// `S`, `R` and `T` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEval {
    pub s: f64,
    pub renyi: f64,
    pub tsallis: f64,
    pub truncation_k: u64,
    /// Certified bound on the omitted part of `sum p^2`.
    pub tail_bound: f64,
}

/// `[y, y', ..., y^(m)]` at `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeTower {
    pub x: f64,
    pub values: Vec<f64>,
}

impl DerivativeTower {
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }
}

pub fn s_value(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<QuadEval> {
    let t = truncation_index(params, x, policy)?;
    let mut acc = NeumaierSum::default();
    for k in 0..=t.k_max {
        let p = weight_unchecked(params, k, x).value;
        acc.add(p * p);
    }
    let s = acc.total().min(1.0);
    Ok(QuadEval { s, renyi: 0.0 - s.ln(), tsallis: 1.0 - s, truncation_k: t.k_max, tail_bound: t.square_tail_bound() })
}

/// `S'(x) = 2 sum_k p_k p'_k`, with the derivative recurrence for `p'_k`.
/// At `x = 0` the value is `-2n`.
pub fn s_prime(params: &FamilyParams, x: f64, policy: &TruncationPolicy) -> Result<f64> {
    if x == 0.0 {
        return Ok(-2.0 * params.n());
    }
    params.check_interior(x)?;
    let k_max = match params.support() {
        SupportKind::Finite(l) => l,
        SupportKind::Infinite => joint_truncation(&[*params, params.raised()], x, policy)?.k_max + 1,
    };
    let mut acc = NeumaierSum::default();
    for k in 0..=k_max {
        let p = weight_unchecked(params, k, x).value;
        if p > 0.0 {
            acc.add(p * weight_derivative_unchecked(params, k, x));
        }
    }
    Ok(2.0 * acc.total())
}

/// Values at `x` of the coefficient polynomials
/// `A = x(1+cx)(1+2cx)`, `B = 4(n+c)x(1+cx) + 1`, `C = 2n(1+2cx)`
/// and all their nonzero derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeCoefficients {
    pub a: [f64; 4],
    pub b: [f64; 3],
    pub c: [f64; 2],
}

impl OdeCoefficients {
    pub fn at(params: &FamilyParams, x: f64) -> Self {
        let (n, c) = (params.n(), params.c());
        let m = n + c;
        OdeCoefficients {
            a: [
                x * (1.0 + c * x) * (1.0 + 2.0 * c * x),
                1.0 + 6.0 * c * x + 6.0 * c * c * x * x,
                6.0 * c + 12.0 * c * c * x,
                12.0 * c * c,
            ],
            b: [4.0 * m * x * (1.0 + c * x) + 1.0, 4.0 * m + 8.0 * c * m * x, 8.0 * c * m],
            c: [2.0 * n * (1.0 + 2.0 * c * x), 4.0 * c * n],
        }
    }
}

fn binom(j: usize, i: usize) -> f64 {
    if i > j {
        return 0.0;
    }
    let mut r = 1.0;
    for t in 0..i {
        r = r * (j - t) as f64 / (t + 1) as f64;
    }
    r
}

/// Points where the leading coefficient `x(1+cx)(1+2cx)` vanishes.
pub fn is_singular(params: &FamilyParams, x: f64) -> bool {
    let c = params.c();
    x == 0.0 || (1.0 + c * x).abs() < 1e-12 || (1.0 + 2.0 * c * x).abs() < 1e-12
}

/// Derivatives of `S` at `x` up to order `m`, seeded with `S` and `S'` and
/// continued by differentiating the equation `m - 2` times.
pub fn derivative_tower(params: &FamilyParams, x: f64, m: usize, policy: &TruncationPolicy) -> Result<DerivativeTower> {
    derivative_tower_capped(params, x, m, DEFAULT_TOWER_CAP, policy)
}

pub fn derivative_tower_capped(
    params: &FamilyParams,
    x: f64,
    m: usize,
    cap: usize,
    policy: &TruncationPolicy,
) -> Result<DerivativeTower> {
    if m < 2 || m > cap {
        return Err(Error::InvalidArgument(format!("tower order must be in 2..={cap}, got {m}")));
    }
    params.check_domain(x)?;
    if is_singular(params, x) {
        return Err(Error::SingularPoint { x });
    }
    params.check_interior(x)?;
    let y0 = s_value(params, x, policy)?.s;
    let y1 = s_prime(params, x, policy)?;
    Ok(DerivativeTower { x, values: extend_tower(&OdeCoefficients::at(params, x), vec![y0, y1], m) })
}

fn extend_tower(co: &OdeCoefficients, mut y: Vec<f64>, m: usize) -> Vec<f64> {
    for j in 0..=(m - 2) {
        let mut acc = 0.0;
        for i in 1..=3.min(j) {
            acc += binom(j, i) * co.a[i] * y[j + 2 - i];
        }
        for i in 0..=2.min(j) {
            acc += binom(j, i) * co.b[i] * y[j + 1 - i];
        }
        for i in 0..=1.min(j) {
            acc += binom(j, i) * co.c[i] * y[j - i];
        }
        y.push(-acc / co.a[0]);
    }
    y
}

/// Derivatives of `S` at the regular singular point `x = 0`, where the
/// equation reduces to `(j+1) y^(j+1) = -[...]` and needs only `y(0) = 1`.
pub fn origin_tower(params: &FamilyParams, m: usize) -> Result<DerivativeTower> {
    if !(1..=DEFAULT_TOWER_CAP).contains(&m) {
        return Err(Error::InvalidArgument(format!("tower order must be in 1..={DEFAULT_TOWER_CAP}, got {m}")));
    }
    let co = OdeCoefficients::at(params, 0.0);
    let mut y = vec![1.0];
    for j in 0..m {
        let same = binom(j, 2) * co.a[2] + j as f64 * co.b[1] + co.c[0];
        let below = binom(j, 3) * co.a[3] + binom(j, 2) * co.b[2] + j as f64 * co.c[1];
        let prev = if j >= 1 { y[j - 1] } else { 0.0 };
        y.push(-(same * y[j] + below * prev) / (j as f64 + 1.0));
    }
    Ok(DerivativeTower { x: 0.0, values: y })
}

/// Where the derivatives fed into a residual come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeSource {
    /// `S` and `S'` from the series, `S''` from the equation itself.
    Tower,
    /// `S` and `S'` from the series, `S''` from central differences of `S`.
    /// Independent of the equation.
    FiniteDifference,
}

/// `(S, S', S'')` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondOrderJet {
    pub s: f64,
    pub ds: f64,
    pub d2s: f64,
}

/// Central difference of a domain-restricted function, with the step shrunk
/// so the stencil stays inside the domain.
pub(crate) fn fd_in_domain(
    params: &FamilyParams,
    f: impl Fn(f64) -> Result<f64>,
    x: f64,
    order: u32,
) -> Result<f64> {
    let mut stencil = DiffStencil::new(order, x)?;
    let d = params.domain();
    let room = (x - d.lo).min(d.hi - x);
    let reach = stencil.reach();
    if reach > 0.5 * room {
        stencil = DiffStencil::with_step(order, stencil.step * 0.5 * room / reach)?;
    }
    Ok(try_central_diff(f, x, stencil)?.value)
}

pub fn s_jet(params: &FamilyParams, x: f64, source: DerivativeSource, policy: &TruncationPolicy) -> Result<SecondOrderJet> {
    match source {
        DerivativeSource::Tower => {
            let t = derivative_tower(params, x, 2, policy)?;
            Ok(SecondOrderJet { s: t.values[0], ds: t.values[1], d2s: t.values[2] })
        }
        DerivativeSource::FiniteDifference => {
            params.check_interior(x)?;
            let s = s_value(params, x, policy)?.s;
            let ds = s_prime(params, x, policy)?;
            let d2s = fd_in_domain(params, |t| Ok(s_value(params, t, policy)?.s), x, 2)?;
            Ok(SecondOrderJet { s, ds, d2s })
        }
    }
}

/// Signed residual of an equation together with the magnitude of its largest
/// term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub value: f64,
    pub scale: f64,
}

impl Residual {
    fn from_terms(terms: &[f64]) -> Self {
        let value = terms.iter().sum();
        let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        Residual { value, scale }
    }

    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.value.abs()
        } else {
            self.value.abs() / self.scale
        }
    }
}

fn require_regular(params: &FamilyParams, x: f64) -> Result<()> {
    params.check_domain(x)?;
    if is_singular(params, x) {
        return Err(Error::SingularPoint { x });
    }
    params.check_interior(x)
}

/// Residual of `A y'' + B y' + C y = 0` at `y = S`. With
/// [`DerivativeSource::FiniteDifference`] nothing on the way uses the
/// equation.
pub fn ode_residual(params: &FamilyParams, x: f64, source: DerivativeSource, policy: &TruncationPolicy) -> Result<Residual> {
    require_regular(params, x)?;
    let j = s_jet(params, x, source, policy)?;
    Ok(ode_residual_from_jet(params, x, &j))
}

pub fn ode_residual_from_jet(params: &FamilyParams, x: f64, j: &SecondOrderJet) -> Residual {
    let co = OdeCoefficients::at(params, x);
    Residual::from_terms(&[co.a[0] * j.d2s, co.b[0] * j.ds, co.c[0] * j.s])
}

/// Residual of the Heun form
/// `y'' + (1/u + 1/(u-1) + (2n/c)/(u-1/2)) y' + ((2n/c) u - n/c) / (u(u-1)(u-1/2)) y = 0`
/// for `y(u) = S(-u/c)`, at `u = -c x`.
pub fn heun_residual(params: &FamilyParams, x: f64, source: DerivativeSource, policy: &TruncationPolicy) -> Result<Residual> {
    let c = params.c();
    if c == 0.0 {
        return Err(Error::UnsupportedParams("the Heun form needs c != 0".into()));
    }
    require_regular(params, x)?;
    let j = s_jet(params, x, source, policy)?;
    Ok(heun_residual_from_jet(params, x, &j))
}

pub fn heun_residual_from_jet(params: &FamilyParams, x: f64, j: &SecondOrderJet) -> Residual {
    let (n, c) = (params.n(), params.c());
    let u = -c * x;
    let y_u = -j.ds / c;
    let y_uu = j.d2s / (c * c);
    let a = 2.0 * n / c;
    let p = 1.0 / u + 1.0 / (u - 1.0) + a / (u - 0.5);
    let q = (a * u - n / c) / (u * (u - 1.0) * (u - 0.5));
    Residual::from_terms(&[y_uu, p * y_u, q * j.s])
}

/// Factor `F` with `heun residual = F * (equation residual)`:
/// `F = -1 / (c u (1-u) (1-2u))` at `u = -c x`.
pub fn heun_factor(params: &FamilyParams, x: f64) -> f64 {
    let c = params.c();
    let u = -c * x;
    -1.0 / (c * u * (1.0 - u) * (1.0 - 2.0 * u))
}

/// Residual of the confluent Heun form
/// `u'' + (4n + 1/x) u' + (2nx - 2n)/(x(x-1)) u = 0` at `u = S_{n,0}`.
pub fn confluent_heun_residual(n: f64, x: f64, source: DerivativeSource, policy: &TruncationPolicy) -> Result<Residual> {
    let params = FamilyParams::new(0.0, n)?;
    if x == 0.0 || x == 1.0 {
        return Err(Error::SingularPoint { x });
    }
    params.check_interior(x)?;
    let j = s_jet(&params, x, source, policy)?;
    let coeff = (2.0 * n * x - 2.0 * n) / (x * (x - 1.0));
    Ok(Residual::from_terms(&[j.d2s, (4.0 * n + 1.0 / x) * j.ds, coeff * j.s]))
}

/// Residual of the Riccati equation
/// `A u' = A u^2 - B u + C` for `u = R' = -S'/S`.
pub fn riccati_residual(params: &FamilyParams, x: f64, source: DerivativeSource, policy: &TruncationPolicy) -> Result<Residual> {
    require_regular(params, x)?;
    let j = s_jet(params, x, source, policy)?;
    Ok(riccati_residual_from_jet(params, x, &j))
}

pub fn riccati_residual_from_jet(params: &FamilyParams, x: f64, j: &SecondOrderJet) -> Residual {
    let co = OdeCoefficients::at(params, x);
    let u = -j.ds / j.s;
    let du = -j.d2s / j.s + u * u;
    Residual::from_terms(&[co.a[0] * du, -co.a[0] * u * u, co.b[0] * u, -co.c[0]])
}

/// Residual of `A u'' + B u' + C u = C` for `u = T = 1 - S`.
pub fn tsallis_ode_residual(params: &FamilyParams, x: f64, source: DerivativeSource, policy: &TruncationPolicy) -> Result<Residual> {
    require_regular(params, x)?;
    let j = s_jet(params, x, source, policy)?;
    Ok(tsallis_residual_from_jet(params, x, &j))
}

pub fn tsallis_residual_from_jet(params: &FamilyParams, x: f64, j: &SecondOrderJet) -> Residual {
    let co = OdeCoefficients::at(params, x);
    Residual::from_terms(&[co.a[0] * -j.d2s, co.b[0] * -j.ds, co.c[0] * (1.0 - j.s), -co.c[0]])
}

fn label(params: &FamilyParams) -> String {
    params.to_string()
}

/// Checks `(-1)^m S^(m)(x) > 0` for `m <= m_max` at each grid point, using
/// the equation tower (or the origin recurrence at `x = 0`).
pub fn complete_monotonicity_scan(
    params: &FamilyParams,
    grid: &[f64],
    m_max: usize,
    policy: &TruncationPolicy,
) -> Result<VerificationRecord> {
    if params.c() < 0.0 {
        return Err(Error::UnsupportedParams("complete monotonicity is only claimed for c >= 0".into()));
    }
    if !(2..=8).contains(&m_max) {
        return Err(Error::InvalidArgument(format!("m_max must be in 2..=8, got {m_max}")));
    }
    let mut rec = VerificationRecord::new("quadratic", format!("complete-monotonicity {} m<={m_max}", label(params)));
    for &x in grid {
        let tower = if x == 0.0 { origin_tower(params, m_max)? } else { derivative_tower(params, x, m_max, policy)? };
        for (m, &v) in tower.values.iter().enumerate() {
            let signed = if m % 2 == 0 { v } else { -v };
            rec.observe(signed, || format!("x={x} m={m}"));
        }
    }
    if rec.worst_margin == 0.0 {
        rec.fail("a derivative vanished");
    }
    Ok(rec)
}

fn s_on_grid(params: &FamilyParams, grid: &[f64], policy: &TruncationPolicy) -> Result<Vec<f64>> {
    grid.iter().map(|&x| Ok(s_value(params, x, policy)?.s)).collect()
}

/// Second divided differences of `S` on the grid must be `>= -SCAN_TOLERANCE`.
pub fn convexity_scan_s(params: &FamilyParams, grid: &[f64], policy: &TruncationPolicy) -> Result<VerificationRecord> {
    let values = s_on_grid(params, grid, policy)?;
    let mut rec = VerificationRecord::new("quadratic", format!("convexity of S {}", label(params)));
    for (x, d2) in second_divided_differences(grid, &values) {
        rec.observe(d2 + SCAN_TOLERANCE, || format!("x={x} d2={d2:e}"));
    }
    Ok(rec)
}

/// For `c < 0`: `S` decreasing up to `-1/(2c)` and increasing after it, as
/// first differences on the grid (tolerance `1e-10`).
pub fn unimodality_scan_s(params: &FamilyParams, grid: &[f64], policy: &TruncationPolicy) -> Result<VerificationRecord> {
    if params.c() >= 0.0 {
        return Err(Error::UnsupportedParams("the turning point only exists for c < 0".into()));
    }
    let mid = -0.5 / params.c();
    let values = s_on_grid(params, grid, policy)?;
    let mut rec = VerificationRecord::new("quadratic", format!("S falls then rises {}", label(params)));
    for (i, (x, d)) in first_differences(grid, &values).into_iter().enumerate() {
        let right = grid[i + 1];
        if right <= mid {
            rec.observe(1e-10 - d, || format!("x={x} diff={d:e}"));
        } else if x >= mid {
            rec.observe(d + 1e-10, || format!("x={x} diff={d:e}"));
        }
    }
    Ok(rec)
}

/// Minimum second divided difference of `ln S` on the grid. Asserted for
/// `c >= 0`; for `c < 0` the record is evidence only.
pub fn log_convexity_probe(params: &FamilyParams, grid: &[f64], policy: &TruncationPolicy) -> Result<VerificationRecord> {
    let values: Vec<f64> = s_on_grid(params, grid, policy)?.into_iter().map(f64::ln).collect();
    let mut rec = VerificationRecord::new("quadratic", format!("log-convexity of S {}", label(params)));
    let mut min = (f64::INFINITY, f64::NAN);
    for (x, d2) in second_divided_differences(grid, &values) {
        if d2 < min.0 {
            min = (d2, x);
        }
    }
    // Margin is the raw minimum; the pass threshold is -SCAN_TOLERANCE.
    rec.observe(min.0 + SCAN_TOLERANCE, || format!("x={} min_second_diff={:e}", min.1, min.0));
    rec.worst_margin = min.0;
    if params.c() < 0.0 {
        rec = rec.report_only();
    }
    Ok(rec)
}

/// `(min second divided difference of ln S, argmin x)` over a grid.
pub fn log_convexity_minimum(params: &FamilyParams, grid: &[f64], policy: &TruncationPolicy) -> Result<(f64, f64)> {
    let values: Vec<f64> = s_on_grid(params, grid, policy)?.into_iter().map(f64::ln).collect();
    Ok(second_divided_differences(grid, &values)
        .into_iter()
        .fold((f64::INFINITY, f64::NAN), |best, (x, d)| if d < best.0 { (d, x) } else { best }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::make_family;
    use crate::grid::linspace;
    use crate::numerics::diff::central_diff;

    fn pol() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    fn fam(c: f64, n: f64) -> FamilyParams {
        make_family(c, n).unwrap()
    }

    #[test]
    fn s_value_examples() {
        for (c, n) in [(-1.0, 4.0), (0.0, 1.0), (1.5, 2.0)] {
            let q = s_value(&fam(c, n), 0.0, &pol()).unwrap();
            assert_eq!((q.s, q.renyi, q.tsallis), (1.0, 0.0, 0.0));
        }
        assert!((s_value(&fam(-1.0, 1.0), 0.5, &pol()).unwrap().s - 0.5).abs() < 1e-16);
        assert!((s_value(&fam(-1.0, 2.0), 0.5, &pol()).unwrap().s - 0.375).abs() < 1e-16);
    }

    #[test]
    fn renyi_and_tsallis_are_derived_exactly() {
        let q = s_value(&fam(0.5, 2.0), 1.3, &pol()).unwrap();
        assert_eq!(q.renyi, -q.s.ln());
        assert_eq!(q.tsallis, 1.0 - q.s);
    }

    #[test]
    fn s_prime_examples() {
        for (c, n) in [(-1.0, 3.0), (0.0, 1.0), (2.0, 5.0)] {
            assert_eq!(s_prime(&fam(c, n), 0.0, &pol()).unwrap(), -2.0 * n);
        }
        for n in 1..=8 {
            assert!(s_prime(&fam(-1.0, f64::from(n)), 0.5, &pol()).unwrap().abs() < 1e-15);
        }
    }

    #[test]
    fn s_prime_matches_finite_differences() {
        for (c, n) in [(-1.0, 5.0), (-0.5, 1.5), (0.0, 2.0), (1.0, 2.0)] {
            let f = fam(c, n);
            for &x in &[0.07, 0.4, 0.9] {
                let d = s_prime(&f, x, &pol()).unwrap();
                let fd = central_diff(|t| s_value(&f, t, &pol()).unwrap().s, x, 1).unwrap();
                assert!((d - fd.value).abs() <= 1e-6 * d.abs(), "c={c} x={x}");
            }
        }
    }

    #[test]
    fn origin_tower_matches_poisson_closed_form() {
        // S_{n,0}(x) = e^{-2nx} I_0(2nx): S(0)=1, S'(0)=-2n, S''(0)=6n^2
        let t = origin_tower(&fam(0.0, 1.5), 3).unwrap();
        assert_eq!(t.values[0], 1.0);
        assert_eq!(t.values[1], -3.0);
        assert!((t.values[2] - 6.0 * 2.25).abs() < 1e-12);
    }

    #[test]
    fn tower_second_derivative_matches_finite_differences() {
        for (c, n) in [(-1.0, 3.0), (0.0, 1.0), (1.0, 2.0)] {
            let f = fam(c, n);
            for &x in &[0.15, 0.35, 0.8] {
                let t = derivative_tower(&f, x, 3, &pol()).unwrap();
                let fd = central_diff(|u| s_value(&f, u, &pol()).unwrap().s, x, 2).unwrap();
                assert!((t.values[2] - fd.value).abs() <= 1e-5 * t.values[2].abs(), "c={c} x={x}");
                let fd3 = central_diff(|u| s_prime(&f, u, &pol()).unwrap(), x, 2).unwrap();
                assert!((t.values[3] - fd3.value).abs() <= 1e-4 * t.values[3].abs(), "3rd c={c} x={x}");
            }
        }
    }

    #[test]
    fn tower_refuses_singular_points() {
        let f = fam(-1.0, 2.0);
        assert!(matches!(derivative_tower(&f, 0.5, 4, &pol()), Err(Error::SingularPoint { .. })));
        assert!(matches!(derivative_tower(&f, 0.0, 4, &pol()), Err(Error::SingularPoint { .. })));
        assert!(matches!(derivative_tower(&f, 1.0, 4, &pol()), Err(Error::SingularPoint { .. })));
        assert!(derivative_tower(&f, 0.3, 25, &pol()).is_err());
        assert!(derivative_tower(&f, 0.3, 1, &pol()).is_err());
    }

    #[test]
    fn tower_against_termwise_poisson_series() {
        // S_{1,0}(x) = e^{-2x} sum_k x^{2k} / (k!)^2
        let g = |x: f64| -> (f64, f64, f64) {
            let (mut a, mut a1, mut a2) = (0.0, 0.0, 0.0);
            let mut fact = 1.0f64;
            for k in 0..80i32 {
                if k > 0 {
                    fact *= f64::from(k);
                }
                let c = 1.0 / (fact * fact);
                let e = 2 * k;
                a += c * x.powi(e);
                if e >= 1 {
                    a1 += c * f64::from(e) * x.powi(e - 1);
                }
                if e >= 2 {
                    a2 += c * f64::from(e * (e - 1)) * x.powi(e - 2);
                }
            }
            let w = (-2.0 * x).exp();
            (w * a, w * (a1 - 2.0 * a), w * (a2 - 4.0 * a1 + 4.0 * a))
        };
        let (s, _, s2) = g(1.0);
        let t = derivative_tower(&fam(0.0, 1.0), 1.0, 2, &pol()).unwrap();
        assert!((t.values[0] - s).abs() < 1e-14);
        assert!((t.values[2] - s2).abs() <= 1e-8 * s2.abs());
    }

    #[test]
    fn residual_examples() {
        let fd = DerivativeSource::FiniteDifference;
        for (c, n, x) in [(-1.0, 3.0, 0.3), (0.0, 1.0, 0.7), (1.0, 2.0, 1.5)] {
            let r = ode_residual(&fam(c, n), x, fd, &pol()).unwrap();
            assert!(r.relative() <= 1e-5, "c={c}: {r:?}");
        }
        assert!(heun_residual(&fam(-1.0, 2.0), 0.3, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(heun_residual(&fam(1.0, 2.0), 0.4, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(confluent_heun_residual(1.0, 0.5, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(confluent_heun_residual(2.0, 2.0, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(matches!(confluent_heun_residual(1.0, 1.0, fd, &pol()), Err(Error::SingularPoint { .. })));
        assert!(riccati_residual(&fam(0.0, 1.0), 1.0, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(riccati_residual(&fam(-1.0, 3.0), 0.25, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(tsallis_ode_residual(&fam(1.0, 2.0), 0.4, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(tsallis_ode_residual(&fam(-1.0, 2.0), 0.2, fd, &pol()).unwrap().relative() <= 1e-5);
        assert!(heun_residual(&fam(0.0, 2.0), 0.2, fd, &pol()).is_err());
    }

    #[test]
    fn residual_forms_are_algebraically_linked() {
        let f = fam(-1.0, 3.0);
        let x = 0.3;
        let j = s_jet(&f, x, DerivativeSource::FiniteDifference, &pol()).unwrap();
        let ode = ode_residual_from_jet(&f, x, &j);
        let heun = heun_residual_from_jet(&f, x, &j);
        let ric = riccati_residual_from_jet(&f, x, &j);
        let ts = tsallis_residual_from_jet(&f, x, &j);
        assert!((heun.value - heun_factor(&f, x) * ode.value).abs() <= 1e-12 * heun.scale);
        assert!((ric.value + ode.value / j.s).abs() <= 1e-12 * ric.scale);
        assert!((ts.value + ode.value).abs() <= 1e-12 * ts.scale);
    }

    #[test]
    fn complete_monotonicity_small_cases() {
        let grid = linspace(0.1, 10.0, 12).unwrap();
        for (c, n) in [(0.0, 1.0), (1.0, 2.0), (2.5, 3.0)] {
            let r = complete_monotonicity_scan(&fam(c, n), &grid, 6, &pol()).unwrap();
            assert!(r.passed(), "{r}");
        }
        let with_origin = complete_monotonicity_scan(&fam(0.0, 1.0), &[0.0, 0.5], 8, &pol()).unwrap();
        assert!(with_origin.passed());
        assert!(complete_monotonicity_scan(&fam(-1.0, 2.0), &grid, 6, &pol()).is_err());
    }

    #[test]
    fn convexity_and_turning_point_for_binomial() {
        let grid = linspace(0.0, 1.0, 201).unwrap();
        for n in 1..=10 {
            let f = fam(-1.0, f64::from(n));
            assert!(convexity_scan_s(&f, &grid, &pol()).unwrap().passed());
        }
        let u = unimodality_scan_s(&fam(-1.0, 5.0), &grid, &pol()).unwrap();
        assert!(u.passed(), "{u}");
    }

    #[test]
    fn log_convexity_probe_modes() {
        let grid = linspace(0.0, 5.0, 101).unwrap();
        let pos = log_convexity_probe(&fam(1.0, 2.0), &grid, &pol()).unwrap();
        assert_eq!(pos.status, crate::record::Status::Pass);
        let neg = log_convexity_probe(&fam(-1.0, 4.0), &linspace(0.0, 1.0, 101).unwrap(), &pol()).unwrap();
        assert_eq!(neg.status, crate::record::Status::ReportOnly);
    }

    #[test]
    fn reflection_symmetry_of_s() {
        let f = fam(-0.5, 2.0);
        for &t in &[0.1, 0.6, 0.95] {
            let a = s_value(&f, 1.0 - t, &pol()).unwrap().s;
            let b = s_value(&f, 1.0 + t, &pol()).unwrap().s;
            assert!((a - b).abs() <= 1e-12);
        }
    }
}
