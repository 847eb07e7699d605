//! Exact rational identities for the binomial case `c = -1`.
//!
//! Everything here works on integer or rational polynomials; no floating
//! point enters any check except for reporting margins.

pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::record::VerificationRecord;

pub use poly::{binomial, binomial_row, factorial, int, rat, RationalPoly};

/// Largest `n` accepted by the polynomial constructors.
pub const MAX_EXACT_N: u32 = 500;

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be a positive integer".into()));
    }
    if n > MAX_EXACT_N {
        return Err(Error::SizeExceeded { n: n as usize, cap: MAX_EXACT_N as usize });
    }
    Ok(())
}

fn four_pow(e: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(4), e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `S_n(x) = sum_k C(n,k)^2 x^{2k} (1-x)^{2(n-k)}`, expanded.
pub fn s_poly(n: u32) -> Result<RationalPoly> {
    check_n(n)?;
    let n = u64::from(n);
    let outer = binomial_row(n);
    let mut coeffs = vec![BigInt::zero(); 2 * n as usize + 1];
    for k in 0..=n {
        let w = &outer[k as usize] * &outer[k as usize];
        let m = 2 * (n - k);
        for (i, b) in binomial_row(m).into_iter().enumerate() {
            let term = &w * b;
            let slot = &mut coeffs[2 * k as usize + i];
            if i % 2 == 0 {
                *slot += term;
            } else {
                *slot -= term;
            }
        }
    }
    Ok(RationalPoly::from_integers(coeffs))
}

/// Coefficients `a_k` of `S_n(x) = sum_k a_k (x - 1/2)^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralForm {
    pub n: u32,
    pub a: Vec<BigRational>,
}

/// `a_k = 4^{k-n} C(2n,n) C(n,k)^2 / C(2n,2k)`.
pub fn central_form(n: u32) -> Result<CentralForm> {
    check_n(n)?;
    let nn = u64::from(n);
    let central = binomial(2 * nn, nn);
    let a = (0..=nn)
        .map(|k| {
            let c = binomial(nn, k);
            four_pow(k as i64 - nn as i64) * BigRational::new(&central * &c * &c, binomial(2 * nn, 2 * k))
        })
        .collect();
    Ok(CentralForm { n, a })
}

impl CentralForm {
    /// The even-power polynomial in `y = x - 1/2`.
    pub fn as_poly_in_y(&self) -> RationalPoly {
        let mut c = vec![BigRational::zero(); 2 * self.a.len() - 1];
        for (k, a) in self.a.iter().enumerate() {
            c[2 * k] = a.clone();
        }
        RationalPoly::new(c)
    }
}

/// `s_poly(n)` re-expanded in powers of `x - 1/2`.
pub fn recentered_s_poly(n: u32) -> Result<RationalPoly> {
    Ok(s_poly(n)?.taylor_shift(&rat(1, 2)))
}

/// `S_n^{(2j)}(1/2) = (2j)! 4^{j-n} C(2n,n) C(n,j)^2 / C(2n,2j)`.
pub fn central_derivative(n: u32, j: u32) -> Result<BigRational> {
    check_n(n)?;
    if j > n {
        return Err(Error::IndexError { index: j as usize, max: n as usize });
    }
    let (nn, jj) = (u64::from(n), u64::from(j));
    let c = binomial(nn, jj);
    Ok(BigRational::from_integer(factorial(2 * jj))
        * four_pow(jj as i64 - nn as i64)
        * BigRational::new(binomial(2 * nn, nn) * &c * &c, binomial(2 * nn, 2 * jj)))
}

/// Closed forms for `S(1/2)`, `S''(1/2)` and (for `n >= 2`) `S''''(1/2)`:
/// `C(2n,n)/4^n`, `C(2n-2,n-1)/4^{n-2}` and `9 C(2n-4,n-2)/4^{n-4}`.
pub fn central_closed_forms(n: u32) -> Result<(BigRational, BigRational, Option<BigRational>)> {
    check_n(n)?;
    let nn = u64::from(n);
    let s0 = BigRational::from_integer(binomial(2 * nn, nn)) * four_pow(-(nn as i64));
    let s2 = BigRational::from_integer(binomial(2 * nn - 2, nn - 1)) * four_pow(2 - nn as i64);
    let s4 = (nn >= 2).then(|| int(9) * BigRational::from_integer(binomial(2 * nn - 4, nn - 2)) * four_pow(4 - nn as i64));
    Ok((s0, s2, s4))
}

/// `f_n(t) = sum_{j<n} C(n-1,j) (C(n,j+1) t^{2j+1} - C(n,j) t^{2j})`.
pub fn f_poly(n: u32) -> Result<RationalPoly> {
    check_n(n)?;
    let nn = u64::from(n);
    let outer = binomial_row(nn - 1);
    let row = binomial_row(nn);
    let mut coeffs = vec![BigInt::zero(); 2 * nn as usize];
    for j in 0..nn as usize {
        coeffs[2 * j + 1] += &outer[j] * &row[j + 1];
        coeffs[2 * j] -= &outer[j] * &row[j];
    }
    Ok(RationalPoly::from_integers(coeffs))
}

/// Right-hand side `(t+1)^{2n-1} S_n'(t/(t+1)) / (2n)`, as a polynomial.
pub fn f_from_s_prime(n: u32) -> Result<RationalPoly> {
    let d = s_poly(n)?.derivative();
    let m = 2 * u64::from(n) - 1;
    let t = RationalPoly::from_integers([0, 1]);
    // sum_i d_i t^i (t+1)^{m-i}
    let mut acc = RationalPoly::zero();
    let mut t_pow = RationalPoly::constant(int(1));
    for (i, c) in d.coeffs().iter().enumerate() {
        let tail = RationalPoly::affine_power(&int(1), &int(1), m - i as u64);
        acc = &acc + &(&t_pow * &tail).scale(c);
        t_pow = &t_pow * &t;
    }
    Ok(acc.scale(&rat(1, 2 * i64::from(n))))
}

/// `f_n(t) (2n) = (t+1)^{2n-1} S_n'(t/(t+1))` as an exact polynomial
/// identity.
pub fn f_identity_holds(n: u32) -> Result<bool> {
    Ok(f_poly(n)? == f_from_s_prime(n)?)
}

/// Margin for an exact sign check: the value rounded to `f64`, nudged so a
/// negative rational never reports a nonnegative margin.
pub fn exact_margin(v: &BigRational) -> f64 {
    let f = v.to_f64().unwrap_or(if v.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY });
    if v.is_negative() && f >= 0.0 {
        -f64::MIN_POSITIVE
    } else {
        f
    }
}

/// Coefficients of `f_n(1 + u)`; the `u^i` coefficient is `f_n^{(i)}(1)/i!`.
pub fn f_shifted(n: u32) -> Result<RationalPoly> {
    Ok(f_poly(n)?.taylor_shift(&int(1)))
}

/// Every coefficient of `f_n(1 + u)` is `>= 0`, so every derivative of `f_n`
/// is nonnegative on `t >= 1`.
pub fn shift_expansion_nonneg(n: u32) -> Result<VerificationRecord> {
    let shifted = f_shifted(n)?;
    let mut rec = VerificationRecord::new("exact", format!("f(1+u) coefficients n={n}"));
    for i in 0..2 * n as usize {
        let c = shifted.coeff(i);
        rec.observe(exact_margin(&c), || format!("n={n} i={i}"));
    }
    Ok(rec)
}

/// `f_n = sum_k c_k (t-1)^{2k-1} (t+1)^{2n-2k}`, `k = 1..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnkDecomposition {
    pub n: u32,
    /// `c[k-1]` holds `c_{nk}`.
    pub c: Vec<BigRational>,
}

impl CnkDecomposition {
    pub fn all_positive(&self) -> bool {
        self.c.iter().all(Signed::is_positive)
    }

    /// `sum_k c_k u^{2k-1} (u+2)^{2n-2k}` in `u = t - 1`.
    pub fn reconstruct_in_u(&self) -> RationalPoly {
        let n = u64::from(self.n);
        let mut acc = RationalPoly::zero();
        for (idx, ck) in self.c.iter().enumerate() {
            let k = idx as u64 + 1;
            let mut basis = RationalPoly::affine_power(&int(1), &int(2), 2 * n - 2 * k);
            let mut lift = vec![BigRational::zero(); 2 * k as usize - 1];
            lift.push(ck.clone());
            basis = &basis * &RationalPoly::new(lift);
            acc = &acc + &basis;
        }
        acc
    }
}

/// Solves for the `c_{nk}` on the odd-degree coefficients of `f_n(1+u)`,
/// where the system is lower triangular with diagonal `4^{n-k}`, then checks
/// that the decomposition reproduces every coefficient.
pub fn cnk_solve(n: u32) -> Result<CnkDecomposition> {
    let g = f_shifted(n)?;
    let nn = u64::from(n);
    let mut c: Vec<BigRational> = Vec::with_capacity(n as usize);
    for m in 1..=nn {
        // coefficient of u^{2m-1} in u^{2k-1}(u+2)^{2n-2k} is C(2n-2k, 2m-2k) 2^{2n-2m}
        let scale = four_pow((nn - m) as i64);
        let mut rhs = g.coeff(2 * m as usize - 1);
        for (idx, ck) in c.iter().enumerate() {
            let k = idx as u64 + 1;
            rhs -= ck * BigRational::from_integer(binomial(2 * nn - 2 * k, 2 * m - 2 * k)) * &scale;
        }
        c.push(rhs / &scale);
    }
    let d = CnkDecomposition { n, c };
    if d.reconstruct_in_u() != g {
        return Err(Error::InconsistentSystem(format!("c_nk for n={n} do not reproduce f_n")));
    }
    Ok(d)
}

/// `c_{nk}` predicted from the central form: `(k/n) a_k 2^{1-2k}`.
pub fn cnk_from_central_form(n: u32) -> Result<Vec<BigRational>> {
    let cf = central_form(n)?;
    Ok((1..=u64::from(n))
        .map(|k| {
            BigRational::new(BigInt::from(k), BigInt::from(n))
                * &cf.a[k as usize]
                * BigRational::new(BigInt::from(2), num_traits::pow(BigInt::from(4), k as usize))
        })
        .collect())
}

/// Reading of the lower summation limit written `[i/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BracketConvention {
    Floor,
    Ceil,
}

/// `i! sum_{j=[i/2]}^{n-1} C(n-1,j) (C(n,j+1) C(2j+1,i) - C(n,j) C(2j,i))`.
pub fn derivative_sum_at_one(n: u32, i: u32, convention: BracketConvention) -> Result<BigRational> {
    check_n(n)?;
    if i >= 2 * n {
        return Err(Error::IndexError { index: i as usize, max: 2 * n as usize - 1 });
    }
    let (nn, ii) = (u64::from(n), u64::from(i));
    let start = match convention {
        BracketConvention::Floor => ii / 2,
        BracketConvention::Ceil => ii.div_ceil(2),
    };
    let mut sum = BigInt::zero();
    for j in start..nn {
        sum += binomial(nn - 1, j) * (binomial(nn, j + 1) * binomial(2 * j + 1, ii) - binomial(nn, j) * binomial(2 * j, ii));
    }
    Ok(BigRational::from_integer(factorial(ii) * sum))
}

/// `(f_n^{(i)}(1)` by differentiation, the same value from the closed sum
/// with the floor reading of `[i/2]`).
pub fn derivative_at_one(n: u32, i: u32) -> Result<(BigRational, BigRational)> {
    let closed = derivative_sum_at_one(n, i, BracketConvention::Floor)?;
    let direct = f_poly(n)?.nth_derivative(i as usize).eval(&int(1));
    Ok((direct, closed))
}

/// Node values of the saw function `w_n` at `j/(2n)`: zero at odd `j`,
/// `C(n,k)^2 / C(2n,2k)` at `j = 2k`.
pub fn saw_nodes(n: u32) -> Vec<BigRational> {
    let nn = u64::from(n);
    (0..=2 * nn)
        .map(|j| {
            if j % 2 == 1 {
                BigRational::zero()
            } else {
                let c = binomial(nn, j / 2);
                BigRational::new(&c * &c, binomial(2 * nn, j))
            }
        })
        .collect()
}

/// Classical Bernstein operator `sum_j f(j/m) C(m,j) x^j (1-x)^{m-j}` for
/// given node values.
pub fn bernstein_apply(m: u32, nodes: &[BigRational]) -> Result<RationalPoly> {
    if nodes.len() != m as usize + 1 {
        return Err(Error::InvalidArgument(format!("expected {} node values, got {}", m + 1, nodes.len())));
    }
    let mm = u64::from(m);
    let outer = binomial_row(mm);
    let mut coeffs = vec![BigRational::zero(); m as usize + 1];
    for (j, f) in nodes.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let w = f * BigRational::from_integer(outer[j].clone());
        for (i, b) in binomial_row(mm - j as u64).into_iter().enumerate() {
            let term = &w * BigRational::from_integer(b);
            if i % 2 == 0 {
                coeffs[j + i] += term;
            } else {
                coeffs[j + i] -= term;
            }
        }
    }
    Ok(RationalPoly::new(coeffs))
}

/// Sign of `S_n''` at `j/points`, `j = 0..=points`, checked exactly.
pub fn s_second_derivative_grid(n: u32, points: u32) -> Result<VerificationRecord> {
    let d2 = s_poly(n)?.nth_derivative(2);
    let den = BigInt::from(points);
    let mut rec = VerificationRecord::new("exact", format!("S'' >= 0 on j/{points} n={n}"));
    for j in 0..=points {
        let sign = d2.sign_at(&BigInt::from(j), &den);
        rec.observe(f64::from(sign), || format!("n={n} x={j}/{points}"));
    }
    Ok(rec)
}

/// Left-hand side of the second-order equation at `c = -1` applied to `S_n`:
/// `x(1-x)(1-2x) S'' + (4(n-1)x(1-x) + 1) S' + 2n(1-2x) S`.
pub fn ode_residual_poly(n: u32) -> Result<RationalPoly> {
    let s = s_poly(n)?;
    let (a, b, c) = ode_coefficient_polys(n);
    Ok(&(&(&a * &s.nth_derivative(2)) + &(&b * &s.derivative())) + &(&c * &s))
}

/// Same equation in the inhomogeneous form satisfied by `T = 1 - S`:
/// `A T'' + B T' + C T - C`.
pub fn tsallis_residual_poly(n: u32) -> Result<RationalPoly> {
    let s = s_poly(n)?;
    let t = &RationalPoly::constant(int(1)) - &s;
    let (a, b, c) = ode_coefficient_polys(n);
    let lhs = &(&(&a * &t.nth_derivative(2)) + &(&b * &t.derivative())) + &(&c * &t);
    Ok(&lhs - &c)
}

fn ode_coefficient_polys(n: u32) -> (RationalPoly, RationalPoly, RationalPoly) {
    let n = i64::from(n);
    // x(1-x)(1-2x) = x - 3x^2 + 2x^3
    let a = RationalPoly::from_integers([0, 1, -3, 2]);
    let b = RationalPoly::from_integers([1, 4 * (n - 1), -4 * (n - 1)]);
    let c = RationalPoly::from_integers([2 * n, -4 * n]);
    (a, b, c)
}
