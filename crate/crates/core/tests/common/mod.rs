//! Oracles shared by the property tests and the acceptance runner. None of
//! them go through the code paths they are used to check.

#![allow(dead_code)]

use baskakov_entropy::family::weight;
use baskakov_entropy::{make_family, FamilyParams};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::Rng;

pub const C_VALUES: [f64; 6] = [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0];

/// A family with parameter `c` and a point strictly inside its domain.
/// `u` and `v` are uniforms in `[0, 1)`.
pub fn family_at(c: f64, u: f64, v: f64) -> (FamilyParams, f64) {
    if c < 0.0 {
        let l = 1 + (u * 30.0) as u64;
        let f = make_family(c, -c * l as f64).unwrap();
        let x = (0.002 + 0.996 * v) / -c;
        (f, x)
    } else {
        let n = c + 0.05 + 20.0 * u;
        let f = make_family(c, n).unwrap();
        let x = 1e-3 * 2e4f64.powf(v);
        (f, x)
    }
}

pub fn random_case(rng: &mut impl Rng, c: f64) -> (FamilyParams, f64) {
    family_at(c, rng.gen(), rng.gen())
}

/// Indices holding essentially all the mass: up to the mean plus eight
/// standard deviations.
pub fn bulk_max(f: &FamilyParams, x: f64) -> u64 {
    let mean = f.n() * x;
    let sd = (mean * (1.0 + f.c() * x)).max(0.0).sqrt();
    let hi = (mean + 8.0 * sd + 10.0) as u64;
    f.l().map_or(hi, |l| l.min(hi))
}

/// Five-point central difference of `g` at `x`.
pub fn fd5(g: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-g(x + 2.0 * h) + 8.0 * g(x + h) - 8.0 * g(x - h) + g(x - 2.0 * h)) / (12.0 * h)
}

/// Relative error of `weight_derivative` against a five-point difference of
/// `weight`. Errors are scaled by `n (p_{k-1} + p_k)` of the raised family,
/// the size of the two terms that cancel near the mode.
pub fn derivative_error(f: &FamilyParams, k: u64, x: f64, derivative: f64) -> f64 {
    let (n, c) = (f.n(), f.c());
    let slope = (k as f64 / x - (n + c * k as f64) / (1.0 + c * x)).abs();
    let room = if c < 0.0 { x.min(-1.0 / c - x) } else { x };
    let h = (f64::EPSILON.powf(0.2) * x.max(1.0).min(1.0 / slope)).min(0.2 * room);
    let fd = fd5(|t| weight(f, k, t).unwrap().value, x, h);
    // For l = 1 the raised family has l = 0: a point mass at k = 0.
    let raised = |j: u64| match make_family(c, n + c) {
        Ok(up) => weight(&up, j, x).unwrap().value,
        Err(_) => f64::from(u8::from(j == 0)),
    };
    let below = if k == 0 { 0.0 } else { raised(k - 1) };
    let scale = (n * (below + raised(k))).max(derivative.abs());
    (derivative - fd).abs() / scale
}

/// `C(l, k) y^k (1-y)^(l-k)` in exact arithmetic, rounded once.
pub fn exact_binomial_weight(l: u64, k: u64, y: f64) -> f64 {
    let y = BigRational::from_float(y).unwrap();
    let q = BigRational::one() - &y;
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(l - i) / BigInt::from(i + 1);
    }
    let v = BigRational::from_integer(c) * pow(&y, k) * pow(&q, l - k);
    v.to_f64().unwrap()
}

fn pow(b: &BigRational, e: u64) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * b)
}

/// `sum_k C(l,k)^2 x^(2k) (1-x)^(2l-2k)` exactly at the rational `x`.
pub fn exact_s_binomial(l: u64, x: &BigRational) -> f64 {
    let q = BigRational::one() - x;
    let mut c = BigInt::one();
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for k in 0..=l {
        let p = BigRational::from_integer(c.clone()) * pow(x, k) * pow(&q, l - k);
        sum += &p * &p;
        c = c * BigInt::from(l - k) / BigInt::from(k + 1);
    }
    sum.to_f64().unwrap()
}
