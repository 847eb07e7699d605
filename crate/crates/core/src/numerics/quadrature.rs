//! Fixed-order Gauss–Legendre quadrature on `[0, 1]`.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// Supported rule sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaussOrder {
    N32,
    N64,
    N128,
}

impl GaussOrder {
    pub fn points(self) -> usize {
        match self {
            GaussOrder::N32 => 32,
            GaussOrder::N64 => 64,
            GaussOrder::N128 => 128,
        }
    }

    /// The next larger rule, used for doubling checks.
    pub fn doubled(self) -> Option<GaussOrder> {
        match self {
            GaussOrder::N32 => Some(GaussOrder::N64),
            GaussOrder::N64 => Some(GaussOrder::N128),
            GaussOrder::N128 => None,
        }
    }
}

/// Nodes in `(0, 1)` (strictly increasing) and positive weights summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Gauss–Legendre rule with `n` points mapped from `[-1, 1]` to `[0, 1]`.
    /// Roots come from Newton iteration on the three-term recurrence.
    pub fn gauss_legendre(n: usize) -> Self {
        assert!(n >= 1, "rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let mut p1 = 1.0;
                let mut p2 = 0.0;
                for j in 1..=n {
                    let p3 = p2;
                    p2 = p1;
                    let jf = j as f64;
                    p1 = ((2.0 * jf - 1.0) * z * p2 - (jf - 1.0) * p3) / jf;
                }
                dp = nf * (z * p1 - p2) / (z * z - 1.0);
                let dz = p1 / dp;
                z -= dz;
                if dz.abs() <= 1e-16 {
                    break;
                }
            }
            let w = 1.0 / ((1.0 - z * z) * dp * dp);
            // z > 0 here; the mirrored node sits at 1 - s.
            nodes[i] = 0.5 * (1.0 - z);
            nodes[n - 1 - i] = 0.5 * (1.0 + z);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        QuadratureRule { nodes, weights }
    }

    /// Shared, lazily built rule for one of the supported orders.
    pub fn cached(order: GaussOrder) -> &'static QuadratureRule {
        static R32: OnceLock<QuadratureRule> = OnceLock::new();
        static R64: OnceLock<QuadratureRule> = OnceLock::new();
        static R128: OnceLock<QuadratureRule> = OnceLock::new();
        let cell = match order {
            GaussOrder::N32 => &R32,
            GaussOrder::N64 => &R64,
            GaussOrder::N128 => &R128,
        };
        cell.get_or_init(|| QuadratureRule::gauss_legendre(order.points()))
    }

    pub fn integrate(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&s, &w)| w * g(s)).sum()
    }
}

/// `sum w_i g(s_i)` with the cached rule. Exact for polynomials of degree
/// below `2 * points`.
pub fn gauss_legendre_01(g: impl Fn(f64) -> f64, order: GaussOrder) -> f64 {
    QuadratureRule::cached(order).integrate(g)
}

/// Power of the substitution `s = u^p` used by [`integrate_unit_graded`].
pub const GRADING_POWER: i32 = 4;

/// Integral over `[0, 1]` of an integrand with a logarithmic-type endpoint
/// singularity at `s = 0` (such as `(s - 1) / ln s`, which behaves like
/// `-1 / ln s`). The substitution `s = u^4` multiplies the integrand by
/// `4 u^3`, which flattens the endpoint enough for Gauss–Legendre to reach
/// ~1e-14 at 64 nodes. Polynomial integrands of degree `d` stay exact while
/// `4 d + 3 < 2 * points`.
pub fn integrate_unit_graded(g: impl Fn(f64) -> f64, order: GaussOrder) -> f64 {
    let p = f64::from(GRADING_POWER);
    gauss_legendre_01(
        |u| {
            let u3 = u.powi(GRADING_POWER - 1);
            p * u3 * g(u3 * u)
        },
        order,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::special::mu;

    const ORDERS: [GaussOrder; 3] = [GaussOrder::N32, GaussOrder::N64, GaussOrder::N128];

    #[test]
    fn rule_invariants() {
        for order in ORDERS {
            let r = QuadratureRule::cached(order);
            assert_eq!(r.nodes.len(), order.points());
            let total: f64 = r.weights.iter().sum();
            assert!((total - 1.0).abs() <= 1e-14);
            assert!(r.weights.iter().all(|&w| w > 0.0));
            assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
            assert!(r.nodes[0] > 0.0 && *r.nodes.last().unwrap() < 1.0);
        }
    }

    #[test]
    fn polynomial_exactness() {
        for order in ORDERS {
            assert!((gauss_legendre_01(|_| 1.0, order) - 1.0).abs() <= 1e-14);
            assert!((gauss_legendre_01(|s| s.powi(10), order) - 1.0 / 11.0).abs() <= 1e-14);
        }
    }

    /// Composite trapezoid on a geometrically graded mesh near 0, used as an
    /// independent check of the graded rule.
    fn graded_trapezoid(g: impl Fn(f64) -> f64) -> f64 {
        // Substitute s = u^8 then use a fine uniform trapezoid in u.
        let n = 200_000;
        let h = 1.0 / f64::from(n);
        let f = |u: f64| 8.0 * u.powi(7) * g(u.powi(8));
        let mut acc = 0.5 * (f(0.0) + f(1.0));
        for i in 1..n {
            acc += f(f64::from(i) * h);
        }
        acc * h
    }

    #[test]
    fn frullani_integral_of_mu() {
        let ln2 = std::f64::consts::LN_2;
        let oracle = graded_trapezoid(mu);
        assert!((oracle - ln2).abs() < 1e-9, "oracle {oracle}");
        for order in [GaussOrder::N64, GaussOrder::N128] {
            let got = integrate_unit_graded(mu, order);
            assert!((got - ln2).abs() <= 1e-12, "{order:?}: {got}");
        }
    }

    #[test]
    fn plain_rule_struggles_at_log_endpoint() {
        let err = (gauss_legendre_01(mu, GaussOrder::N64) - std::f64::consts::LN_2).abs();
        assert!(err > 1e-8);
    }
}
