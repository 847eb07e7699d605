//! Shared numerical kernels: finite differences, quadrature, log-space
//! special functions.

pub mod diff;
pub mod quadrature;
pub mod special;

pub use diff::{central_diff, try_central_diff, DiffEstimate, DiffStencil};
pub use quadrature::{gauss_legendre_01, integrate_unit_graded, GaussOrder, QuadratureRule};
pub use special::{ln_gamma, log_binomial, mu, LogBinomial};
