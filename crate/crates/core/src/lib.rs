//! Entropies of the family of distributions
//! `p_{n,k}(x) = (-1)^k C(-n/c, k) (cx)^k (1+cx)^{-n/c-k}`
//! (binomial for `c < 0`, Poisson for `c = 0`, negative binomial for `c > 0`):
//! Shannon entropy, the index of coincidence `S = sum p^2`, and the order-2
//! Rényi and Tsallis entropies, with numerical and exact verification of
//! their shape properties.

pub mod cli;
pub mod error;
pub mod exact;
pub mod family;
pub mod grid;
pub mod numerics;
pub mod output;
pub mod quadratic;
pub mod record;
pub mod shannon;
pub mod verify;

pub use error::{Error, Result};
pub use family::{make_family, FamilyParams, TruncationPolicy};
pub use record::{Status, VerificationRecord};
