//! Numerical building blocks: adaptive quadrature, Richardson extrapolation
//! and the Riemann zeta function on the real axis.

pub mod extrap;
pub mod quad;
pub mod special;

pub use extrap::{richardson, richardson_limit};
pub use quad::{integrate, integrate_to_infinity, sinh_sinh, tanh_sinh, QuadResult, QuadSpec};
pub use special::zeta;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("quadrature tolerance not reached: achieved {achieved:e}, requested {requested:e}")]
    Tolerance { achieved: f64, requested: f64 },
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("series tolerance {requested:e} unreachable within bound {bound}")]
    SeriesBound { requested: f64, bound: u64 },
    #[error("invalid argument: {0}")]
    Domain(String),
}
