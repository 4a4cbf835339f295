//! Exact arithmetic for the X(N) toolkit: integers and rationals, elements of
//! real quadratic fields, unimodular matrices, log-linear combinations and
//! fixed-point reals with 80 fractional digits.

pub mod constants;
mod error;
mod fixed;
mod int;
mod loglin;
mod matrix;
mod surd;

pub use error::ArithError;
pub use fixed::{Fixed, SCALE};
pub use int::{
    euler_phi, ext_gcd, factorize, gcd, gcd_i, is_prime, is_square, isqrt, level_admissible, level_rejection,
    mod_inverse, moebius, moebius_table, prime_divisors, Level,
};
pub use loglin::LogLinear;
pub use matrix::Matrix2;
pub use surd::{ratio, sign_int_surd, QuadSurd};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
