//! Dirichlet series `D_u(s)`, the zeta functions `ζ_{γ,u}(s)` of hyperbolic classes, the
//! Eisenstein series `E_∞(z, s)` of `Γ(N)` as a lattice sum, the scattering function
//! `φ_{∞∞}(s)` and the closed-form scattering constants.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod dirichlet;
mod eisenstein;
mod scattering;
mod zeta_gamma;

pub use dirichlet::{dirichlet_du, sum_du_constant, DuConstantReport, DuConvention, MoebiusSieve};
pub use eisenstein::{
    eisenstein_coset_sum, eisenstein_lattice_sum, eisenstein_zero_coeff, lattice_norms, RationalPoint, ZeroCoefficient,
};
pub use scattering::{
    census_brute, census_count, inverse_volume, scattering_closed, scattering_constant_inf_inf,
    scattering_constant_zero_xi, scattering_residue_estimate, scattering_series, Kappa, ResidueEstimate,
    ScatteringConstant,
};
pub use zeta_gamma::{
    zeta_gamma_u, zeta_gamma_u_field_route, zeta_gamma_u_full, zeta_residue, zeta_residue_extrapolation,
    ResidueExtrapolation, ZetaResidue,
};

use std::ops::{Add, Mul};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error(transparent)]
    Arith(#[from] xn_arith::ArithError),
    #[error(transparent)]
    Curve(#[from] xn_curve::CurveError),
    #[error(transparent)]
    Hyperbolic(#[from] xn_hyperbolic::HypError),
    #[error(transparent)]
    Numeric(#[from] xn_numerics::NumericError),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("tolerance {requested:e} unreachable: tail bound {achieved:e} at the given truncation")]
    Tolerance { achieved: f64, requested: f64 },
    #[error("κ table violates Σ_ξ κ(ξ) = 0 (sum = {0:e})")]
    KappaOrthogonality(f64),
    #[error("κ table has no entry for ξ = {0}")]
    KappaMissing(u64),
}

/// A truncated series value and a bound on the omitted part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated {
    pub value: f64,
    pub tail: f64,
}

impl Truncated {
    pub fn new(value: f64, tail: f64) -> Self {
        Truncated { value, tail }
    }
}

/// Truncation bound and target tolerance for series evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    pub bound: u64,
    pub tolerance: f64,
    /// Decimal digits requested for rendering.
    pub digits: u32,
}

impl Default for SeriesParams {
    fn default() -> Self {
        SeriesParams { bound: 1_000_000, tolerance: 1e-6, digits: 30 }
    }
}

impl SeriesParams {
    pub fn validate(&self) -> Result<(), ZetaError> {
        if self.bound == 0 || !(self.tolerance > 0.0) {
            return Err(ZetaError::Domain(format!("bound {} / tolerance {}", self.bound, self.tolerance)));
        }
        Ok(())
    }
}

/// Laurent data `residue/(s - 1) + constant + next·(s - 1) + …` at `s = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentJet {
    pub residue: f64,
    pub constant: f64,
    pub next: Option<f64>,
}

impl LaurentJet {
    pub fn new(residue: f64, constant: f64) -> Self {
        LaurentJet { residue, constant, next: None }
    }

    pub const S0: f64 = 1.0;

    pub fn is_finite(&self) -> bool {
        self.residue.is_finite() && self.constant.is_finite() && self.next.is_none_or(f64::is_finite)
    }

    /// Evaluate the truncated expansion at `s != 1`.
    pub fn eval(&self, s: f64) -> f64 {
        let h = s - Self::S0;
        self.residue / h + self.constant + self.next.unwrap_or(0.0) * h
    }
}

impl Add for LaurentJet {
    type Output = LaurentJet;
    fn add(self, o: LaurentJet) -> LaurentJet {
        let next = match (self.next, o.next) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        LaurentJet { residue: self.residue + o.residue, constant: self.constant + o.constant, next }
    }
}

impl Mul<f64> for LaurentJet {
    type Output = LaurentJet;
    fn mul(self, k: f64) -> LaurentJet {
        LaurentJet { residue: self.residue * k, constant: self.constant * k, next: self.next.map(|x| x * k) }
    }
}

/// Deterministic sum: terms sorted by magnitude, smallest first.
pub(crate) fn sorted_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    terms.iter().sum()
}
