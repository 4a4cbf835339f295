//! The test function `h_T`, the heat kernel, the constants `A₂(T)` and `A_l(T)`, inverse
//! Selberg/Harish-Chandra transforms, truncations of `Θ_Γ`, and the Laurent pieces
//! `𝓜₁`, `𝓜₂`, `𝓜₃` that assemble into `ℛ∞ = ℛ∞^hyp + ℛ∞^par`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod contributions;
mod kernels;
mod laurent;
mod params;
mod transform;

pub use contributions::{
    r_inf, r_inf_hyp, r_inf_log_n_coefficient, r_inf_par, theta_gamma, theta_gamma_integral, HyperbolicTerm,
    ParabolicBreakdown, ParabolicConstants, RInfBreakdown, ThetaTruncation,
};
pub use kernels::{a2, a_l, eta_l, h_t, heat_g, heat_integral, ALRoutes, DualRoute};
pub use laurent::{
    m1_identity_value, m1_laurent, m1_value, m2_value, m3_laurent, m3_value, M1Laurent, M2Value, PhiRoute,
};
pub use params::{PipelineParams, Source, Tagged};
pub use transform::{PsiTable, SelbergTransform, Weight};

use thiserror::Error;
use xn_numerics::QuadSpec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Arith(#[from] xn_arith::ArithError),
    #[error(transparent)]
    Curve(#[from] xn_curve::CurveError),
    #[error(transparent)]
    Hyperbolic(#[from] xn_hyperbolic::HypError),
    #[error(transparent)]
    Numeric(#[from] xn_numerics::NumericError),
    #[error(transparent)]
    Zeta(#[from] xn_zeta::ZetaError),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("weight {0} is not supported (k must be 0 or 2)")]
    UnsupportedWeight(i32),
    #[error("missing parameter {0}")]
    MissingParameter(&'static str),
}

/// `T` of the test function, the strip parameter `A` bounding `Re(s)`, and quadrature settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    t: f64,
    strip: f64,
    pub quad: QuadSpec,
    /// Tolerance for the tanh-sinh rule used on oscillatory integrands.
    pub osc_tol: f64,
}

impl KernelParams {
    pub fn new(t: f64) -> Result<Self, SpectralError> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(SpectralError::Domain(format!("T = {t} must be positive")));
        }
        Ok(KernelParams { t, strip: 2.0, quad: QuadSpec::default(), osc_tol: 1e-12 })
    }

    pub fn with_strip(mut self, a: f64) -> Result<Self, SpectralError> {
        if !(a > 1.0) {
            return Err(SpectralError::Domain(format!("strip parameter A = {a} must exceed 1")));
        }
        self.strip = a;
        Ok(self)
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn strip(&self) -> f64 {
        self.strip
    }

    pub(crate) fn check_s(&self, s: f64) -> Result<(), SpectralError> {
        if !(s > 1.0 && s < self.strip) {
            return Err(SpectralError::Domain(format!("s = {s} outside (1, {})", self.strip)));
        }
        Ok(())
    }
}

/// A value that omitted a term, with a description of what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Approx {
    pub value: f64,
    pub dropped: &'static str,
}
