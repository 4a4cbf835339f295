//! Values and Laurent data at `s = 1` of the three Mellin transforms `𝓜₁`, `𝓜₂`, `𝓜₃` making
//! up the parabolic contribution.

use crate::kernels::a2;
use crate::transform::PsiTable;
use crate::{Approx, KernelParams, SpectralError};
use statrs::function::gamma::ln_gamma;
use std::f64::consts::PI;
use xn_arith::{constants, Level};
use xn_numerics::zeta;
use xn_zeta::{
    inverse_volume, scattering_closed, scattering_constant_inf_inf, scattering_series, DuConvention, LaurentJet,
};

pub(crate) fn euler_gamma() -> f64 {
    constants::EULER_GAMMA.parse().expect("constant literal")
}

pub(crate) fn scattering_c() -> f64 {
    constants::SCATTERING_C.parse().expect("constant literal")
}

/// Laurent data of `𝓜₁` at `s = 1` with `C₁(T)` kept apart.
#[derive(Debug, Clone, PartialEq)]
pub struct M1Laurent {
    pub a2: f64,
    /// `12A₂(T)/(πN)`.
    pub residue: f64,
    /// `12/(πN)`, the coefficient of `C₁(T)` in the constant term.
    pub c1_coefficient: f64,
    /// `(12/πN)·A₂(T)(2𝒞 + γ - 2 log N)`.
    pub base_constant: f64,
    pub c1: Option<f64>,
}

impl M1Laurent {
    /// The jet, which needs `C₁(T)`.
    pub fn jet(&self) -> Result<LaurentJet, SpectralError> {
        let c1 = self.c1.ok_or(SpectralError::MissingParameter("C1"))?;
        Ok(LaurentJet::new(self.residue, self.base_constant + self.c1_coefficient * c1))
    }

    /// Coefficient of `log N` in the constant term, `-24A₂(T)/(πN)`.
    pub fn log_n_coefficient(&self) -> f64 {
        -2.0 * self.c1_coefficient * self.a2
    }
}

pub fn m1_laurent(level: Level, p: &KernelParams, c1: Option<f64>) -> Result<M1Laurent, SpectralError> {
    let n = level.get() as f64;
    let a2 = a2(p)?.primary;
    let k = 12.0 / (PI * n);
    let bracket = 2.0 * scattering_c() + euler_gamma() - 2.0 * n.ln();
    Ok(M1Laurent { a2, residue: k * a2, c1_coefficient: k, base_constant: k * a2 * bracket, c1 })
}

/// `𝓜₁(s)` from its two-term expansion at `s = 1`.
pub fn m1_value(level: Level, s: f64, p: &KernelParams, c1: f64) -> Result<Approx, SpectralError> {
    p.check_s(s)?;
    let jet = m1_laurent(level, p, Some(c1))?.jet()?;
    Ok(Approx { value: jet.eval(s), dropped: "O(s - 1)" })
}

/// `2N^{1-2s} ζ(s)ζ(2s-1)/ζ(2s) · √π Γ(s-½)/Γ(s) · (A₂(T)(s-1) + C₁(T)(s-1)²)`.
pub fn m1_identity_value(level: Level, s: f64, p: &KernelParams, c1: f64) -> Result<Approx, SpectralError> {
    p.check_s(s)?;
    let n = level.get() as f64;
    let h = s - 1.0;
    let a2 = a2(p)?.primary;
    let gamma_ratio = PI.sqrt() * (ln_gamma(s - 0.5) - ln_gamma(s)).exp();
    let zetas = zeta(s) * zeta(2.0 * s - 1.0) / zeta(2.0 * s);
    let value = 2.0 * n.powf(1.0 - 2.0 * s) * zetas * gamma_ratio * (a2 * h + c1 * h * h);
    Ok(Approx { value, dropped: "O((s - 1)³) in I₂ - I₀" })
}

/// `𝓜₂(s) = 2ζ(s)∫₀^∞ (Ψ₂^±(2y) - Ψ₀^±(2y)) y^{s-1} dy`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct M2Value {
    pub value: f64,
    pub mellin: f64,
    pub zeta: f64,
    /// Truncation gauge of the underlying table.
    pub edge: f64,
}

pub fn m2_value(
    s: f64,
    p: &KernelParams,
    table: &PsiTable,
    y_max: f64,
    panels: usize,
) -> Result<M2Value, SpectralError> {
    p.check_s(s)?;
    let mellin = table.mellin_difference(s, y_max, panels);
    let z = zeta(s);
    Ok(M2Value { value: 2.0 * z * mellin, mellin, zeta: z, edge: table.edge })
}

/// How `φ_{∞∞}` is evaluated inside `𝓜₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiRoute {
    /// The census series truncated at `kmax` (the `±` convention).
    Series { kmax: u64 },
    /// The zeta-quotient closed form.
    Closed,
}

/// `𝓜₃(s) = s/(1+s) · h_T(is/2) · φ_{∞∞}((1+s)/2)` with `h_T(is/2) = e^{T(s²-1)/4}`.
pub fn m3_value(level: Level, s: f64, p: &KernelParams, route: PhiRoute) -> Result<f64, SpectralError> {
    p.check_s(s)?;
    let sigma = (1.0 + s) / 2.0;
    let phi = match route {
        PhiRoute::Series { kmax } => scattering_series(level, sigma, kmax, DuConvention::PlusMinus)?.value,
        PhiRoute::Closed => scattering_closed(level, sigma)?,
    };
    Ok(s / (1.0 + s) * (p.t() * (s * s - 1.0) / 4.0).exp() * phi)
}

/// `v_Γ^{-1}/(s-1) + 𝒞_{∞∞}/2 + v_Γ^{-1}(T+1)/2`.
pub fn m3_laurent(level: Level, p: &KernelParams) -> Result<LaurentJet, SpectralError> {
    let inv_v = inverse_volume(level)?;
    let c = scattering_constant_inf_inf(level)?.to_f64();
    Ok(LaurentJet::new(inv_v, c / 2.0 + inv_v * (p.t() + 1.0) / 2.0))
}
