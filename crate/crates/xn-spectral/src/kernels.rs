//! `h_T(r)`, the heat kernel `g(t, u)`, and the two routes to `A₂(T)` and `A_l(T)`.

use crate::{KernelParams, SpectralError};
use statrs::function::erf::erf;
use std::f64::consts::PI;
use xn_numerics::{integrate, integrate_to_infinity, tanh_sinh, QuadSpec};

/// `h_T(r) = exp(-T(1/4 + r²))`.
pub fn h_t(r: f64, t: f64) -> Result<f64, SpectralError> {
    if !(t > 0.0) {
        return Err(SpectralError::Domain(format!("T = {t} must be positive")));
    }
    Ok((-t * (0.25 + r * r)).exp())
}

/// `g(t, u) = (4πt)^{-1/2} exp(-t/4 - u²/4t)`.
pub fn heat_g(t: f64, u: f64) -> Result<f64, SpectralError> {
    if !(t > 0.0) {
        return Err(SpectralError::Domain(format!("t = {t} must be positive")));
    }
    Ok(heat_g_unchecked(t, u))
}

pub(crate) fn heat_g_unchecked(t: f64, u: f64) -> f64 {
    (-t / 4.0 - u * u / (4.0 * t)).exp() / (4.0 * PI * t).sqrt()
}

/// `η_l = (l + √(l² - 4))/2`.
pub fn eta_l(l: i64) -> Result<f64, SpectralError> {
    if l <= 2 {
        return Err(SpectralError::Domain(format!("l = {l} must exceed 2")));
    }
    let l = l as f64;
    Ok((l + (l * l - 4.0).sqrt()) / 2.0)
}

// after t = τ²: g(τ², u)·2τ = π^{-1/2} exp(-τ²/4 - u²/4τ²), smooth at τ = 0
fn heat_tau(tau: f64, u: f64) -> f64 {
    if tau == 0.0 {
        return if u == 0.0 { 1.0 / PI.sqrt() } else { 0.0 };
    }
    (-tau * tau / 4.0 - u * u / (4.0 * tau * tau)).exp() / PI.sqrt()
}

/// `∫₀^T g(t, u) dt`; `T = ∞` is allowed.
pub(crate) fn heat_partial(u: f64, t_max: f64, spec: QuadSpec) -> Result<(f64, f64), SpectralError> {
    let f = |tau: f64| heat_tau(tau, u);
    let peak = u.abs().sqrt();
    let split = 2.0 * peak + 2.0;
    let tau_max = t_max.sqrt();
    if tau_max <= split {
        let r = integrate(f, 0.0, tau_max, spec)?;
        return Ok((r.value, r.error));
    }
    let head = integrate(f, 0.0, split, spec)?;
    let tail =
        if t_max.is_infinite() { integrate_to_infinity(f, split, spec)? } else { integrate(f, split, tau_max, spec)? };
    Ok((head.value + tail.value, head.error + tail.error))
}

/// `∫₀^∞ g(t, u) dt` by quadrature (the closed form is `e^{-|u|/2}`).
pub fn heat_integral(u: f64, spec: QuadSpec) -> Result<f64, SpectralError> {
    Ok(heat_partial(u, f64::INFINITY, spec)?.0)
}

/// A quantity computed two ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualRoute {
    pub primary: f64,
    pub alternate: f64,
}

impl DualRoute {
    pub fn discrepancy(&self) -> f64 {
        (self.primary - self.alternate).abs()
    }
}

/// `A₂(T)`: the closed form `-erf(√T/2)/2` as primary, quadrature of
/// `-1/2 + (1/4π)∫ h_T(r)/(1/4 + r²) dr` as alternate.
pub fn a2(p: &KernelParams) -> Result<DualRoute, SpectralError> {
    let t = p.t();
    let closed = -0.5 * erf(t.sqrt() / 2.0);
    let q = integrate_to_infinity(|r| (-t * (0.25 + r * r)).exp() / (0.25 + r * r), 0.0, p.quad)?;
    Ok(DualRoute { primary: closed, alternate: -0.5 + q.value / (2.0 * PI) })
}

/// Heat and spectral routes to `A_l(T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ALRoutes {
    pub l: i64,
    /// `-(1/2)∫₀^T g(t, 2 log η_l) dt`, the reference value.
    pub heat: f64,
    /// `-1/(2η_l) + (1/4π)∫_{|r|≤R} h_T(r) cos(2r log η_l)/(1/4 + r²) dr`, if the quadrature converged.
    pub spectral: Result<f64, SpectralError>,
    pub cutoff: f64,
    /// `e^{-TR²}/(TR)`, bounding the part of the spectral integral beyond `R`.
    pub tail_bound: f64,
}

impl ALRoutes {
    pub fn discrepancy(&self) -> Option<f64> {
        self.spectral.as_ref().ok().map(|s| (s - self.heat).abs())
    }
}

pub fn a_l(p: &KernelParams, l: i64) -> Result<ALRoutes, SpectralError> {
    let t = p.t();
    let eta = eta_l(l)?;
    let u = 2.0 * eta.ln();
    let heat = -0.5 * heat_partial(u, t, p.quad)?.0;
    let cutoff = (37.0 / t).sqrt().max(1.0);
    let tail_bound = (-t * cutoff * cutoff).exp() / (t * cutoff);
    let spectral = tanh_sinh(|r| (-t * (0.25 + r * r)).exp() * (u * r).cos() / (0.25 + r * r), 0.0, cutoff, p.osc_tol)
        .map(|q| -0.5 / eta + q.value / (2.0 * PI))
        .map_err(SpectralError::from);
    Ok(ALRoutes { l, heat, spectral, cutoff, tail_bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitutions() {
        assert!((h_t(0.0, 1.0).unwrap() - (-0.25f64).exp()).abs() < 1e-15);
        assert!((eta_l(3).unwrap() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!(eta_l(2).is_err());
        assert!(heat_g(0.0, 1.0).is_err());
        assert!(h_t(1.0, -1.0).is_err());
    }

    #[test]
    fn a2_values() {
        let v = a2(&KernelParams::new(1.0).unwrap()).unwrap();
        assert!((v.primary + 0.260_25).abs() < 1e-5);
        let v = a2(&KernelParams::new(4.0).unwrap()).unwrap();
        assert!((v.primary + 0.421_35).abs() < 1e-5);
        let v = a2(&KernelParams::new(400.0).unwrap()).unwrap();
        assert!((v.primary + 0.5).abs() < 1e-15);
    }
}
