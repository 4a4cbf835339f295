//! Inverse Selberg/Harish-Chandra transforms of `h_T` in weights 0 and 2, following the chain
//! `h_T → g → Q → φ_k`, and the Fourier integrals `Ψ_k^±`.

use crate::kernels::heat_g_unchecked;
use crate::{KernelParams, SpectralError};
use std::cell::RefCell;
use std::f64::consts::PI;
use xn_numerics::quad::composite_gauss_nodes;
use xn_numerics::{integrate, integrate_to_infinity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    Zero,
    Two,
}

impl Weight {
    pub fn k(self) -> i32 {
        match self {
            Weight::Zero => 0,
            Weight::Two => 2,
        }
    }
}

impl TryFrom<i32> for Weight {
    type Error = SpectralError;
    fn try_from(k: i32) -> Result<Self, SpectralError> {
        match k {
            0 => Ok(Weight::Zero),
            2 => Ok(Weight::Two),
            _ => Err(SpectralError::UnsupportedWeight(k)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelbergTransform {
    pub params: KernelParams,
}

impl SelbergTransform {
    pub fn new(params: KernelParams) -> Self {
        SelbergTransform { params }
    }

    fn t(&self) -> f64 {
        self.params.t()
    }

    /// `g(u) = (1/2π)∫ h_T(r) e^{-iru} dr` in closed form.
    pub fn g(&self, u: f64) -> f64 {
        heat_g_unchecked(self.t(), u)
    }

    /// `g(u)` by quadrature of the Fourier integral.
    pub fn g_by_quadrature(&self, u: f64) -> Result<f64, SpectralError> {
        let t = self.t();
        let cutoff = (40.0 / t).sqrt();
        let q = integrate(|r| (-t * (0.25 + r * r)).exp() * (r * u).cos(), 0.0, cutoff, self.params.quad)?;
        Ok(q.value / PI)
    }

    /// `Q(w)` with `Q(sinh²(u/2)) = g(u)/2`.
    pub fn q(&self, w: f64) -> f64 {
        self.g(2.0 * w.sqrt().asinh()) / 2.0
    }

    /// `Q'(w) = g'(u)/(2√w √(1+w))` at `u = 2 asinh √w`.
    pub fn q_prime(&self, w: f64) -> f64 {
        let rw = w.sqrt();
        let u = 2.0 * rw.asinh();
        // u/√w, which tends to 2 as w → 0
        let ratio = if rw < 1e-8 { 2.0 * (1.0 - w / 6.0) } else { u / rw };
        -ratio / (4.0 * self.t()) * self.g(u) / (1.0 + w).sqrt()
    }

    /// `φ_k(x) = -(1/π)∫ Q'(x + t²) ((√(x+1+t²) - t)/(√(x+1+t²) + t))^{k/2} dt`.
    pub fn phi(&self, k: Weight, x: f64) -> Result<f64, SpectralError> {
        if !(x >= 0.0) {
            return Err(SpectralError::Domain(format!("φ_k needs x >= 0, got {x}")));
        }
        // the factors at t and -t combine to 2 (k = 0) or 2(x + 1 + 2t²)/(x + 1) (k = 2)
        let f = |t: f64| {
            let w = match k {
                Weight::Zero => 2.0,
                Weight::Two => 2.0 * (x + 1.0 + 2.0 * t * t) / (x + 1.0),
            };
            self.q_prime(x + t * t) * w
        };
        let split = 1.0 + x.sqrt();
        let head = integrate(f, 0.0, split, self.params.quad)?;
        let tail = integrate_to_infinity(f, split, self.params.quad)?;
        Ok(-(head.value + tail.value) / PI)
    }

    /// `∫ φ_k(v²) Re((1+iv)/(1-iv))^{k/2} dv` over the real line.
    pub fn phi_moment(&self, k: Weight) -> Result<f64, SpectralError> {
        let err = RefCell::new(None);
        let f = |v: f64| match self.phi(k, v * v) {
            Ok(p) => 2.0 * p * (k.k() as f64 * v.atan()).cos(),
            Err(e) => {
                err.borrow_mut().get_or_insert(e);
                0.0
            }
        };
        let spec = xn_numerics::QuadSpec { abs_tol: 1e-11, rel_tol: 1e-10, ..self.params.quad };
        let head = integrate(f, 0.0, 4.0, spec);
        let tail = integrate_to_infinity(f, 4.0, spec);
        if let Some(e) = err.into_inner() {
            return Err(e);
        }
        Ok(head?.value + tail?.value)
    }

    /// `(1/4π)∫ h_T(r) dr = e^{-T/4}√(π/T)/(4π)`.
    pub fn h_mass(&self) -> f64 {
        let t = self.t();
        (-t / 4.0).exp() * (PI / t).sqrt() / (4.0 * PI)
    }
}

/// `F_k(u) = φ_k(u²) cos(k atan u)` sampled on composite Gauss nodes of `[0, U]`, so that
/// `Ψ_k^±(y) = 4∫₀^∞ F_k(u) cos(2πuy) du` becomes a weighted cosine sum.
#[derive(Debug, Clone)]
pub struct PsiTable {
    pub u_max: f64,
    nodes: Vec<(f64, f64)>,
    f0: Vec<f64>,
    f2: Vec<f64>,
    /// `max_k |φ_k(U²)|`, a gauge for the truncation at `U`.
    pub edge: f64,
    /// `φ₀(0)` and `φ₂(0)`.
    pub at_zero: (f64, f64),
}

impl PsiTable {
    pub fn new(tr: &SelbergTransform, u_max: f64, panels: usize) -> Result<Self, SpectralError> {
        if !(u_max > 0.0) || panels == 0 {
            return Err(SpectralError::Domain(format!("u_max = {u_max}, panels = {panels}")));
        }
        let nodes = composite_gauss_nodes(0.0, u_max, panels);
        let mut f0 = Vec::with_capacity(nodes.len());
        let mut f2 = Vec::with_capacity(nodes.len());
        for &(u, w) in &nodes {
            let c2 = (1.0 - u * u) / (1.0 + u * u);
            f0.push(4.0 * w * tr.phi(Weight::Zero, u * u)?);
            f2.push(4.0 * w * tr.phi(Weight::Two, u * u)? * c2);
        }
        let edge = tr.phi(Weight::Zero, u_max * u_max)?.abs().max(tr.phi(Weight::Two, u_max * u_max)?.abs());
        let at_zero = (tr.phi(Weight::Zero, 0.0)?, tr.phi(Weight::Two, 0.0)?);
        Ok(PsiTable { u_max, nodes, f0, f2, edge, at_zero })
    }

    /// `Ψ_k^±(y) = Ψ_k(y) + Ψ_k(-y)`.
    pub fn psi(&self, k: Weight, y: f64) -> f64 {
        let f = match k {
            Weight::Zero => &self.f0,
            Weight::Two => &self.f2,
        };
        self.nodes.iter().zip(f).map(|(&(u, _), fw)| fw * (2.0 * PI * u * y).cos()).sum()
    }

    /// `∫₀^Y (Ψ₂^±(2y) - Ψ₀^±(2y)) y^{s-1} dy`; `Y` is chosen where the integrand is negligible.
    pub fn mellin_difference(&self, s: f64, y_max: f64, panels: usize) -> f64 {
        composite_gauss_nodes(0.0, y_max, panels)
            .into_iter()
            .map(|(y, w)| {
                let d = self.psi(Weight::Two, 2.0 * y) - self.psi(Weight::Zero, 2.0 * y);
                w * d * y.powf(s - 1.0)
            })
            .sum()
    }
}
