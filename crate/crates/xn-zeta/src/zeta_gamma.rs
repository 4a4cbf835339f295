//! `ζ_{γ,u}(s) = Σ f_γ(n, -m)^{-s}` over one point per orbit of the totally positive sheet.

use crate::{sorted_sum, Truncated, ZetaError};
use num_traits::ToPrimitive;
use xn_hyperbolic::{pair_slice, HyperbolicClass, OrbitLattice, OrbitRep, PellUnit};
use xn_numerics::richardson_limit;

fn check_s(s: f64) -> Result<(), ZetaError> {
    if !(s > 1.0) {
        return Err(ZetaError::Domain(format!("ζ_γ,u(s) needs s > 1, got {s}")));
    }
    Ok(())
}

/// Local orbit density near the bound, inflated by 2 to dominate the tail.
fn density(reps: &[OrbitRep], bound: i128) -> f64 {
    let total = reps.len() as f64;
    let upper = reps.iter().filter(|r| 2 * r.height > bound).count() as f64;
    let b = bound as f64;
    (total / b).max(2.0 * upper / b)
}

fn tail_estimate(reps: &[OrbitRep], bound: i128, s: f64) -> f64 {
    2.0 * density(reps, bound) * (bound as f64).powf(1.0 - s) / (s - 1.0)
}

/// `ζ_{γ,u}(s)` summed over the totally positive orbits with height `<= bound`; the tail is the
/// integral of the observed orbit density beyond the bound (an estimate, not a proof).
pub fn zeta_gamma_u(
    class: &HyperbolicClass,
    unit: &PellUnit,
    u: u64,
    s: f64,
    bound: i128,
) -> Result<Truncated, ZetaError> {
    check_s(s)?;
    let reps = pair_slice(class, unit, u as i128, bound)?;
    let value = sorted_sum(reps.iter().map(|r| (r.height as f64).powf(-s)).collect());
    Ok(Truncated::new(value, tail_estimate(&reps, bound, s)))
}

/// Both sheets of `{N(ξ) > 0}`: `ζ_{γ,u} + ζ_{γ,N-u}`.
pub fn zeta_gamma_u_full(
    class: &HyperbolicClass,
    unit: &PellUnit,
    u: u64,
    s: f64,
    bound: i128,
) -> Result<Truncated, ZetaError> {
    let a = zeta_gamma_u(class, unit, u, s, bound)?;
    let b = zeta_gamma_u(class, unit, class.level.get() - u, s, bound)?;
    Ok(Truncated::new(a.value + b.value, a.tail + b.tail))
}

/// The same sum computed on the field side: `N^{-s} Σ_ξ (aN²·N(ξ))^{-s}` over the slice of
/// `(u/N + 𝔟)₊` modulo `U₊(N)`.
pub fn zeta_gamma_u_field_route(
    class: &HyperbolicClass,
    unit: &PellUnit,
    u: u64,
    s: f64,
    bound: i128,
) -> Result<Truncated, ZetaError> {
    check_s(s)?;
    let lat = OrbitLattice::new(class, u, unit)?;
    let n = class.n() as f64;
    let an2 = class.a as f64 * n * n;
    let field = lat.field_slice(bound)?;
    let terms: Vec<f64> =
        field.iter().map(|(_, _, xi)| (an2 * xi.norm().to_f64().unwrap_or(f64::NAN)).powf(-s)).collect();
    let value = n.powf(-s) * sorted_sum(terms);
    let b = bound as f64;
    let upper = field.iter().filter(|(_, _, xi)| 2.0 * an2 * n * xi.norm().to_f64().unwrap_or(0.0) > b).count() as f64;
    let rho = (field.len() as f64 / b).max(2.0 * upper / b);
    Ok(Truncated::new(value, 2.0 * rho * b.powf(1.0 - s) / (s - 1.0)))
}

/// `res_{s=1} ζ_{γ,u}(s) = log ε_γ / (N³ √D)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaResidue {
    pub log_eps: f64,
    pub n: u64,
    pub disc: i128,
    pub value: f64,
}

impl ZetaResidue {
    pub fn symbolic(&self) -> String {
        format!("log(ε)/({}^3·√{})", self.n, self.disc)
    }
}

pub fn zeta_residue(class: &HyperbolicClass, unit: &PellUnit) -> ZetaResidue {
    let n = class.level.get();
    let value = unit.log_eps / ((n as f64).powi(3) * (class.disc as f64).sqrt());
    ZetaResidue { log_eps: unit.log_eps, n, disc: class.disc, value }
}

/// Numerical residue: `F(s) = (s - 1)[Σ_{f <= H} f^{-s} + ρ̂ H^{1-s}/(s - 1)]` at `s - 1 = h, h/2, …`,
/// extrapolated to `s = 1` by Richardson's scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueExtrapolation {
    pub samples: Vec<(f64, f64)>,
    pub density: f64,
    pub estimate: f64,
    pub error: f64,
}

pub fn zeta_residue_extrapolation(
    class: &HyperbolicClass,
    unit: &PellUnit,
    u: u64,
    height: i128,
    steps: &[f64],
) -> Result<ResidueExtrapolation, ZetaError> {
    let reps = pair_slice(class, unit, u as i128, height)?;
    let h = height as f64;
    let upper = reps.iter().filter(|r| 2 * r.height > height).count() as f64;
    let rho = upper / (h / 2.0);
    let mut samples = Vec::new();
    for &d in steps {
        let s = 1.0 + d;
        let partial = sorted_sum(reps.iter().map(|r| (r.height as f64).powf(-s)).collect());
        samples.push((s, d * (partial + rho * h.powf(1.0 - s) / d)));
    }
    let values: Vec<f64> = samples.iter().map(|p| p.1).collect();
    let ratio = if steps.len() >= 2 { steps[0] / steps[1] } else { 2.0 };
    let (estimate, error) = richardson_limit(&values, ratio);
    Ok(ResidueExtrapolation { samples, density: rho, estimate, error })
}
