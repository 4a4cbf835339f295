//! The hyperbolic and parabolic contributions to the constant `ℛ∞`, the truncated theta
//! series `Θ_Γ`, and the closed-form `ℛ∞` in the limit `T → ∞`.

use crate::kernels::{eta_l, heat_g_unchecked, heat_partial};
use crate::laurent::{euler_gamma, m1_laurent, scattering_c};
use crate::params::{PipelineParams, Source, Tagged};
use crate::{KernelParams, SpectralError};
use std::f64::consts::PI;
use xn_arith::Level;
use xn_curve::curve_data;
use xn_hyperbolic::{class_representatives, pell_unit};
use xn_numerics::QuadSpec;
use xn_zeta::{inverse_volume, scattering_constant_inf_inf};

/// `ℛ∞^hyp = (v_Γ^{-1}/2)(σ - T + 1)` where `σ = lim_{s→1}(Z'/Z(s) - 1/(s-1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicTerm {
    pub value: f64,
    pub selberg_source: Source,
    pub dropped: &'static str,
}

pub fn r_inf_hyp(level: Level, p: &KernelParams, selberg_limit: &Tagged<f64>) -> Result<HyperbolicTerm, SpectralError> {
    let inv_v = inverse_volume(level)?;
    Ok(HyperbolicTerm {
        value: inv_v / 2.0 * (selberg_limit.value - p.t() + 1.0),
        selberg_source: selberg_limit.source,
        dropped: "o(1) as T → ∞",
    })
}

/// `Θ_Γ(t)` restricted to traces `2 < l <= L` and to classes met by a bounded form search.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaTruncation {
    pub value: f64,
    pub classes: usize,
    /// Traces that contributed at least one class.
    pub traces: Vec<i64>,
    /// False if any class census was cut off by the entry bound.
    pub complete: bool,
}

struct ThetaClassGroup {
    l: i64,
    count: usize,
    weight: f64,
    u: f64,
    complete: bool,
}

fn theta_groups(level: Level, trace_bound: i64, entry_bound: i64) -> Result<Vec<ThetaClassGroup>, SpectralError> {
    if trace_bound <= 0 || entry_bound <= 0 {
        return Err(SpectralError::Domain(format!("bounds must be positive: L = {trace_bound}, E = {entry_bound}")));
    }
    let n = level.get() as i128;
    let mut out = Vec::new();
    for l in 3..=trace_bound {
        let l2 = l as i128 * l as i128 - 4;
        if l2 % (n * n) != 0 {
            continue;
        }
        let census = class_representatives(level, l as i128, entry_bound as i128);
        if census.classes.is_empty() {
            continue;
        }
        let unit = pell_unit(level.get(), l2 / (n * n), 10_000)?;
        out.push(ThetaClassGroup {
            l,
            count: census.classes.len(),
            weight: unit.log_eps / (l2 as f64).sqrt(),
            u: 2.0 * eta_l(l)?.ln(),
            complete: census.complete,
        });
    }
    Ok(out)
}

/// `Σ_l Σ_γ (log ε_γ/√(l² - 4)) g(t, 2 log η_l)`, with `ε_γ` the generator of `U₊(N)` for the
/// discriminant of `γ`.
pub fn theta_gamma(level: Level, t: f64, trace_bound: i64, entry_bound: i64) -> Result<ThetaTruncation, SpectralError> {
    if !(t > 0.0) {
        return Err(SpectralError::Domain(format!("t = {t} must be positive")));
    }
    let groups = theta_groups(level, trace_bound, entry_bound)?;
    let value = groups.iter().map(|g| g.count as f64 * g.weight * heat_g_unchecked(t, g.u)).sum();
    Ok(ThetaTruncation {
        value,
        classes: groups.iter().map(|g| g.count).sum(),
        traces: groups.iter().map(|g| g.l).collect(),
        complete: groups.iter().all(|g| g.complete),
    })
}

/// `∫₀^T Θ_Γ(t) dt` for the same truncation.
pub fn theta_gamma_integral(
    level: Level,
    t_max: f64,
    trace_bound: i64,
    entry_bound: i64,
    spec: QuadSpec,
) -> Result<f64, SpectralError> {
    if !(t_max > 0.0) {
        return Err(SpectralError::Domain(format!("T = {t_max} must be positive")));
    }
    let mut total = 0.0;
    for g in theta_groups(level, trace_bound, entry_bound)? {
        total += g.count as f64 * g.weight * heat_partial(g.u, t_max, spec)?.0;
    }
    Ok(total)
}

/// The `T`-dependent constants of the parabolic contribution.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParabolicConstants {
    pub c1: Tagged<f64>,
    pub c2: Tagged<f64>,
    pub c3: Tagged<f64>,
    pub c4: Tagged<f64>,
}

/// Terms of `ℛ∞^par` at a finite `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParabolicBreakdown {
    /// `(12/πN)(C₁(T) + A₂(T)(2𝒞 + γ - 2 log N))`.
    pub m1_constant: f64,
    /// `(1 - log 4π)/(4π)`.
    pub log4pi: f64,
    /// `γ C₂(T) + C₃(T)`.
    pub m2_extra: f64,
    /// `𝒞_{∞∞}/2`.
    pub scattering_half: f64,
    /// `v_Γ^{-1}(T + 1)/2`.
    pub volume_term: f64,
    pub c4: f64,
    pub value: f64,
    pub provenance: Vec<(&'static str, Source)>,
}

pub fn r_inf_par(
    level: Level,
    p: &KernelParams,
    consts: &ParabolicConstants,
) -> Result<ParabolicBreakdown, SpectralError> {
    let m1 = m1_laurent(level, p, Some(consts.c1.value))?.jet()?.constant;
    let inv_v = inverse_volume(level)?;
    let log4pi = (1.0 - (4.0 * PI).ln()) / (4.0 * PI);
    let m2_extra = euler_gamma() * consts.c2.value + consts.c3.value;
    let scattering_half = scattering_constant_inf_inf(level)?.to_f64() / 2.0;
    let volume_term = inv_v * (p.t() + 1.0) / 2.0;
    let c4 = consts.c4.value;
    let value = m1 + log4pi + m2_extra + scattering_half + volume_term + c4;
    Ok(ParabolicBreakdown {
        m1_constant: m1,
        log4pi,
        m2_extra,
        scattering_half,
        volume_term,
        c4,
        value,
        provenance: vec![
            ("C1", consts.c1.source),
            ("C2", consts.c2.source),
            ("C3", consts.c3.source),
            ("C4", consts.c4.source),
        ],
    })
}

/// `ℛ∞` in the limit `T → ∞`, each bracket term kept separately.
#[derive(Debug, Clone, PartialEq)]
pub struct RInfBreakdown {
    pub genus: u64,
    /// `(v_Γ^{-1}/2)·σ`.
    pub selberg_term: f64,
    /// `(12/πN)(C₁ - 𝒞 - γ/2 + log N)`.
    pub c1_term: f64,
    /// `v_Γ^{-1}(𝒞 + 1 - 2 log N - Σ_{p|N} log p/(p² - 1))`.
    pub scattering_term: f64,
    /// `(1 - log 4π)/(4π)`.
    pub log4pi_term: f64,
    pub value: f64,
    pub provenance: Vec<(&'static str, Source)>,
}

impl RInfBreakdown {
    pub fn bracket(&self) -> f64 {
        self.selberg_term + self.c1_term + self.scattering_term + self.log4pi_term
    }
}

pub fn r_inf(level: Level, params: &PipelineParams) -> Result<RInfBreakdown, SpectralError> {
    let n = level.get() as f64;
    let cd = curve_data(level.get() as i64)?;
    let inv_v = inverse_volume(level)?;
    let cc = scattering_c();
    let logs: f64 = level.primes().iter().map(|&p| (p as f64).ln() / ((p * p - 1) as f64)).sum();
    let selberg_term = inv_v / 2.0 * params.selberg_limit.value;
    let c1_term = 12.0 / (PI * n) * (params.c1.value - cc - euler_gamma() / 2.0 + n.ln());
    let scattering_term = inv_v * (cc + 1.0 - 2.0 * n.ln() - logs);
    let log4pi_term = (1.0 - (4.0 * PI).ln()) / (4.0 * PI);
    let value = (selberg_term + c1_term + scattering_term + log4pi_term) / cd.genus as f64;
    Ok(RInfBreakdown {
        genus: cd.genus,
        selberg_term,
        c1_term,
        scattering_term,
        log4pi_term,
        value,
        provenance: vec![("C1", params.c1.source), ("selberg_limit", params.selberg_limit.source)],
    })
}

/// `∂(g_Γ ℛ∞)/∂ log N = 12/(πN) - 2v_Γ^{-1}`, read off the closed form.
pub fn r_inf_log_n_coefficient(level: Level) -> Result<f64, SpectralError> {
    Ok(12.0 / (PI * level.get() as f64) - 2.0 * inverse_volume(level)?)
}
