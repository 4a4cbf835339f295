//! `D_u(s) = Σ μ(d) d^{-2s}` over `d` in the inverse class of `u` modulo `N`.

use crate::{SeriesParams, Truncated, ZetaError};
use num_traits::ToPrimitive;
use xn_arith::{mod_inverse, moebius_table, Level};
use xn_curve::curve_data;

/// Which residues `d` enter `D_u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DuConvention {
    /// `d u ≡ 1 mod N`.
    Strict,
    /// `d u ≡ ±1 mod N`.
    PlusMinus,
}

/// Möbius values `μ(0..=limit)`.
#[derive(Debug, Clone)]
pub struct MoebiusSieve {
    mu: Vec<i8>,
}

impl MoebiusSieve {
    pub fn new(limit: u64) -> Self {
        MoebiusSieve { mu: moebius_table(limit as usize) }
    }

    pub fn limit(&self) -> u64 {
        (self.mu.len() - 1) as u64
    }

    pub fn get(&self, d: u64) -> i8 {
        self.mu[d as usize]
    }
}

/// `D_u(s)` truncated at the sieve limit `B`, with tail bound `Σ_{d > B, d ≡ r} d^{-2s}`
/// `<= c (B^{-2s} + B^{1-2s}/(N(2s - 1)))`, `c` the number of admissible classes.
pub fn dirichlet_du_with(
    sieve: &MoebiusSieve,
    level: Level,
    u: u64,
    s: f64,
    conv: DuConvention,
) -> Result<Truncated, ZetaError> {
    if !(s > 0.5) {
        return Err(ZetaError::Domain(format!("D_u(s) needs s > 1/2, got {s}")));
    }
    let n = level.get();
    let inv = mod_inverse((u % n) as i64, n as i64)? as u64;
    let classes: Vec<u64> = match conv {
        DuConvention::Strict => vec![inv],
        DuConvention::PlusMinus => vec![inv, n - inv],
    };
    let b = sieve.limit();
    let mut terms = Vec::new();
    for &r in &classes {
        let mut d = if r == 0 { n } else { r };
        while d <= b {
            let m = sieve.get(d);
            if m != 0 {
                terms.push(m as f64 * (d as f64).powf(-2.0 * s));
            }
            d += n;
        }
    }
    let bf = b as f64;
    let tail = classes.len() as f64 * (bf.powf(-2.0 * s) + bf.powf(1.0 - 2.0 * s) / (n as f64 * (2.0 * s - 1.0)));
    Ok(Truncated::new(crate::sorted_sum(terms), tail))
}

/// [`dirichlet_du_with`] using a fresh sieve of size `params.bound`, failing if the tail exceeds
/// `params.tolerance`.
pub fn dirichlet_du(
    level: Level,
    u: u64,
    s: f64,
    conv: DuConvention,
    params: &SeriesParams,
) -> Result<Truncated, ZetaError> {
    params.validate()?;
    let sieve = MoebiusSieve::new(params.bound);
    let r = dirichlet_du_with(&sieve, level, u, s, conv)?;
    if r.tail > params.tolerance {
        return Err(ZetaError::Tolerance { achieved: r.tail, requested: params.tolerance });
    }
    Ok(r)
}

/// `Σ_{u ∈ U} D_u(1)` under both conventions against the closed value `N³/(π v_Γ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DuConstantReport {
    pub strict: Truncated,
    pub plus_minus: Truncated,
    /// `N³/(π v_Γ) = N³/(π²·vol_over_pi)`.
    pub closed: f64,
    /// `(6/π²)/∏_{p|N}(1 - p^{-2})`.
    pub euler_product: f64,
}

impl DuConstantReport {
    pub fn strict_discrepancy(&self) -> f64 {
        self.strict.value - self.closed
    }

    pub fn plus_minus_discrepancy(&self) -> f64 {
        self.plus_minus.value - self.closed
    }
}

pub fn sum_du_constant(level: Level, params: &SeriesParams) -> Result<DuConstantReport, ZetaError> {
    params.validate()?;
    let sieve = MoebiusSieve::new(params.bound);
    let mut strict = Truncated::new(0.0, 0.0);
    let mut pm = Truncated::new(0.0, 0.0);
    for u in level.unit_reps() {
        let a = dirichlet_du_with(&sieve, level, u, 1.0, DuConvention::Strict)?;
        let b = dirichlet_du_with(&sieve, level, u, 1.0, DuConvention::PlusMinus)?;
        strict = Truncated::new(strict.value + a.value, strict.tail + a.tail);
        pm = Truncated::new(pm.value + b.value, pm.tail + b.tail);
    }
    let cd = curve_data(level.get() as i64)?;
    let n3 = (level.get() as f64).powi(3);
    let pi2 = std::f64::consts::PI.powi(2);
    let closed = n3 / (pi2 * cd.vol_over_pi.to_f64().unwrap_or(f64::NAN));
    let euler_product = 6.0 / pi2 / level.primes().iter().map(|&p| 1.0 - (p as f64).powi(-2)).product::<f64>();
    Ok(DuConstantReport { strict, plus_minus: pm, closed, euler_product })
}
