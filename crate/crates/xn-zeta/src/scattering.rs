//! The scattering function `φ_{∞∞}(s)` of `Γ(N)` from the lower-row census of
//! `σ_∞^{-1} Γ σ_∞`, its closed form, and the scattering constants `𝒞_{∞∞}`, `𝒞_{0_ξ∞}`.

use crate::dirichlet::DuConvention;
use crate::{sorted_sum, Truncated, ZetaError};
use num_traits::ToPrimitive;
use statrs::function::gamma::ln_gamma;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use xn_arith::{factorize, gcd, ratio, BigRational, Fixed, Level, LogLinear};
use xn_curve::curve_data;
use xn_numerics::{richardson_limit, zeta};

/// Census values `c(1..=kmax)`: the number of `d mod N²k` with `d ≡ 1 mod N` (`Strict`) or
/// `d ≡ ±1 mod N` (`PlusMinus`) and `gcd(d, Nk) = 1`. `PlusMinus` counts both signs of the
/// lower-left entry `±Nk`, i.e. all double cosets of `Γ_∞ \ Γ(N) / Γ_∞`.
fn census_table(level: Level, kmax: usize, conv: DuConvention) -> Vec<u64> {
    let n = level.get();
    let mut num: Vec<u64> = (0..=kmax as u64).collect();
    let mut is_comp = vec![false; kmax + 1];
    for p in 2..=kmax {
        if is_comp[p] {
            continue;
        }
        for m in (p * p..=kmax).step_by(p) {
            is_comp[m] = true;
        }
        if n.is_multiple_of(p as u64) {
            continue;
        }
        for m in (p..=kmax).step_by(p) {
            num[m] = num[m] / p as u64 * (p as u64 - 1);
        }
    }
    let mult = match conv {
        DuConvention::Strict => n,
        DuConvention::PlusMinus => 2 * n,
    };
    num.iter().map(|&f| f * mult).collect()
}

/// The census value `c(k)` from its multiplicative closed form `c·N k ∏_{p|k, p∤N}(1 - 1/p)`.
pub fn census_count(level: Level, k: u64, conv: DuConvention) -> u64 {
    let n = level.get();
    let mut f = k;
    for (p, _) in factorize(k) {
        if !n.is_multiple_of(p) {
            f = f / p * (p - 1);
        }
    }
    match conv {
        DuConvention::Strict => n * f,
        DuConvention::PlusMinus => 2 * n * f,
    }
}

/// Brute oracle: `d ∈ [0, N²k)` for which some `a ∈ [0, N²k)` makes
/// `[[a, (ad - 1)/(Nk)], [Nk, d]]` integral and `≡ I` (or `≡ ±I`) mod `N`.
pub fn census_brute(level: Level, k: u64, conv: DuConvention) -> u64 {
    let n = level.get() as i128;
    let c = n * k as i128;
    let m = n * c;
    let signs: &[i128] = match conv {
        DuConvention::Strict => &[1],
        DuConvention::PlusMinus => &[1, -1],
    };
    let mut count = 0;
    for d in 0..m {
        if gcd(d as u64, c as u64) != 1 {
            continue;
        }
        let hit = signs.iter().any(|&e| {
            (d - e).rem_euclid(n) == 0
                && (0..m).any(|a| {
                    let ad = a * d - 1;
                    ad % c == 0 && (a - e).rem_euclid(n) == 0 && (ad / c).rem_euclid(n) == 0
                })
        });
        if hit {
            count += 1;
        }
    }
    count
}

/// `√π Γ(s - ½)/Γ(s)`.
fn gamma_ratio(s: f64) -> f64 {
    PI.sqrt() * (ln_gamma(s - 0.5) - ln_gamma(s)).exp()
}

fn check_s(s: f64) -> Result<(), ZetaError> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(ZetaError::Domain(format!("φ(s) series needs s > 1, got {s}")));
    }
    Ok(())
}

/// `φ_{∞∞}(s) = √π Γ(s - ½)/Γ(s) Σ_{k <= kmax} c(k) (N²k)^{-2s}` with the bound
/// `c(k) <= 2Nk` giving the tail `2N^{1-4s} K^{2-2s}/(2s - 2)` (halved for `Strict`).
pub fn scattering_series(level: Level, s: f64, kmax: u64, conv: DuConvention) -> Result<Truncated, ZetaError> {
    check_s(s)?;
    if kmax == 0 {
        return Err(ZetaError::Domain("census bound must be positive".into()));
    }
    let n = level.get() as f64;
    let table = census_table(level, kmax as usize, conv);
    let terms = (1..=kmax as usize).map(|k| table[k] as f64 * (n * n * k as f64).powf(-2.0 * s)).collect();
    let g = gamma_ratio(s);
    let mult = if conv == DuConvention::Strict { 1.0 } else { 2.0 };
    let tail = g * mult * n.powf(1.0 - 4.0 * s) * (kmax as f64).powf(2.0 - 2.0 * s) / (2.0 * s - 2.0);
    Ok(Truncated::new(g * sorted_sum(terms), tail))
}

/// Closed form of the `PlusMinus` series:
/// `√π Γ(s - ½)/Γ(s) · 2N^{1-4s} ζ(2s - 1)/ζ(2s) · ∏_{p|N}(1 - p^{-2s})^{-1}`.
pub fn scattering_closed(level: Level, s: f64) -> Result<f64, ZetaError> {
    check_s(s)?;
    let n = level.get() as f64;
    let euler: f64 = level.primes().iter().map(|&p| 1.0 / (1.0 - (p as f64).powf(-2.0 * s))).product();
    Ok(gamma_ratio(s) * 2.0 * n.powf(1.0 - 4.0 * s) * zeta(2.0 * s - 1.0) / zeta(2.0 * s) * euler)
}

/// `(s - 1)φ(s)` sampled on `s - 1 = h, h/2, h/4, …` and extrapolated to `s = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueEstimate {
    pub samples: Vec<(f64, f64)>,
    pub estimate: f64,
    pub error: f64,
}

/// Series truncated at `kmax` plus the density tail `ρ̂ Σ_{k > K} k^{1-2s}`, `ρ̂` the mean of
/// `c(k)/k` over `(K/2, K]`; then Richardson extrapolation in `s - 1`.
pub fn scattering_residue_estimate(
    level: Level,
    h0: f64,
    steps: usize,
    kmax: u64,
) -> Result<ResidueEstimate, ZetaError> {
    if !(h0 > 0.0) || steps == 0 || kmax < 2 {
        return Err(ZetaError::Domain("residue extrapolation needs h0 > 0, steps >= 1, kmax >= 2".into()));
    }
    let n = level.get() as f64;
    let table = census_table(level, kmax as usize, DuConvention::PlusMinus);
    let lo = (kmax / 2) as usize + 1;
    let rho = (lo..=kmax as usize).map(|k| table[k] as f64 / k as f64).sum::<f64>() / (kmax as usize + 1 - lo) as f64;
    let kf = kmax as f64;
    let mut samples = Vec::with_capacity(steps);
    for j in 0..steps {
        let h = h0 / 2f64.powi(j as i32);
        let s = 1.0 + h;
        let head =
            sorted_sum((1..=kmax as usize).map(|k| table[k] as f64 * (n * n * k as f64).powf(-2.0 * s)).collect());
        // Σ_{k > K} k^{1-2s} ≈ K^{2-2s}/(2s - 2) - K^{1-2s}/2
        let tail = rho * n.powf(-4.0 * s) * (kf.powf(2.0 - 2.0 * s) / (2.0 * s - 2.0) - kf.powf(1.0 - 2.0 * s) / 2.0);
        samples.push((s, h * gamma_ratio(s) * (head + tail)));
    }
    let values: Vec<f64> = samples.iter().map(|p| p.1).collect();
    let (estimate, error) = if values.len() == 1 { (values[0], f64::INFINITY) } else { richardson_limit(&values, 2.0) };
    Ok(ResidueEstimate { samples, estimate, error })
}

/// The plug-in `κ(ξ̃; 1, N)`; only `Σ_{ξ ∈ U} κ(ξ) = 0` is used.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Kappa {
    #[default]
    Zero,
    /// Values on the representatives `U`, keyed by `ξ mod N` with `ξ < N/2`.
    Table(BTreeMap<u64, f64>),
}

impl Kappa {
    /// A table covering every `u ∈ U` and satisfying the orthogonality relation to `1e-12`.
    pub fn table(level: Level, values: BTreeMap<u64, f64>) -> Result<Self, ZetaError> {
        let reps = level.unit_reps();
        let mut sum = Vec::with_capacity(reps.len());
        for u in &reps {
            sum.push(*values.get(u).ok_or(ZetaError::KappaMissing(*u))?);
        }
        let scale = sum.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let total = sorted_sum(sum);
        if total.abs() > 1e-12 * scale {
            return Err(ZetaError::KappaOrthogonality(total));
        }
        Ok(Kappa::Table(values))
    }

    /// `κ(ξ)`, with `ξ` reduced to its representative in `U`.
    pub fn value(&self, level: Level, xi: i64) -> Result<f64, ZetaError> {
        let n = level.get();
        let r = xi.rem_euclid(n as i64) as u64;
        if gcd(r, n) != 1 {
            return Err(xn_curve::CurveError::NotCoprime { xi, n }.into());
        }
        match self {
            Kappa::Zero => Ok(0.0),
            Kappa::Table(t) => {
                let key = r.min(n - r);
                t.get(&key).copied().ok_or(ZetaError::KappaMissing(key))
            }
        }
    }
}

/// `prefactor/π · (𝒞 + logs) + kappa`, with `𝒞 = 1 - log 4π + ζ'(-1)/ζ(-1)` carried to 80 digits.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatteringConstant {
    pub level: Level,
    /// `2/(v_Γ/π)`.
    pub prefactor: BigRational,
    pub logs: LogLinear,
    pub kappa: f64,
}

impl ScatteringConstant {
    pub fn to_fixed(&self) -> Fixed {
        let inner = Fixed::scattering_c() + self.logs.to_fixed();
        let scaled = inner.mul_ratio(&self.prefactor).div(&Fixed::pi()).expect("π is nonzero");
        scaled + Fixed::from_f64(self.kappa)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_fixed().to_f64()
    }

    /// `𝒞 + logs`, without the `2/v_Γ` factor and `κ`.
    pub fn bracket(&self) -> f64 {
        (Fixed::scattering_c() + self.logs.to_fixed()).to_f64()
    }
}

impl fmt::Display for ScatteringConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/π)·(𝒞 + {})", self.prefactor, self.logs)?;
        if self.kappa != 0.0 {
            write!(f, " + {}", self.kappa)?;
        }
        Ok(())
    }
}

fn prefactor(level: Level) -> Result<BigRational, ZetaError> {
    let cd = curve_data(level.get() as i64)?;
    Ok(ratio(2, 1) / cd.vol_over_pi)
}

fn log_n(level: Level, c: i64) -> LogLinear {
    let mut l = LogLinear::zero();
    for (p, e) in factorize(level.get()) {
        l.add_term(p, ratio(c * e as i64, 1));
    }
    l
}

/// `𝒞_{∞∞} = 2v_Γ^{-1}(𝒞 - 2 log N - Σ_{p|N} log p/(p² - 1))`.
pub fn scattering_constant_inf_inf(level: Level) -> Result<ScatteringConstant, ZetaError> {
    let mut logs = log_n(level, -2);
    for p in level.primes() {
        let p = p as i64;
        logs.add_term(p as u64, ratio(-1, p * p - 1));
    }
    Ok(ScatteringConstant { level, prefactor: prefactor(level)?, logs, kappa: 0.0 })
}

/// `𝒞_{0_ξ∞} = 2v_Γ^{-1}(𝒞 - log N + Σ_{p|N} p log p/(p² - 1)) + κ(ξ)`.
pub fn scattering_constant_zero_xi(level: Level, xi: i64, kappa: &Kappa) -> Result<ScatteringConstant, ZetaError> {
    let k = kappa.value(level, xi)?;
    let mut logs = log_n(level, -1);
    for p in level.primes() {
        let p = p as i64;
        logs.add_term(p as u64, ratio(p, p * p - 1));
    }
    Ok(ScatteringConstant { level, prefactor: prefactor(level)?, logs, kappa: k })
}

/// `1/v_Γ` as a float, the expected residue of `φ_{∞∞}`.
pub fn inverse_volume(level: Level) -> Result<f64, ZetaError> {
    let cd = curve_data(level.get() as i64)?;
    Ok(1.0 / (PI * cd.vol_over_pi.to_f64().unwrap_or(f64::NAN)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv() -> Level {
        Level::new(15).unwrap()
    }

    #[test]
    fn census_table_matches_closed() {
        let t = census_table(lv(), 200, DuConvention::PlusMinus);
        for k in 1..=200u64 {
            assert_eq!(t[k as usize], census_count(lv(), k, DuConvention::PlusMinus));
        }
        assert_eq!(census_count(lv(), 1, DuConvention::Strict), 15);
        assert_eq!(census_count(lv(), 2, DuConvention::Strict), 15);
        assert_eq!(census_count(lv(), 3, DuConvention::Strict), 45);
    }

    #[test]
    fn series_against_closed() {
        for s in [1.5, 2.0, 3.0] {
            let t = scattering_series(lv(), s, 100_000, DuConvention::PlusMinus).unwrap();
            let c = scattering_closed(lv(), s).unwrap();
            assert!((t.value - c).abs() <= t.tail + 1e-15 * c, "s={s}: {} vs {c} (tail {})", t.value, t.tail);
        }
    }

    #[test]
    fn constants_at_15() {
        let c = scattering_constant_inf_inf(lv()).unwrap();
        assert_eq!(c.prefactor, ratio(1, 240));
        assert!((c.to_f64() + 6.852e-3).abs() < 1e-6, "{}", c.to_f64());
        let z = scattering_constant_zero_xi(lv(), 2, &Kappa::Zero).unwrap();
        assert!((z.to_f64() + 1.998e-3).abs() < 1e-6, "{}", z.to_f64());
    }
}
