//! `E_∞(z, s)` of `Γ(N)` as `N^{-s} Σ_{u ∈ U} D_u(s) Σ_{(m,n) ≡ (0,u)} y^s |mz + n|^{-2s}` and as
//! the coset sum `N^{-s} Σ_{gcd(c,d)=1, (c,d) ≡ (0,1)} y^s |cz + d|^{-2s}`.
//!
//! Points are rational, `z = (p + i√r)/q`, so that `q²|mz + n|² = (mp + nq)² + m²r` is an
//! integer and truncation by `|mz + n|² <= R` is decided exactly.

use crate::dirichlet::{dirichlet_du_with, DuConvention, MoebiusSieve};
use crate::{scattering_series, sorted_sum, SeriesParams, Truncated, ZetaError};
use std::f64::consts::PI;
use xn_arith::{gcd_i, isqrt, Level};

/// `z = (p + i√r)/q` with `q > 0`, `r > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub p: i128,
    pub q: i128,
    pub r: i128,
}

impl RationalPoint {
    pub fn new(p: i128, q: i128, r: i128) -> Result<Self, ZetaError> {
        if q <= 0 || r <= 0 {
            return Err(ZetaError::Domain(format!("point ({p} + i√{r})/{q} is not in the upper half-plane")));
        }
        Ok(RationalPoint { p, q, r })
    }

    /// `x + iy` with `x = xn/xd`, `y = yn/yd`.
    pub fn from_parts(xn: i128, xd: i128, yn: i128, yd: i128) -> Result<Self, ZetaError> {
        if xd <= 0 || yd <= 0 || yn <= 0 {
            return Err(ZetaError::Domain("x + iy needs positive denominators and y > 0".into()));
        }
        Self::new(xn * yd, xd * yd, (yn * xd).pow(2))
    }

    pub fn x(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    pub fn y(&self) -> f64 {
        (self.r as f64).sqrt() / self.q as f64
    }

    /// `z + k`.
    pub fn translate(&self, k: i128) -> Self {
        RationalPoint { p: self.p + k * self.q, ..*self }
    }

    /// `q²|mz + n|²`.
    pub fn key(&self, m: i128, n: i128) -> i128 {
        let a = m * self.p + n * self.q;
        a * a + m * m * self.r
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -(-a).div_euclid(b)
}

/// Every `(m, n) ≡ (0, u) mod N`, `(m, n) != 0`, with `q²|mz + n|² <= key_bound`, as `(m, n, key)`.
fn lattice_points(n_level: i128, u: i128, z: &RationalPoint, key_bound: i128) -> Vec<(i128, i128, i128)> {
    let mut out = Vec::new();
    let m_max = isqrt((key_bound / z.r) as u128) as i128;
    let mut m = -(m_max - m_max.rem_euclid(n_level));
    while m <= m_max {
        let rest = key_bound - m * m * z.r;
        if rest >= 0 {
            let w = isqrt(rest as u128) as i128;
            let lo = div_ceil(-m * z.p - w, z.q);
            let hi = div_floor(-m * z.p + w, z.q);
            let mut n = lo + (u - lo).rem_euclid(n_level);
            while n <= hi {
                if m != 0 || n != 0 {
                    let k = z.key(m, n);
                    if k <= key_bound {
                        out.push((m, n, k));
                    }
                }
                n += n_level;
            }
        }
        m += n_level;
    }
    out
}

/// Sorted values `q²|mz + n|²` over `(m, n) ≡ (0, u)` inside the disc `|mz + n|² <= radius_sq`.
pub fn lattice_norms(level: Level, u: i128, z: &RationalPoint, radius_sq: f64) -> Vec<i128> {
    let key_bound = (radius_sq * (z.q * z.q) as f64).floor() as i128;
    let mut keys: Vec<i128> = lattice_points(level.get() as i128, u, z, key_bound).into_iter().map(|t| t.2).collect();
    keys.sort_unstable();
    keys
}

/// `Σ_{|w| > ρ} |w|^{-2s}` over a shifted lattice with covolume `area` and cell diameter `delta`.
fn lattice_tail(area: f64, delta: f64, rho: f64, s: f64) -> f64 {
    let r0 = rho - 2.0 * delta;
    if r0 <= 0.0 {
        return f64::INFINITY;
    }
    2.0 * PI / area * (r0.powf(2.0 - 2.0 * s) / (2.0 * s - 2.0) + delta * r0.powf(1.0 - 2.0 * s) / (2.0 * s - 1.0))
}

fn geometry(level: Level, z: &RationalPoint) -> (f64, f64) {
    let n = level.get() as f64;
    let (x, y) = (z.x(), z.y());
    let area = n * n * y;
    let delta = n * ((1.0 + x).hypot(y)).max((1.0 - x).hypot(y));
    (area, delta)
}

fn sum_keys(keys: &[i128], z: &RationalPoint, s: f64) -> f64 {
    let pref = ((z.r as f64).sqrt() * z.q as f64).powf(s);
    pref * sorted_sum(keys.iter().map(|&k| (k as f64).powf(-s)).collect())
}

fn check(s: f64, radius_sq: f64) -> Result<(), ZetaError> {
    if !(s > 1.0) || !(radius_sq > 0.0) {
        return Err(ZetaError::Domain(format!("Eisenstein sum needs s > 1 and R > 0, got s = {s}, R = {radius_sq}")));
    }
    Ok(())
}

/// Lattice form with the `du ≡ ±1` Dirichlet coefficients, truncated at `|mz + n|² <= radius_sq`.
pub fn eisenstein_lattice_sum(
    level: Level,
    z: &RationalPoint,
    s: f64,
    radius_sq: f64,
    params: &SeriesParams,
) -> Result<Truncated, ZetaError> {
    check(s, radius_sq)?;
    params.validate()?;
    let sieve = MoebiusSieve::new(params.bound);
    let (area, delta) = geometry(level, z);
    let y = z.y();
    let t_lat = y.powf(s) * lattice_tail(area, delta, radius_sq.sqrt(), s);
    let mut value = 0.0;
    let mut tail = 0.0;
    for u in level.unit_reps() {
        let du = dirichlet_du_with(&sieve, level, u, s, DuConvention::PlusMinus)?;
        let keys = lattice_norms(level, u as i128, z, radius_sq);
        let inner = sum_keys(&keys, z, s);
        value += du.value * inner;
        tail += du.value.abs() * t_lat + du.tail * (inner + t_lat);
    }
    let scale = (level.get() as f64).powf(-s);
    Ok(Truncated::new(scale * value, scale * tail))
}

/// Coset form over primitive bottom rows `(c, d) ≡ (0, 1) mod N`.
pub fn eisenstein_coset_sum(level: Level, z: &RationalPoint, s: f64, radius_sq: f64) -> Result<Truncated, ZetaError> {
    check(s, radius_sq)?;
    let key_bound = (radius_sq * (z.q * z.q) as f64).floor() as i128;
    let mut keys: Vec<i128> = lattice_points(level.get() as i128, 1, z, key_bound)
        .into_iter()
        .filter(|&(c, d, _)| gcd_i(c, d) == 1)
        .map(|t| t.2)
        .collect();
    keys.sort_unstable();
    let (area, delta) = geometry(level, z);
    let scale = (level.get() as f64).powf(-s);
    let tail = z.y().powf(s) * lattice_tail(area, delta, radius_sq.sqrt(), s);
    Ok(Truncated::new(scale * sum_keys(&keys, z, s), scale * tail))
}

/// `∫₀¹ E_∞(σ_∞(x + iy), s) dx` against `y^s + φ_{∞∞}(s) y^{1-s}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCoefficient {
    pub integral: Truncated,
    pub prediction: f64,
    pub phi: f64,
}

/// Trapezoid rule with `points` nodes in `x` (spectrally accurate for the periodic integrand),
/// `σ_∞ z = Nz`, and `y = yn/yd`.
pub fn eisenstein_zero_coeff(
    level: Level,
    yn: i128,
    yd: i128,
    s: f64,
    points: usize,
    radius_sq: f64,
    params: &SeriesParams,
) -> Result<ZeroCoefficient, ZetaError> {
    if points == 0 {
        return Err(ZetaError::Domain("at least one quadrature node".into()));
    }
    let n = level.get() as i128;
    let mut vals = Vec::with_capacity(points);
    let mut tail = 0.0f64;
    for j in 0..points {
        let z = RationalPoint::from_parts(n * j as i128, points as i128, n * yn, yd)?;
        let e = eisenstein_lattice_sum(level, &z, s, radius_sq, params)?;
        vals.push(e.value);
        tail = tail.max(e.tail);
    }
    let integral = vals.iter().sum::<f64>() / points as f64;
    let y = yn as f64 / yd as f64;
    let phi = scattering_series(level, s, 100_000, DuConvention::PlusMinus)?.value;
    Ok(ZeroCoefficient { integral: Truncated::new(integral, tail), prediction: y.powf(s) + phi * y.powf(1.0 - s), phi })
}
