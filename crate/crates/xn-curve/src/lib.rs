//! Invariants of the principal congruence subgroup `Γ(N)` and the curve `X(N)`:
//! index, volume, genus, cusps, and the fiber combinatorics of its regular model
//! at primes dividing `N`.

use num_traits::ToPrimitive;
use thiserror::Error;
use xn_arith::{
    euler_phi, ext_gcd, factorize, gcd, is_prime, mod_inverse, ratio, ArithError, BigInt, BigRational, Level,
    LogLinear, Matrix2,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("ξ = {xi} is not coprime to N = {n}")]
    NotCoprime { xi: i64, n: u64 },
    #[error("{p} is not a prime divisor of N = {n}")]
    NotPrimeDivisor { p: u64, n: u64 },
    #[error("genus formula produced the non-integer {0}")]
    NonIntegralGenus(String),
    #[error("cusp coordinates ({alpha}, {beta}) are not coprime")]
    NonPrimitiveCusp { alpha: i64, beta: i64 },
}

/// Invariant record of `Γ(N)` acting on the upper half-plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    pub level: Level,
    /// `[PSL2(Z) : Γ̄(N)]`.
    pub index: u64,
    /// Hyperbolic volume divided by π.
    pub vol_over_pi: BigRational,
    pub genus: u64,
    pub cusp_count: u64,
}

impl CurveData {
    pub fn n(&self) -> u64 {
        self.level.get()
    }

    /// Hyperbolic volume `v_Γ`.
    pub fn volume(&self) -> f64 {
        self.vol_over_pi.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }

    /// Exact main-term coefficient `4π(g - 1)/v_Γ`, a rational number.
    pub fn main_coefficient(&self) -> BigRational {
        ratio(4 * (self.genus as i64 - 1), 1) / &self.vol_over_pi
    }
}

/// `[PSL2(Z) : Γ̄(M)]` for any `M >= 1`.
pub fn psl2_index(m: u64) -> u64 {
    match m {
        1 => 1,
        2 => 6,
        _ => {
            let mut num = m * m * m;
            for (p, _) in factorize(m) {
                num = num / (p * p) * (p * p - 1);
            }
            num / 2
        }
    }
}

/// Exact invariants of `Γ(N)`.
pub fn curve_data(n: i64) -> Result<CurveData, CurveError> {
    let level = Level::new(n)?;
    let index = psl2_index(level.get());
    let vol_over_pi = ratio(index as i64, 3);
    let g = BigRational::from_integer(BigInt::from(1)) + &vol_over_pi / ratio(4, 1) * (ratio(1, 1) - ratio(6, n));
    if !g.is_integer() {
        return Err(CurveError::NonIntegralGenus(g.to_string()));
    }
    let genus = g.to_integer().to_u64().ok_or_else(|| CurveError::NonIntegralGenus(g.to_string()))?;
    Ok(CurveData { level, index, vol_over_pi, genus, cusp_count: index / level.get() })
}

/// `|SL2(Z/N)| / 2` by enumerating every matrix modulo `N`.
pub fn brute_psl2_order(n: u64) -> u64 {
    let mut count = 0u64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let bc = b * c;
                for d in 0..n {
                    if (a * d + n * n - bc % n) % n == 1 % n {
                        count += 1;
                    }
                }
            }
        }
    }
    count / 2
}

/// `|SL2(Z/N)| / 2` by counting, for each `(a, b, c)`, the solutions `d` of `a d ≡ 1 + b c`.
pub fn counted_psl2_order(n: u64) -> u64 {
    let mut count = 0u64;
    for a in 0..n {
        let g = gcd(a, n);
        for b in 0..n {
            for c in 0..n {
                if (1 + b * c) % g == 0 {
                    count += g;
                }
            }
        }
    }
    count / 2
}

/// A cusp `α/β` of `Γ(N)` with its width and scaling matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspRep {
    pub alpha: i64,
    pub beta: i64,
    pub width: u64,
    /// `g_q ∈ SL2(Z)` with first column `(α, β)`; the full scaling matrix is `g_q·diag(√w, 1/√w)`.
    pub scaling: Matrix2,
}

impl CuspRep {
    pub fn new(alpha: i64, beta: i64, level: Level) -> Result<Self, CurveError> {
        let (g, x, y) = ext_gcd(alpha as i128, beta as i128);
        if g != 1 {
            return Err(CurveError::NonPrimitiveCusp { alpha, beta });
        }
        // α x + β y = 1  ->  [[α, -y], [β, x]]
        let scaling = Matrix2::new(alpha as i128, -y, beta as i128, x)?;
        Ok(CuspRep { alpha, beta, width: level.get(), scaling })
    }

    pub fn infinity(level: Level) -> Self {
        CuspRep { alpha: 1, beta: 0, width: level.get(), scaling: Matrix2::IDENTITY }
    }

    pub fn zero(level: Level) -> Self {
        Self::new(0, 1, level).expect("0/1 is primitive")
    }
}

/// The cusp `0_ξ = ((N-1)ξ̃ + 1)/ξ̃` with `ξ̃` the least nonnegative inverse of `ξ` mod `N`.
pub fn cusp_zero_xi(level: Level, xi: i64) -> Result<(CuspRep, i64), CurveError> {
    let n = level.get() as i64;
    let xt = mod_inverse(xi.rem_euclid(n), n).map_err(|_| CurveError::NotCoprime { xi, n: level.get() })?;
    let alpha = (n - 1) * xt + 1;
    Ok((CuspRep::new(alpha, xt, level)?, xt))
}

/// `Γ(N)`-equivalence of cusps: `(α₁, β₁) ≡ ±(α₂, β₂) mod N`.
pub fn cusp_equivalent(q1: &CuspRep, q2: &CuspRep, level: Level) -> bool {
    let n = level.get() as i64;
    let same = |s: i64| (q1.alpha - s * q2.alpha).rem_euclid(n) == 0 && (q1.beta - s * q2.beta).rem_euclid(n) == 0;
    same(1) || same(-1)
}

/// Combinatorics of the fiber of the regular model above a prime `p | N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberData {
    pub p: u64,
    /// Number of irreducible components.
    pub r_p: u64,
    /// Number of supersingular crossing points.
    pub s_p: u64,
    /// `Σ_{𝔭|p} log #k(𝔭) = φ(N/p) log p`, stored as the coefficient `φ(N/p)`.
    pub residue_coefficient: u64,
}

impl FiberData {
    pub fn residue_log_sum(&self) -> LogLinear {
        LogLinear::term(self.p, ratio(self.residue_coefficient as i64, 1))
    }
}

/// Fiber data with `s_p = N ∏_{p'|N}(p'^2 - 1) / (24 p (p + 1))`.
pub fn fiber_data(level: Level, p: u64) -> Result<FiberData, CurveError> {
    let n = level.get();
    if !is_prime(p) || !n.is_multiple_of(p) {
        return Err(CurveError::NotPrimeDivisor { p, n });
    }
    let prod: u64 = level.primes().iter().map(|q| q * q - 1).product();
    let num = n * prod;
    let den = 24 * p * (p + 1);
    debug_assert_eq!(num % den, 0);
    Ok(FiberData { p, r_p: p + 1, s_p: num / den, residue_coefficient: euler_phi(n / p) })
}

/// The alternative count `(p - 1)/24 · [PSL2(Z) : Γ̄(N/p)]`, kept for comparison.
pub fn s_p_index_formula(level: Level, p: u64) -> BigRational {
    ratio((p - 1) as i64, 24) * ratio(psl2_index(level.get() / p) as i64, 1)
}
