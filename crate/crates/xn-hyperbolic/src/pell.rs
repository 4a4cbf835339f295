//! Pell units `ε = (t + v√D)/2` generating the congruence unit group `U₊(N)`.

use crate::{HypError, HyperbolicClass};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use xn_arith::{isqrt, BigInt, BigRational, Matrix2, QuadSurd};

/// Solution `(t, v)` of `t² - D v² = 4·sign` with `t, v > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub t: BigInt,
    pub v: BigInt,
    /// `+1` or `-1`: the norm of `(t + v√D)/2`.
    pub norm: i8,
}

/// The generator of the totally positive units `≡ 1 mod N` of the order of discriminant `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct PellUnit {
    pub disc: i128,
    pub n: u64,
    pub t: BigInt,
    pub v: BigInt,
    pub eps: QuadSurd,
    pub log_eps: f64,
    /// The fundamental unit of norm `±1` and the power of it that gives `eps`.
    pub fundamental: PellSolution,
    pub power: u32,
}

impl PellUnit {
    /// `ε² = (t₂ + v₂√D)/2`.
    pub fn squared(&self) -> (BigInt, BigInt) {
        mul_pair(&self.t, &self.v, &self.t, &self.v, &BigInt::from(self.disc))
    }

    /// The stabilizer `[[(t - bv)/2, -cv], [av, (t + bv)/2]]` of `f_γ` realizing `ε`.
    pub fn stabilizer(&self, class: &HyperbolicClass) -> Result<Matrix2, HypError> {
        stabilizer_matrix(class, &self.t, &self.v)
    }
}

/// The matrix attached to a solution `(t, v)` of `t² - Dv² = 4` for the class `(a, b, c)`.
pub fn stabilizer_matrix(class: &HyperbolicClass, t: &BigInt, v: &BigInt) -> Result<Matrix2, HypError> {
    let conv = |x: BigInt| x.to_i128().ok_or(HypError::Overflow("stabilizer entry"));
    let (a, b, c) = (BigInt::from(class.a), BigInt::from(class.b), BigInt::from(class.c));
    let m11 = conv((t - &b * v) / 2)?;
    let m12 = conv(-(&c * v))?;
    let m21 = conv(&a * v)?;
    let m22 = conv((t + &b * v) / 2)?;
    Ok(Matrix2::new(m11, m12, m21, m22)?)
}

/// `(t₁ + v₁√D)/2 · (t₂ + v₂√D)/2 = (t + v√D)/2`.
fn mul_pair(t1: &BigInt, v1: &BigInt, t2: &BigInt, v2: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
    ((t1 * t2 + d * v1 * v2) / 2, (t1 * v2 + t2 * v1) / 2)
}

fn check_radicand(d: i128) -> Result<(), HypError> {
    if d <= 0 || xn_arith::is_square(d) {
        return Err(HypError::SquareDiscriminant(d));
    }
    Ok(())
}

/// Least `(t, v)` with `t, v > 0` and `t² - Dv² = ±4`.
///
/// For `D > 16` every such solution has `t/v` or `(t/2)/(v/2)` among the continued-fraction
/// convergents of `√D`; smaller `D` are scanned directly.
pub fn fundamental_solution(d: i128) -> Result<PellSolution, HypError> {
    check_radicand(d)?;
    if d <= 16 {
        for v in 1u128.. {
            let dv2 = d as u128 * v * v;
            for (s, norm) in [(dv2.wrapping_sub(4), -1i8), (dv2 + 4, 1i8)] {
                if dv2 < 4 && norm < 0 {
                    continue;
                }
                let t = isqrt(s);
                if t * t == s && t > 0 {
                    return Ok(PellSolution { t: BigInt::from(t), v: BigInt::from(v), norm });
                }
            }
        }
    }
    let db = BigInt::from(d);
    let a0 = isqrt(d as u128) as i128;
    let (mut m, mut den, mut a) = (0i128, 1i128, a0);
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(a0));
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    let mut best: Option<PellSolution> = None;
    loop {
        let val = &p * &p - &db * &q * &q;
        let cand = match val.to_i64() {
            Some(4) => Some((p.clone(), q.clone(), 1)),
            Some(-4) => Some((p.clone(), q.clone(), -1)),
            Some(1) => Some((&p * 2, &q * 2, 1)),
            Some(-1) => Some((&p * 2, &q * 2, -1)),
            _ => None,
        };
        if let Some((t, v, norm)) = cand {
            if best.as_ref().is_none_or(|b| v < b.v) {
                best = Some(PellSolution { t, v, norm });
            }
        }
        if let Some(b) = &best {
            if q > b.v {
                return Ok(best.unwrap());
            }
        }
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        let p_next = BigInt::from(a) * &p + &p_prev;
        let q_next = BigInt::from(a) * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

/// `N | v` and `(t - v)/2 ≡ 1 mod N`; given `N | v` the latter is `t ≡ 2 mod N`.
fn satisfies_congruence(t: &BigInt, v: &BigInt, n: u64) -> bool {
    let nb = BigInt::from(n);
    v.mod_floor(&nb).is_zero() && (t - 2i32).mod_floor(&nb).is_zero()
}

fn ln_unit(sol: &PellSolution, d: i128) -> f64 {
    let t = sol.t.to_f64().unwrap_or(f64::INFINITY);
    let v = sol.v.to_f64().unwrap_or(f64::INFINITY);
    if sol.norm > 0 {
        (v * (d as f64).sqrt() / 2.0).asinh()
    } else {
        (t / 2.0).asinh()
    }
}

/// Least power of the fundamental unit with norm 1, `N | v` and `(t - v)/2 ≡ 1 mod N`.
pub fn pell_unit(n: u64, d: i128, max_power: u32) -> Result<PellUnit, HypError> {
    let fund = fundamental_solution(d)?;
    let db = BigInt::from(d);
    let (mut t, mut v) = (fund.t.clone(), fund.v.clone());
    for k in 1..=max_power {
        let norm_ok = fund.norm > 0 || k % 2 == 0;
        if norm_ok && satisfies_congruence(&t, &v, n) {
            let eps = QuadSurd::new(
                db.clone(),
                BigRational::new(t.clone(), 2.into()),
                BigRational::new(v.clone(), 2.into()),
            )?;
            let log_eps = k as f64 * ln_unit(&fund, d);
            return Ok(PellUnit { disc: d, n, t, v, eps, log_eps, fundamental: fund, power: k });
        }
        let next = mul_pair(&t, &v, &fund.t, &fund.v, &db);
        t = next.0;
        v = next.1;
    }
    Err(HypError::PellBound { d, n, max_power })
}

/// Brute-force oracle: the least `v >= 1` with `Dv² + 4 = t²` meeting the same congruences.
pub fn pell_unit_brute(n: u64, d: i128, v_limit: u128) -> Option<(u128, u128)> {
    (1..=v_limit).find_map(|v| {
        let s = d as u128 * v * v + 4;
        let t = isqrt(s);
        (t * t == s && satisfies_congruence(&BigInt::from(t), &BigInt::from(v), n)).then_some((t, v))
    })
}

/// Exponent `k` with `(t + v√D)/2 = ε^k`, if any (`|k| <= max_k`).
pub fn unit_exponent(unit: &PellUnit, t: &BigInt, v: &BigInt, max_k: u32) -> Option<i64> {
    let db = BigInt::from(unit.disc);
    let target =
        QuadSurd::new(db, BigRational::new(t.clone(), 2.into()), BigRational::new(v.clone(), 2.into())).ok()?;
    let inv = unit.eps.conjugate();
    let (mut pos, mut neg) = (
        QuadSurd::rational(unit.eps.radicand(), BigRational::one()),
        QuadSurd::rational(unit.eps.radicand(), BigRational::one()),
    );
    for k in 0..=max_k as i64 {
        if pos == target {
            return Some(k);
        }
        if neg == target {
            return Some(-k);
        }
        pos = pos.mul(&unit.eps).ok()?;
        neg = neg.mul(&inv).ok()?;
    }
    None
}
