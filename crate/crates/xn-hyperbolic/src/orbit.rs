//! The lattices `M(u)`, the cosets `u/N + 𝔟` with `𝔟 = Z + Zθ`, and their orbits under the
//! stabilizer of `f_γ`.
//!
//! A point `(m, n) ∈ M(u)` corresponds to `ξ = u/N + n' + m'θ` with `(m, n) = (Nm', u + Nn')`,
//! `θ = -(b + √D)/(2a)`, and `f_γ(n, -m) = aN³·N(ξ)`. In integer coordinates
//! `ξ = L₁/(2aN)` and `ξ̄ = L₂/(2aN)` with `L₁ = P - m√D`, `L₂ = P + m√D`, `P = 2an - bm`.

use crate::{HypError, HyperbolicClass, PellUnit};
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use xn_arith::{ratio, sign_int_surd, BigInt, BigRational, QuadSurd};

/// Which component of `{N(ξ) > 0}` a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sheet {
    /// `ξ > 0` and `ξ̄ > 0`.
    Positive,
    /// `ξ < 0` and `ξ̄ < 0`.
    Negative,
}

/// A lattice point `(m, n)` with its height `f_γ(n, -m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitRep {
    pub height: i128,
    pub m: i128,
    pub n: i128,
    pub sheet: Sheet,
}

/// `(m, n) ≡ (0, u) mod N`.
pub fn lattice_member(n_level: u64, u: u64, m: i128, n: i128) -> bool {
    let nl = n_level as i128;
    m.rem_euclid(nl) == 0 && (n - u as i128).rem_euclid(nl) == 0
}

/// Membership in `M_u^{f_γ}`: `(m, n) ∈ M(u)` and `f_γ(n, -m) > 0`.
pub fn positive_member(class: &HyperbolicClass, u: u64, m: i128, n: i128) -> bool {
    lattice_member(class.level.get(), u, m, n) && class.height(m, n) > 0
}

/// Exact sign of `p + q√d`, in `i128` when the squares fit.
pub(crate) fn sign_surd(p: i128, q: i128, d: i128) -> Ordering {
    match (p.signum(), q.signum()) {
        (0, s) | (s, 0) => s.cmp(&0),
        (a, b) if a == b => a.cmp(&0),
        (a, _) => {
            let lhs = p.checked_mul(p);
            let rhs = q.checked_mul(q).and_then(|x| x.checked_mul(d));
            match (lhs, rhs) {
                (Some(l), Some(r)) => match l.cmp(&r) {
                    Ordering::Greater => a.cmp(&0),
                    Ordering::Less => 0.cmp(&a),
                    Ordering::Equal => Ordering::Equal,
                },
                _ => sign_int_surd(&BigInt::from(p), &BigInt::from(q), &BigInt::from(d)),
            }
        }
    }
}

/// The coset `u/N + 𝔟` together with the unit acting on it.
#[derive(Debug, Clone)]
pub struct OrbitLattice {
    pub class: HyperbolicClass,
    pub u: u64,
    pub theta: QuadSurd,
    pub unit: PellUnit,
}

impl OrbitLattice {
    pub fn new(class: &HyperbolicClass, u: u64, unit: &PellUnit) -> Result<Self, HypError> {
        let n = class.level.get();
        if xn_arith::gcd(u, n) != 1 {
            return Err(HypError::NotAUnit { u, n });
        }
        if unit.disc != class.disc {
            return Err(HypError::UnitMismatch { unit: unit.disc, class: class.disc });
        }
        let two_a = 2 * class.a as i64;
        let theta = QuadSurd::new(BigInt::from(class.disc), ratio(-(class.b as i64), two_a), ratio(-1, two_a))?;
        Ok(OrbitLattice { class: class.clone(), u, theta, unit: unit.clone() })
    }

    fn offset(&self) -> BigRational {
        ratio(self.u as i64, self.class.level.get() as i64)
    }

    /// `ξ = u/N + n' + m'θ`.
    pub fn xi(&self, m1: i128, n1: i128) -> QuadSurd {
        let base = self.offset() + BigRational::from_integer(BigInt::from(n1));
        QuadSurd::rational(self.theta.radicand(), base)
            .add(&self.theta.scale(&BigRational::from_integer(BigInt::from(m1))))
            .expect("same radicand")
    }

    /// Coordinates `(m', n')` of `ξ`, if `ξ ∈ u/N + 𝔟`.
    pub fn coordinates(&self, xi: &QuadSurd) -> Option<(i128, i128)> {
        if xi.radicand() != self.theta.radicand() {
            return None;
        }
        let m1 = xi.y() / self.theta.y();
        if !m1.is_integer() {
            return None;
        }
        let n1 = xi.x() - self.offset() - self.theta.x() * &m1;
        if !n1.is_integer() {
            return None;
        }
        Some((m1.to_integer().to_i128()?, n1.to_integer().to_i128()?))
    }

    /// `(m', n') ↦ (Nm', u + Nn')`.
    pub fn to_pair(&self, m1: i128, n1: i128) -> (i128, i128) {
        let n = self.class.n();
        (n * m1, self.u as i128 + n * n1)
    }

    pub fn from_pair(&self, m: i128, n: i128) -> Option<(i128, i128)> {
        let nl = self.class.n();
        lattice_member(nl as u64, self.u, m, n).then(|| (m / nl, (n - self.u as i128) / nl))
    }

    fn eps_sq_f64(&self) -> f64 {
        let e = self.unit.eps.to_f64();
        e * e
    }

    /// Totally positive `ξ ∈ u/N + 𝔟` in the slice `ξ̄ <= ξ < ε²ξ̄` with `aN³·N(ξ) <= bound`,
    /// enumerated in field coordinates with exact filtering. Sorted by `(m', n')`.
    pub fn field_slice(&self, bound: i128) -> Result<Vec<(i128, i128, QuadSurd)>, HypError> {
        if bound <= 0 {
            return Err(HypError::InvalidBound(bound));
        }
        let k = &self.class;
        let n = k.n();
        let scale = BigRational::from_integer(BigInt::from(k.a * n * n * n));
        let nu_max = bound as f64 / (k.a * n * n * n) as f64;
        let sqrt_d = (k.disc as f64).sqrt();
        let e2 = self.eps_sq_f64();
        let e2q = self.unit.eps.mul(&self.unit.eps)?;
        let u_n = self.u as f64 / n as f64;
        let mut out = Vec::new();
        let mut m1 = 0i128;
        loop {
            // δ = ξ - ξ̄ = -m'√D/a; the slice needs ξ̄ ∈ (δ/(ε²-1), x_max]
            let delta = -(m1 as f64) * sqrt_d / k.a as f64;
            let lo = if m1 == 0 { 0.0 } else { delta / (e2 - 1.0) };
            let hi = (-delta + (delta * delta + 4.0 * nu_max).sqrt()) / 2.0;
            if m1 != 0 && lo > hi * (1.0 + 1e-9) + 1e-9 {
                break;
            }
            // ξ̄ = u/N + n' - m'b/(2a) + m'√D/(2a)
            let shift = u_n - (m1 * k.b) as f64 / (2 * k.a) as f64 + m1 as f64 * sqrt_d / (2 * k.a) as f64;
            let n_lo = (lo - shift).floor() as i128 - 1;
            let n_hi = (hi - shift).ceil() as i128 + 1;
            for n1 in n_lo..=n_hi {
                let xi = self.xi(m1, n1);
                let conj = xi.conjugate();
                if !xi.is_totally_positive() || xi.compare_real(&conj)? == Ordering::Less {
                    continue;
                }
                if xi.compare_real(&e2q.mul(&conj)?)? != Ordering::Less {
                    continue;
                }
                let h = xi.norm() * &scale;
                if h > BigRational::from_integer(BigInt::from(bound)) {
                    continue;
                }
                out.push((m1, n1, xi));
            }
            m1 -= 1;
        }
        out.sort_by_key(|a| (a.0, a.1));
        Ok(out)
    }
}

/// `ε² = (t₂ + v₂√D)/2` as machine integers.
fn eps_sq_ints(unit: &PellUnit) -> Result<(i128, i128), HypError> {
    let (t2, v2) = unit.squared();
    Ok((t2.to_i128().ok_or(HypError::Overflow("ε²"))?, v2.to_i128().ok_or(HypError::Overflow("ε²"))?))
}

/// Totally positive slice `L₂ <= L₁ < ε²L₂` of `M(u)` with `0 < f_γ(n, -m) <= bound`, enumerated
/// in integer coordinates. Sorted by `(height, m, n)`.
pub fn pair_slice(class: &HyperbolicClass, unit: &PellUnit, u: i128, bound: i128) -> Result<Vec<OrbitRep>, HypError> {
    if bound <= 0 {
        return Err(HypError::InvalidBound(bound));
    }
    let (a, b, d, nl) = (class.a, class.b, class.disc, class.n());
    let (t2, v2) = eps_sq_ints(unit)?;
    let sqrt_d = (d as f64).sqrt();
    let e2 = unit.eps.to_f64().powi(2);
    let r = e2 - 1.0;
    // L₁L₂ = 4a f/N
    let k = 4.0 * a as f64 * bound as f64 / nl as f64 * (1.0 + 1e-12);
    let m_max = (r * k.sqrt() / (2.0 * e2.sqrt() * sqrt_d)).ceil() as i128 + nl;
    let mut out = Vec::new();
    let mut m = 0i128;
    while -m <= m_max {
        let s = -(m as f64) * sqrt_d;
        let l2_lo = if m == 0 { 0.0 } else { 2.0 * s / r };
        let l2_hi = -s + (s * s + k).sqrt();
        if l2_lo <= l2_hi * (1.0 + 1e-9) + 1e-9 {
            // P = L₂ + s, n = (P + bm)/(2a)
            let n_lo = ((l2_lo + s + (b * m) as f64) / (2 * a) as f64).floor() as i128 - 1;
            let n_hi = ((l2_hi + s + (b * m) as f64) / (2 * a) as f64).ceil() as i128 + 1;
            let mut n = n_lo + (u - n_lo).rem_euclid(nl);
            while n <= n_hi {
                if let Some(rep) = slice_check(class, t2, v2, m, n, bound) {
                    out.push(rep);
                }
                n += nl;
            }
        }
        m -= nl;
    }
    out.sort();
    Ok(out)
}

fn slice_check(class: &HyperbolicClass, t2: i128, v2: i128, m: i128, n: i128, bound: i128) -> Option<OrbitRep> {
    let h = class.height(m, n);
    if h <= 0 || h > bound || m > 0 {
        return None;
    }
    let d = class.disc;
    let p = 2 * class.a * n - class.b * m;
    if sign_surd(p, m, d) != Ordering::Greater {
        return None;
    }
    // ε²L₂ - L₁ > 0
    let x = t2.checked_mul(p)?.checked_add(v2.checked_mul(m)?.checked_mul(d)?)?.checked_sub(2 * p)?;
    let y = t2.checked_mul(m)?.checked_add(v2.checked_mul(p)?)?.checked_add(2 * m)?;
    (sign_surd(x, y, d) == Ordering::Greater).then_some(OrbitRep { height: h, m, n, sheet: Sheet::Positive })
}

/// One representative per `Γ_{f_γ}`-orbit of `M_u^{f_γ}` with height `<= bound`, on both sheets.
///
/// Negative-sheet orbits of `u` are the negatives of positive-sheet orbits of `N - u`.
pub fn orbit_representatives(
    class: &HyperbolicClass,
    unit: &PellUnit,
    u: u64,
    bound: i128,
) -> Result<Vec<OrbitRep>, HypError> {
    let nl = class.n();
    let mut out = pair_slice(class, unit, u as i128, bound)?;
    for rep in pair_slice(class, unit, nl - u as i128, bound)? {
        out.push(OrbitRep { height: rep.height, m: -rep.m, n: -rep.n, sheet: Sheet::Negative });
    }
    out.sort();
    Ok(out)
}

/// Independent orbit count: all points of `M(u)` with `0 < f_γ(n, -m) <= bound` inside the window
/// `|L₁|, |L₂| <= ε·sqrt(4a·bound/N)`, merged under the explicit stabilizer matrices `S^{±1}`.
pub fn bfs_orbit_count(class: &HyperbolicClass, unit: &PellUnit, u: u64, bound: i128) -> Result<usize, HypError> {
    let (a, b, d, nl) = (class.a, class.b, class.disc, class.n());
    let s = unit.stabilizer(class)?;
    let s_inv = s.inverse();
    let sqrt_d = (d as f64).sqrt();
    let w = unit.eps.to_f64() * (4.0 * a as f64 * bound as f64 / nl as f64).sqrt() * 1.01 + 1.0;
    let m_max = (w / sqrt_d).ceil() as i128 + nl;
    let mut points: Vec<(i128, i128)> = Vec::new();
    let mut m = -m_max - (-m_max).rem_euclid(nl);
    while m <= m_max {
        let n_lo = ((-w + (b * m) as f64) / (2 * a) as f64).floor() as i128 - 1;
        let n_hi = ((w + (b * m) as f64) / (2 * a) as f64).ceil() as i128 + 1;
        let mut n = n_lo + (u as i128 - n_lo).rem_euclid(nl);
        while n <= n_hi {
            let h = class.height(m, n);
            if h > 0 && h <= bound {
                let p = (2 * a * n - b * m) as f64;
                let (l1, l2) = (p - m as f64 * sqrt_d, p + m as f64 * sqrt_d);
                if l1.abs() <= w && l2.abs() <= w {
                    points.push((m, n));
                }
            }
            n += nl;
        }
        m += nl;
    }
    let index: HashMap<(i128, i128), usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (i, &(m, n)) in points.iter().enumerate() {
        for g in [&s, &s_inv] {
            // row vector (m, n) times g
            let img = (m * g.a + n * g.c, m * g.b + n * g.d);
            if let Some(&j) = index.get(&img) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    Ok((0..points.len()).filter(|&i| find(&mut parent, i) == i).count())
}

/// `ζ_{γ,u}(s)` partial sum over the positive slice, with the heights supplied.
pub fn partial_zeta(heights: &[i128], s: f64) -> f64 {
    let mut terms: Vec<f64> = heights.iter().map(|&h| (h as f64).powf(-s)).collect();
    // sum smallest first
    terms.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    terms.iter().sum()
}

/// Whether `ξ` lies in `u/N + 𝔟` and has positive norm.
pub fn in_positive_coset(lat: &OrbitLattice, xi: &QuadSurd) -> bool {
    lat.coordinates(xi).is_some() && xi.norm() > BigRational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{make_class, pell_unit};
    use xn_arith::Level;

    fn setup() -> (HyperbolicClass, PellUnit) {
        let k = make_class(Level::new(15).unwrap(), 227, 1, 1, -57).unwrap();
        let u = pell_unit(15, k.disc, 10_000).unwrap();
        (k, u)
    }

    #[test]
    fn membership_examples() {
        let (k, _) = setup();
        assert!(lattice_member(15, 1, 0, 1));
        assert!(positive_member(&k, 1, 0, 1));
        assert_eq!(k.height(0, 1), 15);
        assert!(!lattice_member(15, 1, 1, 1));
    }

    #[test]
    fn norm_identity_spot_check() {
        let (k, unit) = setup();
        let lat = OrbitLattice::new(&k, 1, &unit).unwrap();
        let xi = lat.xi(0, 0);
        assert_eq!(xi.norm() * ratio(3375, 1), ratio(15, 1));
        assert_eq!(lat.coordinates(&xi), Some((0, 0)));
        assert_eq!(lat.to_pair(0, 0), (0, 1));
    }

    #[test]
    fn stabilizer_preserves_form_and_lattice() {
        let (k, unit) = setup();
        let s = unit.stabilizer(&k).unwrap();
        assert!(s.is_identity_mod(15));
        for (m, n) in [(0, 1), (15, 1), (-30, 7), (45, -8)] {
            let (m2, n2) = (m * s.a + n * s.c, m * s.b + n * s.d);
            assert_eq!(k.height(m, n), k.height(m2, n2));
        }
    }

    #[test]
    fn small_bound_representatives() {
        let (k, unit) = setup();
        let reps = orbit_representatives(&k, &unit, 1, 15).unwrap();
        assert!(reps.iter().any(|r| (r.m, r.n, r.height) == (0, 1, 15)));
        assert!(orbit_representatives(&k, &unit, 1, 14).unwrap().is_empty());
        assert!(pair_slice(&k, &unit, 1, 0).is_err());
    }

    #[test]
    fn sign_surd_matches_bigint() {
        for (p, q) in [(15, -1), (-15, 1), (16, -1), (0, 3), (-7, 0), (227, -15)] {
            assert_eq!(sign_surd(p, q, 229), sign_int_surd(&BigInt::from(p), &BigInt::from(q), &BigInt::from(229)));
        }
    }
}
