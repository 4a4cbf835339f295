//! Exact elements `x + y√d` of a real quadratic field.

use crate::ArithError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// `x + y√d` with rational `x, y` and a positive non-square radicand `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    d: BigInt,
    x: BigRational,
    y: BigRational,
}

/// Exact sign of `p + q√d` for integers, `d > 0` non-square.
pub fn sign_int_surd(p: &BigInt, q: &BigInt, d: &BigInt) -> Ordering {
    let sp = p.sign();
    let sq = q.sign();
    use num_bigint::Sign::*;
    match (sp, sq) {
        (NoSign, NoSign) => Ordering::Equal,
        (NoSign, s) | (s, NoSign) => sign_to_ord(s),
        (a, b) if a == b => sign_to_ord(a),
        (a, b) => {
            // opposite signs: compare p^2 with d q^2
            let lhs = p * p;
            let rhs = d * q * q;
            match lhs.cmp(&rhs) {
                Ordering::Greater => sign_to_ord(a),
                Ordering::Less => sign_to_ord(b),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

fn sign_to_ord(s: num_bigint::Sign) -> Ordering {
    match s {
        num_bigint::Sign::Minus => Ordering::Less,
        num_bigint::Sign::NoSign => Ordering::Equal,
        num_bigint::Sign::Plus => Ordering::Greater,
    }
}

impl QuadSurd {
    pub fn new(d: BigInt, x: BigRational, y: BigRational) -> Result<Self, ArithError> {
        if !d.is_positive() || is_square_big(&d) {
            return Err(ArithError::BadRadicand(d.to_string()));
        }
        Ok(QuadSurd { d, x, y })
    }

    /// Convenience constructor `(xn/xd) + (yn/yd)√d`.
    pub fn from_ints(d: i64, xn: i64, xd: i64, yn: i64, yd: i64) -> Result<Self, ArithError> {
        if xd == 0 || yd == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Self::new(BigInt::from(d), ratio(xn, xd), ratio(yn, yd))
    }

    pub fn rational(d: &BigInt, x: BigRational) -> Self {
        QuadSurd { d: d.clone(), x, y: BigRational::zero() }
    }

    pub fn sqrt_d(d: &BigInt) -> Self {
        QuadSurd { d: d.clone(), x: BigRational::zero(), y: BigRational::one() }
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }
    pub fn x(&self) -> &BigRational {
        &self.x
    }
    pub fn y(&self) -> &BigRational {
        &self.y
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.d != other.d {
            return Err(ArithError::RadicandMismatch { left: self.d.to_string(), right: other.d.to_string() });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        Ok(QuadSurd { d: self.d.clone(), x: &self.x + &o.x, y: &self.y + &o.y })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        Ok(QuadSurd { d: self.d.clone(), x: &self.x - &o.x, y: &self.y - &o.y })
    }

    pub fn mul(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        let d = BigRational::from_integer(self.d.clone());
        Ok(QuadSurd { d: self.d.clone(), x: &self.x * &o.x + &d * &self.y * &o.y, y: &self.x * &o.y + &self.y * &o.x })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QuadSurd { d: self.d.clone(), x: &self.x * r, y: &self.y * r }
    }

    pub fn neg(&self) -> Self {
        QuadSurd { d: self.d.clone(), x: -&self.x, y: -&self.y }
    }

    pub fn conjugate(&self) -> Self {
        QuadSurd { d: self.d.clone(), x: self.x.clone(), y: -&self.y }
    }

    /// Field norm `x^2 - d y^2`.
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - BigRational::from_integer(self.d.clone()) * &self.y * &self.y
    }

    /// Field trace `2x`.
    pub fn trace(&self) -> BigRational {
        &self.x + &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn invert(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let inv = n.recip();
        Ok(self.conjugate().scale(&inv))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ArithError> {
        self.mul(&o.invert()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = QuadSurd::rational(&self.d, BigRational::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same radicand");
        }
        acc
    }

    /// Sign of the real embedding with `√d > 0`, decided without floating point.
    pub fn signum(&self) -> Ordering {
        // clear denominators: x = a/m, y = b/m with m > 0
        let m = self.x.denom().lcm(self.y.denom());
        let a = self.x.numer() * (&m / self.x.denom());
        let b = self.y.numer() * (&m / self.y.denom());
        sign_int_surd(&a, &b, &self.d)
    }

    /// Exact order of the real embeddings.
    pub fn compare_real(&self, o: &Self) -> Result<Ordering, ArithError> {
        Ok(self.sub(o)?.signum())
    }

    /// Positive under both real embeddings.
    pub fn is_totally_positive(&self) -> bool {
        self.signum() == Ordering::Greater && self.conjugate().signum() == Ordering::Greater
    }

    /// Algebraic integer test: trace and norm are rational integers.
    pub fn is_algebraic_integer(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }

    /// Membership of `self - 1` in `n·O_L`.
    pub fn is_one_mod(&self, n: u64) -> bool {
        let one = QuadSurd::rational(&self.d, BigRational::one());
        let diff = self.sub(&one).expect("same radicand");
        diff.scale(&ratio(1, n as i64)).is_algebraic_integer()
    }

    pub fn to_f64(&self) -> f64 {
        let sd = self.d.to_f64().unwrap_or(f64::NAN).sqrt();
        self.x.to_f64().unwrap_or(f64::NAN) + self.y.to_f64().unwrap_or(f64::NAN) * sd
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})√{}", self.x, self.y, self.d)
    }
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn is_square_big(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps() -> QuadSurd {
        QuadSurd::from_ints(229, 227, 2, 15, 2).unwrap()
    }

    #[test]
    fn pell_unit_norm() {
        assert_eq!(eps().norm(), BigRational::one());
        assert!(eps().is_totally_positive());
        assert!(eps().is_one_mod(15));
    }

    #[test]
    fn conjugate_of_rational_is_identity() {
        let r = QuadSurd::from_ints(229, 7, 3, 0, 1).unwrap();
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn invert_sqrt() {
        let s = QuadSurd::sqrt_d(&BigInt::from(229));
        let inv = s.invert().unwrap();
        assert_eq!(inv, QuadSurd::from_ints(229, 0, 1, 1, 229).unwrap());
        assert_eq!(s.mul(&inv).unwrap(), QuadSurd::rational(&BigInt::from(229), BigRational::one()));
    }

    #[test]
    fn half_unit_rejected() {
        let h = QuadSurd::from_ints(229, 15, 2, 1, 2).unwrap();
        assert_eq!(h.norm(), BigRational::from_integer(BigInt::from(-1)));
        assert!(!h.is_one_mod(15));
        assert_eq!(h.mul(&h).unwrap(), eps());
    }

    #[test]
    fn errors() {
        let a = QuadSurd::sqrt_d(&BigInt::from(2));
        let b = QuadSurd::sqrt_d(&BigInt::from(3));
        assert!(matches!(a.mul(&b), Err(ArithError::RadicandMismatch { .. })));
        let z = QuadSurd::rational(&BigInt::from(2), BigRational::zero());
        assert_eq!(z.invert(), Err(ArithError::DivisionByZero));
        assert!(QuadSurd::from_ints(4, 1, 1, 1, 1).is_err());
    }

    #[test]
    fn signs() {
        // 15 - √229 < 0, 16 - √229 > 0
        let a = QuadSurd::from_ints(229, 15, 1, -1, 1).unwrap();
        let b = QuadSurd::from_ints(229, 16, 1, -1, 1).unwrap();
        assert_eq!(a.signum(), Ordering::Less);
        assert_eq!(b.signum(), Ordering::Greater);
        assert_eq!(a.compare_real(&b).unwrap(), Ordering::Less);
    }
}
