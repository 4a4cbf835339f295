//! Unimodular 2x2 integer matrices and their PSL2 classes.

use crate::ArithError;
use std::fmt;

/// `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix2 {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub d: i128,
}

fn mul_add(x: i128, y: i128, z: i128, w: i128) -> Result<i128, ArithError> {
    x.checked_mul(y)
        .and_then(|p| z.checked_mul(w).and_then(|q| p.checked_add(q)))
        .ok_or(ArithError::Overflow("matrix product"))
}

impl Matrix2 {
    pub fn new(a: i128, b: i128, c: i128, d: i128) -> Result<Self, ArithError> {
        let det = mul_add(a, d, -b, c)?;
        if det != 1 {
            return Err(ArithError::NotUnimodular(det));
        }
        Ok(Matrix2 { a, b, c, d })
    }

    pub const IDENTITY: Matrix2 = Matrix2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn trace(&self) -> i128 {
        self.a + self.d
    }

    pub fn mul(&self, o: &Matrix2) -> Result<Matrix2, ArithError> {
        Ok(Matrix2 {
            a: mul_add(self.a, o.a, self.b, o.c)?,
            b: mul_add(self.a, o.b, self.b, o.d)?,
            c: mul_add(self.c, o.a, self.d, o.c)?,
            d: mul_add(self.c, o.b, self.d, o.d)?,
        })
    }

    pub fn inverse(&self) -> Matrix2 {
        Matrix2 { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn transpose(&self) -> Matrix2 {
        Matrix2 { a: self.a, b: self.c, c: self.b, d: self.d }
    }

    pub fn neg(&self) -> Matrix2 {
        Matrix2 { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    /// PSL2 representative: the first nonzero entry among `(c, a)` is positive.
    pub fn normalize(&self) -> Matrix2 {
        let lead = if self.c != 0 { self.c } else { self.a };
        if lead < 0 {
            self.neg()
        } else {
            *self
        }
    }

    /// Congruent to the identity modulo `n`.
    pub fn is_identity_mod(&self, n: i128) -> bool {
        (self.a - 1).rem_euclid(n) == 0
            && self.b.rem_euclid(n) == 0
            && self.c.rem_euclid(n) == 0
            && (self.d - 1).rem_euclid(n) == 0
    }

    /// Congruent to `±I` modulo `n`, i.e. in the image of `Γ(n)` in PSL2.
    pub fn is_pm_identity_mod(&self, n: i128) -> bool {
        self.is_identity_mod(n) || self.neg().is_identity_mod(n)
    }

    /// Moebius action on a point of the upper half-plane.
    pub fn act(&self, x: f64, y: f64) -> (f64, f64) {
        let (a, b, c, d) = (self.a as f64, self.b as f64, self.c as f64, self.d as f64);
        let den = (c * x + d).powi(2) + (c * y).powi(2);
        let re = ((a * x + b) * (c * x + d) + a * c * y * y) / den;
        (re, y / den)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_check() {
        assert!(Matrix2::new(106, 855, 15, 121).is_ok());
        assert_eq!(Matrix2::new(1, 1, 1, 1), Err(ArithError::NotUnimodular(0)));
    }

    #[test]
    fn normalization() {
        let m = Matrix2::new(106, 855, 15, 121).unwrap();
        assert_eq!(m.neg().normalize(), m.normalize());
        assert_eq!(m.normalize().normalize(), m.normalize());
        let t = Matrix2::new(-1, 5, 0, -1).unwrap();
        assert_eq!(t.normalize(), Matrix2::new(1, -5, 0, 1).unwrap());
    }

    #[test]
    fn inverse_product() {
        let m = Matrix2::new(106, 855, 15, 121).unwrap();
        assert_eq!(m.mul(&m.inverse()).unwrap(), Matrix2::IDENTITY);
        assert!(m.is_identity_mod(15));
    }
}
