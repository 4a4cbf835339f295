//! Exact rational linear combinations of logarithms of primes.

use crate::Fixed;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// `Σ c_p log p` with rational coefficients, zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LogLinear {
    terms: BTreeMap<u64, BigRational>,
}

impl LogLinear {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · log p`.
    pub fn term(p: u64, c: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_term(p, c);
        s
    }

    pub fn add_term(&mut self, p: u64, c: BigRational) {
        let e = self.terms.entry(p).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn coefficient(&self, p: u64) -> BigRational {
        self.terms.get(&p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u64, &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (p, c) in &o.terms {
            s.add_term(*p, c.clone());
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&BigRational::from_integer(BigInt::from(-1))))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut s = Self::zero();
        for (p, c) in &self.terms {
            s.add_term(*p, c * r);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_fixed(&self) -> Fixed {
        self.terms.iter().fold(Fixed::zero(), |acc, (p, c)| acc + Fixed::ln_int(*p).mul_ratio(c))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(p, c)| c.to_f64().unwrap_or(f64::NAN) * (*p as f64).ln()).sum()
    }
}

impl fmt::Display for LogLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("({c})·log {p}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::ratio;

    #[test]
    fn cancellation_and_eval() {
        let a = LogLinear::term(3, ratio(5, 2));
        let b = LogLinear::term(3, ratio(-5, 2));
        assert!(a.add(&b).is_zero());
        let c = LogLinear::term(3, ratio(1, 1)).add(&LogLinear::term(5, ratio(1, 1)));
        assert!((c.to_f64() - 15f64.ln()).abs() < 1e-14);
        assert_eq!(c.to_fixed().render(60), Fixed::ln_int(15).render(60));
    }
}
