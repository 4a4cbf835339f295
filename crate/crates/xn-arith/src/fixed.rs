//! Fixed-point decimal reals with 80 fractional digits.
//!
//! Used to carry closed-form quantities (logarithms, pi, special constants)
//! well past double precision so that rendered digits are stable.

use crate::{constants, ArithError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Number of fractional decimal digits carried.
pub const SCALE: u32 = 80;

/// A real number `m / 10^SCALE`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fixed(BigInt);

fn unit() -> &'static BigInt {
    static U: OnceLock<BigInt> = OnceLock::new();
    U.get_or_init(|| BigInt::from(10u32).pow(SCALE))
}

/// Division rounding half away from zero.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    if (&r + &r).abs() >= d.abs() {
        if n.is_negative() != d.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl Fixed {
    pub fn zero() -> Self {
        Fixed(BigInt::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Fixed(BigInt::from(n) * unit())
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Fixed(div_round(&(r.numer() * unit()), r.denom()))
    }

    /// Parse a plain decimal such as `-12.5e-3` exactly (rounded to SCALE digits).
    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let bad = || ArithError::BadDecimal(s.to_string());
        let t = s.trim();
        let (mant, exp) = match t.find(['e', 'E']) {
            Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (t, 0),
        };
        let (neg, body) = match mant.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, mant.strip_prefix('+').unwrap_or(mant)),
        };
        let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("0{whole}{frac}").parse().map_err(|_| bad())?;
        let shift = exp - frac.len() as i32;
        let ten = BigInt::from(10u32);
        let r = if shift >= 0 {
            BigRational::from_integer(digits * ten.pow(shift as u32))
        } else {
            BigRational::new(digits, ten.pow((-shift) as u32))
        };
        let r = if neg { -r } else { r };
        Ok(Fixed::from_ratio(&r))
    }

    pub fn from_f64(x: f64) -> Self {
        // shortest round-trip representation
        Fixed::parse(&format!("{x:e}")).expect("finite float")
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.0
    }

    pub fn mul_ratio(&self, r: &BigRational) -> Self {
        Fixed(div_round(&(&self.0 * r.numer()), r.denom()))
    }

    pub fn div(&self, o: &Fixed) -> Result<Self, ArithError> {
        if o.0.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Fixed(div_round(&(&self.0 * unit()), &o.0)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Fixed(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        // keep 20 significant digits before converting
        let s = self.render(SCALE as usize);
        s.parse::<f64>().unwrap_or_else(|_| self.0.to_f64().unwrap_or(f64::NAN) / 1e80)
    }

    /// Decimal string with exactly `digits` fractional digits, truncated toward zero.
    pub fn render(&self, digits: usize) -> String {
        let digits = digits.min(SCALE as usize);
        let neg = self.0.is_negative();
        let a = self.0.abs();
        let (whole, frac) = a.div_rem(unit());
        let mut fs = format!("{:0>width$}", frac.to_string(), width = SCALE as usize);
        fs.truncate(digits);
        let all_zero = whole.is_zero() && fs.chars().all(|c| c == '0');
        let sign = if neg && !all_zero { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{whole}")
        } else {
            format!("{sign}{whole}.{fs}")
        }
    }

    pub fn pi() -> Self {
        static P: OnceLock<Fixed> = OnceLock::new();
        P.get_or_init(|| Fixed::parse(constants::PI).unwrap()).clone()
    }

    pub fn euler_gamma() -> Self {
        static G: OnceLock<Fixed> = OnceLock::new();
        G.get_or_init(|| Fixed::parse(constants::EULER_GAMMA).unwrap()).clone()
    }

    /// `1 - log(4π) + ζ'(-1)/ζ(-1)`.
    pub fn scattering_c() -> Self {
        static C: OnceLock<Fixed> = OnceLock::new();
        C.get_or_init(|| Fixed::parse(constants::SCATTERING_C).unwrap()).clone()
    }

    /// Natural logarithm of a positive integer, computed by an atanh series.
    pub fn ln_int(n: u64) -> Self {
        assert!(n >= 1, "ln of non-positive integer");
        if n == 1 {
            return Fixed::zero();
        }
        let k = 63 - n.leading_zeros(); // 2^k <= n < 2^(k+1)
        let p2 = 1u128 << k;
        let rest = if n as u128 == p2 {
            Fixed::zero()
        } else {
            let z = BigRational::new(BigInt::from(n as u128 - p2), BigInt::from(n as u128 + p2));
            atanh2(&z)
        };
        ln2().mul_ratio(&BigRational::from_integer(BigInt::from(k))) + rest
    }

    /// Natural logarithm of a positive fixed-point value.
    pub fn ln(&self) -> Result<Self, ArithError> {
        if !self.0.is_positive() {
            return Err(ArithError::BadDecimal(self.render(10)));
        }
        let r = BigRational::new(self.0.clone(), unit().clone());
        // scale into [1, 2) by powers of two
        let mut k: i64 = 0;
        let mut x = r;
        let two = BigRational::from_integer(BigInt::from(2));
        while x >= two {
            x /= &two;
            k += 1;
        }
        while x < BigRational::one() {
            x *= &two;
            k -= 1;
        }
        let one = BigRational::one();
        let z = (&x - &one) / (&x + &one);
        Ok(ln2().mul_ratio(&BigRational::from_integer(BigInt::from(k))) + atanh2_fixed(&Fixed::from_ratio(&z)))
    }
}

fn ln2() -> Fixed {
    static L: OnceLock<Fixed> = OnceLock::new();
    L.get_or_init(|| atanh2(&BigRational::new(BigInt::one(), BigInt::from(3)))).clone()
}

/// `2 atanh(z)` for rational `|z| <= 1/3`.
fn atanh2(z: &BigRational) -> Fixed {
    atanh2_fixed(&Fixed::from_ratio(z))
}

fn atanh2_fixed(z: &Fixed) -> Fixed {
    // work with 20 guard digits
    let guard = BigInt::from(10u32).pow(20);
    let zz = &z.0 * &guard;
    let big_unit = unit() * &guard;
    let z2 = div_round(&(&zz * &zz), &big_unit);
    let mut term = zz.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        sum += div_round(&term, &BigInt::from(k));
        term = div_round(&(&term * &z2), &big_unit);
        k += 2;
    }
    Fixed(div_round(&(sum * 2), &guard))
}

impl Add for Fixed {
    type Output = Fixed;
    fn add(self, o: Fixed) -> Fixed {
        Fixed(self.0 + o.0)
    }
}

impl Sub for Fixed {
    type Output = Fixed;
    fn sub(self, o: Fixed) -> Fixed {
        Fixed(self.0 - o.0)
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-self.0)
    }
}

impl Mul for Fixed {
    type Output = Fixed;
    fn mul(self, o: Fixed) -> Fixed {
        Fixed(div_round(&(self.0 * o.0), unit()))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(30))
    }
}
