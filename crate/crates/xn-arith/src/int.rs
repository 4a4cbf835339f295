//! Elementary number theory on machine integers.

use crate::ArithError;
use std::fmt;

/// Prime factorisation `n = prod p^e`, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    factorize(n).into_iter().fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Moebius function.
pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius requires n >= 1");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Moebius values for `0..=limit` by a linear sieve (index 0 is unused and set to 0).
pub fn moebius_table(limit: usize) -> Vec<i8> {
    let mut mu = vec![0i8; limit + 1];
    if limit == 0 {
        return mu;
    }
    mu[1] = 1;
    let mut is_comp = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !is_comp[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > limit {
                break;
            }
            is_comp[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    mu
}

/// Reason a level fails the admissibility gate, or `None` if it passes.
pub fn level_rejection(n: i64) -> Option<String> {
    if n < 3 {
        return Some(format!("{n} < 3"));
    }
    if n % 2 == 0 {
        return Some(format!("{n} is even"));
    }
    let f = factorize(n as u64);
    if let Some(&(p, e)) = f.iter().find(|&&(_, e)| e > 1) {
        let cofactor = n as u64 / p.pow(e);
        let rest = if cofactor == 1 { String::new() } else { format!("·{cofactor}") };
        let sup: String =
            e.to_string().chars().map(|d| "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().nth(d as usize - '0' as usize).unwrap()).collect();
        return Some(format!("not squarefree ({n} = {p}{sup}{rest})"));
    }
    if f.len() == 1 {
        return Some(format!("{n} is prime"));
    }
    None
}

/// True iff `n >= 3` is odd, squarefree and composite.
pub fn level_admissible(n: i64) -> bool {
    level_rejection(n).is_none()
}

/// An admissible level `N`: odd, squarefree, composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(u64);

impl Level {
    pub fn new(n: i64) -> Result<Self, ArithError> {
        match level_rejection(n) {
            None => Ok(Level(n as u64)),
            Some(reason) => Err(ArithError::InadmissibleLevel { n, reason }),
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn primes(self) -> Vec<u64> {
        prime_divisors(self.0)
    }

    pub fn phi(self) -> u64 {
        euler_phi(self.0)
    }

    /// Least positive representatives of `(Z/N)^x / {±1}`, ascending; contains 1.
    pub fn unit_reps(self) -> Vec<u64> {
        let n = self.0;
        (1..n).filter(|&u| 2 * u < n && gcd(u, n) == 1).collect()
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_i(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended gcd: returns `(g, x, y)` with `a x + b y = g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Least nonnegative inverse of `a` modulo `m`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64, ArithError> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    if g != 1 {
        return Err(ArithError::NotInvertible { a, m });
    }
    Ok(x.rem_euclid(m as i128) as i64)
}

/// Integer square root (floor).
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn is_square(n: i128) -> bool {
    n >= 0 && {
        let r = isqrt(n as u128);
        r * r == n as u128
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(euler_phi(105), 48);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(16), 0);
        assert_eq!(moebius(31), -1);
        let t = moebius_table(2000);
        for n in 1..=2000u64 {
            assert_eq!(t[n as usize], moebius(n));
        }
    }

    #[test]
    fn admissibility_gate() {
        assert!(level_admissible(15));
        assert!(!level_admissible(9));
        assert!(!level_admissible(7));
        assert!(!level_admissible(30));
        assert!(level_rejection(9).unwrap().contains("not squarefree (9 = 3²)"));
    }

    #[test]
    fn units_mod_sign() {
        let l = Level::new(15).unwrap();
        assert_eq!(l.unit_reps(), vec![1, 2, 4, 7]);
        assert_eq!(l.unit_reps().len() as u64, l.phi() / 2);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(2, 15).unwrap(), 8);
        assert!(mod_inverse(3, 15).is_err());
        assert!(is_square(225) && !is_square(229));
    }
}
