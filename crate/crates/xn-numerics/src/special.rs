//! Special functions not covered by `statrs`.

/// Bernoulli numbers B_2, B_4, …, B_16.
const B2K: [f64; 8] =
    [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0];

/// Riemann zeta function for real `s > 0`, `s != 1`, by Euler-Maclaurin summation.
pub fn zeta(s: f64) -> f64 {
    assert!(s > 0.0 && s != 1.0, "zeta: s must be positive and != 1");
    let n = 12usize;
    let nf = n as f64;
    let mut sum: f64 = (1..n).map(|k| (k as f64).powf(-s)).sum();
    sum += nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s);
    // Σ B_2j/(2j)! · s(s+1)…(s+2j-2) · n^(-s-2j+1)
    let mut rising = s; // s(s+1)…(s+2j-2) for j = 1
    let mut fact = 2.0; // (2j)!
    for (j, b) in B2K.iter().enumerate() {
        let j = j as f64 + 1.0;
        sum += b / fact * rising * nf.powf(-s - 2.0 * j + 1.0);
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let pi = std::f64::consts::PI;
        assert!((zeta(2.0) - pi * pi / 6.0).abs() < 1e-14);
        assert!((zeta(4.0) - pi.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta(3.0) - 1.202_056_903_159_594_3).abs() < 1e-14);
        // Laurent: ζ(1+h) ≈ 1/h + γ
        let h = 2f64.powi(-20);
        assert!((zeta(1.0 + h) - 1.0 / h - 0.577_215_664_901_532_9).abs() < 1e-6);
    }
}
