//! Deterministic decimal rendering.

use xn_arith::{Fixed, LogLinear};

/// Digits carried for exact quantities before truncation to the display width.
pub const RENDER_DIGITS: usize = 50;

/// Fixed-point value with `digits` fractional digits (at most 50), truncated toward zero.
pub fn render_fixed(x: &Fixed, digits: usize) -> String {
    let full = x.render(RENDER_DIGITS);
    truncate_fraction(&full, digits.min(RENDER_DIGITS))
}

pub fn render_loglinear(x: &LogLinear, digits: usize) -> String {
    render_fixed(&x.to_fixed(), digits)
}

fn truncate_fraction(s: &str, digits: usize) -> String {
    let out = match s.split_once('.') {
        Some((w, _)) if digits == 0 => w.to_string(),
        Some((w, f)) => format!("{w}.{}", &f[..digits.min(f.len())]),
        None => s.to_string(),
    };
    match out.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => out,
    }
}

/// A binary float as a decimal string with at most 17 significant digits (more would only
/// expose the binary expansion). Positional notation for moderate magnitudes, scientific otherwise.
pub fn render_f64(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sig = digits.clamp(1, 17);
    let exp = x.abs().log10().floor() as i32;
    if (-5..=15).contains(&exp) {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.prec$e}", prec = sig - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats() {
        assert_eq!(render_f64(1033.0412345, 6), "1033.04");
        assert_eq!(render_f64(-0.000123456, 3), "-0.000123");
        assert_eq!(render_f64(1.5e-9, 3), "1.50e-9");
        assert_eq!(render_f64(0.1, 40), "0.10000000000000001");
    }

    #[test]
    fn fixed() {
        let x = Fixed::parse("-12.3456789").unwrap();
        assert_eq!(render_fixed(&x, 3), "-12.345");
        assert_eq!(render_fixed(&x, 0), "-12");
        assert_eq!(render_fixed(&Fixed::parse("-0.0001").unwrap(), 2), "0.00");
    }
}
