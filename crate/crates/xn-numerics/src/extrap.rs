//! Richardson extrapolation for sequences sampled at geometrically shrinking steps.

/// Extrapolate `F(h) = F0 + c1 h + c2 h^2 + …` to `h = 0` from samples at
/// `h, h/r, h/r^2, …` (values ordered from largest step to smallest).
/// Returns the full Neville-style tableau; the last entry is the best estimate.
pub fn richardson(values: &[f64], ratio: f64) -> Vec<Vec<f64>> {
    let mut table = vec![values.to_vec()];
    let mut order = 1;
    while table.last().map_or(0, Vec::len) > 1 {
        let prev = table.last().unwrap();
        let f = ratio.powi(order);
        let next: Vec<f64> = prev.windows(2).map(|w| (f * w[1] - w[0]) / (f - 1.0)).collect();
        table.push(next);
        order += 1;
    }
    table
}

/// Best Richardson estimate and the difference to the previous column as an error proxy.
pub fn richardson_limit(values: &[f64], ratio: f64) -> (f64, f64) {
    let t = richardson(values, ratio);
    let best = *t.last().and_then(|r| r.last()).unwrap_or(&f64::NAN);
    let prev = if t.len() >= 2 { *t[t.len() - 2].last().unwrap() } else { best };
    (best, (best - prev).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_quadratic_error() {
        let f = |h: f64| 3.0 + 2.0 * h - 5.0 * h * h;
        let v: Vec<f64> = [0.5, 0.25, 0.125].iter().map(|&h| f(h)).collect();
        let (best, _) = richardson_limit(&v, 2.0);
        assert!((best - 3.0).abs() < 1e-12);
    }
}
