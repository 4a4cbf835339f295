//! Adaptive quadrature: Gauss-Kronrod (7,15) bisection and double-exponential rules.

use crate::NumericError;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_64, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// Quadrature result with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

/// Tolerance and effort limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec { abs_tol: 1e-13, rel_tol: 1e-12, max_depth: 40 }
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = fc * WGK[7];
    let mut rg = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        rk += WGK[j] * s;
        if j % 2 == 1 {
            rg += WG[j / 2] * s;
        }
    }
    (rk * h, ((rk - rg) * h).abs())
}

/// Adaptive Gauss-Kronrod on a finite interval.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: QuadSpec) -> Result<QuadResult, NumericError> {
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0, evaluations: 0 });
    }
    let mut evals = 0usize;
    let mut stack = vec![(a, b, 0u32)];
    let (whole, _) = gk15(&f, a, b);
    evals += 15;
    let scale = whole.abs();
    let mut total = 0.0;
    let mut comp = 0.0;
    let mut err = 0.0;
    let width = (b - a).abs();
    let mut failed = false;
    while let Some((lo, hi, depth)) = stack.pop() {
        let (v, e) = gk15(&f, lo, hi);
        evals += 15;
        let share = (hi - lo).abs() / width;
        let allowed = (spec.abs_tol.max(spec.rel_tol * scale)) * share;
        if e <= allowed || depth >= spec.max_depth || (hi - lo).abs() < 1e-300 {
            if e > allowed {
                failed = true;
            }
            // Neumaier summation
            let t = total + v;
            comp += if total.abs() >= v.abs() { (total - t) + v } else { (v - t) + total };
            total = t;
            err += e;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi, depth + 1));
            stack.push((lo, mid, depth + 1));
        }
    }
    let value = total + comp;
    if !value.is_finite() {
        return Err(NumericError::NonFinite("integrand"));
    }
    if failed && err > 10.0 * spec.abs_tol.max(spec.rel_tol * value.abs()) {
        return Err(NumericError::Tolerance { achieved: err, requested: spec.abs_tol.max(spec.rel_tol * value.abs()) });
    }
    Ok(QuadResult { value, error: err, evaluations: evals })
}

/// `∫_a^∞ f` via the map `t = a + x/(1-x)` and adaptive Gauss-Kronrod on `[0, 1)`.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(f: F, a: f64, spec: QuadSpec) -> Result<QuadResult, NumericError> {
    let g = |x: f64| {
        if x >= 1.0 {
            return 0.0;
        }
        let om = 1.0 - x;
        let v = f(a + x / om) / (om * om);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    integrate(g, 0.0, 1.0, spec)
}

/// Tanh-sinh rule on `[a, b]`, refined by halving the step until successive levels agree.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult, NumericError> {
    let h2 = 0.5 * (b - a);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let tmax = 3.5;
    let mut evals = 0;
    // abscissae are placed from the nearer endpoint using 1 - tanh(s) = 1/(e^s cosh s)
    let eval = |t: f64, evals: &mut usize| -> f64 {
        let s = half_pi * t.sinh();
        let ch = s.cosh();
        let w = half_pi * t.cosh() / (ch * ch);
        let gap = h2 / (s.exp() * ch);
        let pts: &[f64] = if t == 0.0 { &[0.5] } else { &[1.0, -1.0] };
        let mut acc = 0.0;
        for &side in pts {
            let y = if t == 0.0 {
                0.5 * (a + b)
            } else if side > 0.0 {
                b - gap
            } else {
                a + gap
            };
            if y <= a || y >= b {
                continue;
            }
            let v = f(y);
            *evals += 1;
            if v.is_finite() {
                acc += v;
            }
        }
        acc * w
    };
    let mut h = 0.5;
    let mut sum = eval(0.0, &mut evals);
    let mut k = 1;
    while (k as f64) * h <= tmax {
        sum += eval(k as f64 * h, &mut evals);
        k += 1;
    }
    let mut prev = sum * h * h2;
    for _level in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= tmax {
            sum += eval(k as f64 * h, &mut evals);
            k += 2;
        }
        let cur = sum * h * h2;
        let diff = (cur - prev).abs();
        if diff <= tol.max(1e-15 * cur.abs()) {
            return Ok(QuadResult { value: cur, error: diff, evaluations: evals });
        }
        prev = cur;
    }
    Err(NumericError::Tolerance { achieved: f64::NAN, requested: tol })
}

/// Sinh-sinh rule on the whole real line.
pub fn sinh_sinh<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<QuadResult, NumericError> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let tmax = 4.5;
    let mut evals = 0;
    let term = |t: f64, evals: &mut usize| -> f64 {
        let s = half_pi * t.sinh();
        let x = s.sinh();
        let w = half_pi * t.cosh() * s.cosh();
        let mut v = f(x);
        *evals += 1;
        if t != 0.0 {
            v += f(-x);
            *evals += 1;
        }
        if v.is_finite() {
            v * w
        } else {
            0.0
        }
    };
    let mut h = 0.5;
    let mut sum = term(0.0, &mut evals);
    let mut k = 1;
    while (k as f64) * h <= tmax {
        sum += term(k as f64 * h, &mut evals);
        k += 1;
    }
    let mut prev = sum * h;
    for _ in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= tmax {
            sum += term(k as f64 * h, &mut evals);
            k += 2;
        }
        let cur = sum * h;
        let diff = (cur - prev).abs();
        if diff <= tol.max(1e-15 * cur.abs()) {
            return Ok(QuadResult { value: cur, error: diff, evaluations: evals });
        }
        prev = cur;
    }
    Err(NumericError::Tolerance { achieved: f64::NAN, requested: tol })
}

/// Nodes and weights of the composite 7-point Gauss-Legendre rule on `[a, b]`.
pub fn composite_gauss_nodes(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    // 7-point Gauss nodes are the odd-indexed Kronrod abscissae
    let gx = [XGK[1], XGK[3], XGK[5], 0.0];
    let mut out = Vec::with_capacity(panels * 7);
    let w = (b - a) / panels as f64;
    for p in 0..panels {
        let lo = a + p as f64 * w;
        let c = lo + 0.5 * w;
        let h = 0.5 * w;
        for j in 0..3 {
            out.push((c - h * gx[j], h * WG[j]));
            out.push((c + h * gx[j], h * WG[j]));
        }
        out.push((c, h * WG[3]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = integrate(|x| x * x * x - 2.0 * x, 0.0, 2.0, QuadSpec::default()).unwrap();
        assert!((r.value - 0.0).abs() < 1e-14);
        let r = integrate(|x| x.exp(), 0.0, 1.0, QuadSpec::default()).unwrap();
        assert!((r.value - (1f64.exp() - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn semi_infinite_gaussian() {
        let r = integrate_to_infinity(|x| (-x * x).exp(), 0.0, QuadSpec::default()).unwrap();
        assert!((r.value - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn double_exponential_rules() {
        let r = tanh_sinh(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-9, "{}", r.value);
        let r = sinh_sinh(|x| 1.0 / (1.0 + x * x), 1e-12).unwrap();
        assert!((r.value - std::f64::consts::PI).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn gauss_nodes_integrate_polynomials() {
        let s: f64 = composite_gauss_nodes(0.0, 3.0, 4).iter().map(|&(x, w)| w * x.powi(5)).sum();
        assert!((s - 3f64.powi(6) / 6.0).abs() < 1e-10);
    }
}
