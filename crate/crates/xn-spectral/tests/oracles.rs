use std::f64::consts::PI;
use xn_arith::Level;
use xn_numerics::QuadSpec;
use xn_spectral::*;

fn kp(t: f64) -> KernelParams {
    KernelParams::new(t).unwrap()
}

fn level(n: i64) -> Level {
    Level::new(n).unwrap()
}

#[test]
fn heat_kernel_normalization() {
    for u in [0.5, 1.0, 2.0, 10.0] {
        let q = heat_integral(u, QuadSpec::default()).unwrap();
        assert!((q - (-u / 2.0).exp()).abs() <= 1e-8, "u={u}: {q}");
    }
    assert!((heat_integral(2.0, QuadSpec::default()).unwrap() - 0.367_88).abs() < 1e-5);
}

#[test]
fn a2_dual_routes() {
    for t in [0.5, 1.0, 2.0, 4.0, 8.0] {
        let r = a2(&kp(t)).unwrap();
        assert!(r.discrepancy() <= 1e-8, "T={t}: {r:?}");
    }
}

#[test]
fn a_l_dual_routes() {
    for l in [3, 4, 5] {
        for t in [1.0, 5.0, 10.0] {
            let r = a_l(&kp(t), l).unwrap();
            let d = r.discrepancy().expect("spectral route converged");
            assert!(d <= 1e-6, "l={l} T={t}: {r:?}");
        }
    }
    // large T tends to -1/(2η_l)
    let r = a_l(&kp(400.0), 3).unwrap();
    assert!((r.heat + 0.5 / eta_l(3).unwrap()).abs() < 1e-12);
    // l = 227: u ≈ 10.85, negligible for T <= 10
    let r = a_l(&kp(10.0), 227).unwrap();
    assert!(r.heat.abs() < 1e-3 && r.heat <= 0.0);
    let r = a_l(&kp(1.0), 227).unwrap();
    assert!(r.heat.abs() < 1e-12);
}

#[test]
fn fourier_chain() {
    let tr = SelbergTransform::new(kp(1.0));
    for u in [0.0, 0.3, 1.0, 2.5, 5.0] {
        assert!((tr.g(u) - tr.g_by_quadrature(u).unwrap()).abs() < 1e-12, "u={u}");
    }
    // Q'(w) against a central difference of Q
    for w in [0.1, 1.0, 7.0] {
        let h = 1e-5;
        let fd = (tr.q(w + h) - tr.q(w - h)) / (2.0 * h);
        assert!((fd - tr.q_prime(w)).abs() < 1e-8, "w={w}");
    }
}

#[test]
fn poisson_identity_both_weights() {
    let tr = SelbergTransform::new(kp(1.0));
    let mass = tr.h_mass();
    let m0 = tr.phi_moment(Weight::Zero).unwrap();
    assert!((m0 - mass).abs() <= 1e-6, "{m0} vs {mass}");
    let m2 = tr.phi_moment(Weight::Two).unwrap();
    assert!((m2 - mass).abs() <= 1e-6, "{m2} vs {mass}");
}

#[test]
fn phi_decays_monotonically() {
    let tr = SelbergTransform::new(kp(1.0));
    let xs = [0.0, 1.0, 5.0, 20.0, 50.0, 200.0, 400.0, 1000.0];
    let vals: Vec<f64> = xs.iter().map(|&x| tr.phi(Weight::Zero, x).unwrap()).collect();
    for w in vals.windows(2) {
        assert!(w[1] < w[0] && w[1] > 0.0, "{vals:?}");
    }
    assert!(vals[7] < 1e-8, "{vals:?}");
    assert!(Weight::try_from(1).is_err());
    assert!(Weight::try_from(4).is_err());
}

#[test]
fn m1_laurent_shape() {
    let big = kp(400.0);
    let m = m1_laurent(level(15), &big, None).unwrap();
    assert!((m.residue + 2.0 / (5.0 * PI)).abs() < 1e-12);
    assert!(m.jet().is_err());
    for t in [0.5, 1.0, 10.0] {
        let m15 = m1_laurent(level(15), &kp(t), Some(0.0)).unwrap();
        let m21 = m1_laurent(level(21), &kp(t), Some(0.0)).unwrap();
        assert!(m15.log_n_coefficient() > 0.0);
        assert!((m15.residue * 15.0 - m21.residue * 21.0).abs() < 1e-14);
    }
}

#[test]
fn m1_identity_route_residue_is_half_the_expansion() {
    let p = kp(1.0);
    let jet = m1_laurent(level(15), &p, Some(0.3)).unwrap().jet().unwrap();
    let h = 1e-6;
    let v = m1_identity_value(level(15), 1.0 + h, &p, 0.3).unwrap().value;
    assert!((v * h / jet.residue - 0.5).abs() < 1e-4, "{}", v * h / jet.residue);
}

#[test]
fn m2_residue_matches_phi_at_zero() {
    let p = kp(1.0).with_strip(1.5).unwrap();
    let tr = SelbergTransform::new(p);
    let table = PsiTable::new(&tr, 60.0, 1200).unwrap();
    assert!(table.edge < 1e-10, "{}", table.edge);
    // Ψ^± against a direct adaptive integral at one point
    let y = 0.4;
    let direct = xn_numerics::integrate_to_infinity(
        |u| 4.0 * tr.phi(Weight::Zero, u * u).unwrap() * (2.0 * PI * u * y).cos(),
        0.0,
        QuadSpec { abs_tol: 1e-11, rel_tol: 1e-10, max_depth: 40 },
    )
    .unwrap();
    assert!((table.psi(Weight::Zero, y) - direct.value).abs() < 1e-8);
    let residue = 2.0 * table.mellin_difference(1.0, 4.0, 200);
    let (p0, p2) = table.at_zero;
    assert!((residue - (p2 - p0)).abs() < 1e-7, "{residue} vs {}", p2 - p0);
    let m = m2_value(1.25, &p, &table, 4.0, 200).unwrap();
    assert!(m.value.is_finite());
    assert!(m2_value(1.6, &p, &table, 4.0, 200).is_err());
}

#[test]
fn m3_composition_and_laurent() {
    let p = kp(1.0).with_strip(3.0).unwrap();
    let v = m3_value(level(15), 2.0, &p, PhiRoute::Closed).unwrap();
    let phi = xn_zeta::scattering_closed(level(15), 1.5).unwrap();
    assert!((v - 2.0 / 3.0 * 0.75f64.exp() * phi).abs() < 1e-15 * v.abs().max(1e-300));
    let s = m3_value(level(15), 2.0, &p, PhiRoute::Series { kmax: 20_000 }).unwrap();
    let tail = xn_zeta::scattering_series(level(15), 1.5, 20_000, xn_zeta::DuConvention::PlusMinus).unwrap().tail;
    assert!((s - v).abs() <= 2.0 / 3.0 * 0.75f64.exp() * tail, "{s} vs {v}, tail {tail}");
    let jet = m3_laurent(level(15), &p).unwrap();
    assert!((jet.residue - 1.0 / (480.0 * PI)).abs() < 1e-15);
    let mut prev = f64::INFINITY;
    for j in 5..14 {
        let s = 1.0 + 2f64.powi(-j);
        let val = m3_value(level(15), s, &p, PhiRoute::Closed).unwrap();
        let gap = (val - jet.eval(s)).abs();
        assert!(gap < prev && gap < 1e-2 * val, "j={j}: gap {gap}");
        prev = gap;
    }
}

#[test]
fn r_inf_hyp_substitution() {
    let sigma = Tagged::user(0.37);
    let h1 = r_inf_hyp(level(15), &kp(1.0), &sigma).unwrap();
    assert!((h1.value - 0.37 / (960.0 * PI)).abs() < 1e-16);
    assert_eq!(h1.selberg_source, Source::User);
    let h3 = r_inf_hyp(level(15), &kp(3.5), &sigma).unwrap();
    assert!((h3.value - h1.value + 2.5 / (960.0 * PI)).abs() < 1e-16);
}

#[test]
fn theta_truncation_at_15() {
    let th = theta_gamma(level(15), 1.0, 300, 40).unwrap();
    assert_eq!(th.traces, vec![223, 227]);
    assert!(th.classes > 0 && th.value > 0.0 && th.value < 1e-10, "{th:?}");
    let mut prev = 0.0;
    for t in [0.2, 0.4, 0.6, 0.8, 1.0] {
        let v = theta_gamma(level(15), t, 300, 40).unwrap().value;
        assert!(v > prev);
        prev = v;
    }
    let empty = theta_gamma(level(15), 1.0, 200, 40).unwrap();
    assert_eq!((empty.value, empty.classes), (0.0, 0));
    let int = theta_gamma_integral(level(15), 1.0, 300, 40, QuadSpec::default()).unwrap();
    assert!((0.0..1e-10).contains(&int));
}

#[test]
fn r_inf_terms_at_15() {
    let r = r_inf(level(15), &PipelineParams::default()).unwrap();
    assert_eq!(r.genus, 73);
    let c1_term = 12.0 / (15.0 * PI) * (-0.454_03 - 0.288_61 + 2.708_05);
    let sc_term = (0.454_03 + 1.0 - 5.416_10 - 0.204_39) / (480.0 * PI);
    let l_term = (1.0 - 2.531_02) / (4.0 * PI);
    assert!((r.c1_term - c1_term).abs() < 1e-5);
    assert!((r.scattering_term - sc_term).abs() < 1e-7);
    assert!((r.log4pi_term - l_term).abs() < 1e-5);
    assert_eq!(r.selberg_term, 0.0);
    assert!((r.value - (c1_term + sc_term + l_term) / 73.0).abs() < 1e-6);
    assert!(r.provenance.iter().all(|(_, s)| *s == Source::Default0));
    // coefficient of log N inside g·ℛ∞
    let coef = r_inf_log_n_coefficient(level(15)).unwrap();
    assert!((coef - (12.0 / (15.0 * PI) - 2.0 / (480.0 * PI))).abs() < 1e-15);
}

#[test]
fn hyperbolic_plus_parabolic_is_t_independent() {
    let lv = level(21);
    let params = PipelineParams { c1: Tagged::user(0.2), selberg_limit: Tagged::user(-1.3), ..Default::default() };
    let consts = ParabolicConstants { c1: params.c1.clone(), ..Default::default() };
    let target = r_inf(lv, &params).unwrap();
    let g = target.genus as f64;
    for t in [100.0, 150.0] {
        let p = kp(t);
        let hyp = r_inf_hyp(lv, &p, &params.selberg_limit).unwrap();
        let par = r_inf_par(lv, &p, &consts).unwrap();
        assert!(((hyp.value + par.value) / g - target.value).abs() < 1e-12, "T={t}");
    }
}
