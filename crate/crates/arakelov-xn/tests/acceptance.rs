//! Acceptance criteria 1-11, one PASS/FAIL line each. Criteria are implemented as stated with
//! their tolerances; the process exits nonzero if any criterion fails.

use arakelov_xn::commands::pipeline_table;
use arakelov_xn::Format;
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};
use xn_arith::{level_admissible, ratio, BigRational, Level};
use xn_curve::curve_data;
use xn_hyperbolic::{make_class, pair_slice, pell_unit, pell_unit_brute, HyperbolicClass, OrbitLattice, PellUnit};
use xn_pipeline::{
    e_invariant_report, geometric_contribution, vertical_pairings, vertical_pairings_closed,
    vertical_pairings_components,
};
use xn_spectral::{a2, a_l, heat_integral, KernelParams, PipelineParams};
use xn_zeta::{
    census_brute, census_count, eisenstein_lattice_sum, eisenstein_zero_coeff, inverse_volume, lattice_norms,
    scattering_residue_estimate, scattering_series, sum_du_constant, zeta_gamma_u, zeta_gamma_u_field_route,
    zeta_residue, zeta_residue_extrapolation, DuConvention, RationalPoint, SeriesParams,
};

type Outcome = Result<Vec<(bool, String)>, String>;

fn level(n: i64) -> Level {
    Level::new(n).expect("admissible level")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn item(ok: bool, detail: String) -> (bool, String) {
    (ok, detail)
}

/// `|SL₂(ℤ/N)|/2` by scanning all quadruples mod `N`.
fn psl2_order_scan(n: u64) -> u64 {
    let mut count = 0u64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if (a * d + n * n - (b * c) % n) % n == 1 % n {
                        count += 1;
                    }
                }
            }
        }
    }
    count / 2
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    for (n, index, genus) in [(15u64, 1440u64, 73u64), (21, 4032, 241), (33, 15840, 1081)] {
        let cd = curve_data(n as i64).map_err(err)?;
        let scan = psl2_order_scan(n);
        out.push(item(
            cd.index == scan && scan == index && cd.genus == genus,
            format!("N={n}: index {} (scan {scan}, expected {index}), genus {} (expected {genus})", cd.index, cd.genus),
        ));
    }
    let elapsed = start.elapsed();
    out.push(item(elapsed < Duration::from_secs(10), format!("runtime {:.2} s < 10 s", elapsed.as_secs_f64())));
    Ok(out)
}

fn criterion_2() -> Outcome {
    let mut mismatched = Vec::new();
    let mut count = 0;
    for n in (3..=105).filter(|&n| level_admissible(n)) {
        let lv = level(n);
        if vertical_pairings_closed(lv).map_err(err)? != vertical_pairings_components(lv).map_err(err)? {
            mismatched.push(n);
        }
        count += 1;
    }
    let t = vertical_pairings(level(15)).map_err(err)?;
    let off = t.v0_vinf().to_f64();
    let diag = t.vinf_vinf().to_f64();
    Ok(vec![
        item(
            mismatched.is_empty(),
            format!("closed = components symbolically for {count} admissible N <= 105, mismatches {mismatched:?}"),
        ),
        item((off - 1033.04).abs() <= 0.01, format!("(V0,Vinf) = {off:.6} vs 1033.04 ± 0.01")),
        item((diag + 4026.15).abs() <= 0.01, format!("(Vinf,Vinf) = {diag:.6} vs -4026.15 ± 0.01")),
    ])
}

fn criterion_3() -> Outcome {
    let mut out = Vec::new();
    let mut ratios = Vec::new();
    for n in [15, 105, 1155] {
        let g = geometric_contribution(level(n));
        out.push(item(g.is_ok(), format!("N={n}: 𝒢 and φ·(𝒢/φ) equal exactly: {}", g.is_ok())));
        if let Ok(g) = g {
            ratios.push(g.ratio_to_g_log_n());
            if n == 15 {
                let v = g.over_phi_f64();
                out.push(item((v - 137.91).abs() <= 0.01, format!("𝒢/φ at N=15 = {v:.6} vs 137.91 ± 0.01")));
            }
        }
    }
    let decreasing = ratios.len() == 3 && ratios[1] < ratios[0] && ratios[2] < ratios[1];
    out.push(item(decreasing, format!("𝒢/(φ g log N) decreasing over N = 15, 105, 1155: {ratios:.6?}")));
    Ok(out)
}

fn test_class() -> Result<(HyperbolicClass, PellUnit), String> {
    let k = make_class(level(15), 227, 1, 1, -57).map_err(err)?;
    let unit = pell_unit(15, k.disc, 10_000).map_err(err)?;
    Ok((k, unit))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let (k, unit) = test_class()?;
    let a_n3 = ratio(k.a as i64 * 3375, 1);
    let mut out = Vec::new();
    for u in [1u64, 2, 4, 7] {
        let lat = OrbitLattice::new(&k, u, &unit).map_err(err)?;
        let field = lat.field_slice(2000).map_err(err)?;
        let pairs = pair_slice(&k, &unit, u as i128, 2000).map_err(err)?;
        let mut exact = true;
        let mut image: Vec<(i128, i128, i128)> = Vec::with_capacity(field.len());
        for (m1, n1, xi) in &field {
            let (m, n) = lat.to_pair(*m1, *n1);
            let h = k.height(m, n);
            exact &= BigRational::from_integer(h.into()) == xi.norm() * a_n3.clone();
            exact &= lat.from_pair(m, n) == Some((*m1, *n1));
            image.push((h, m, n));
        }
        image.sort_unstable();
        let direct: Vec<(i128, i128, i128)> = pairs.iter().map(|p| (p.height, p.m, p.n)).collect();
        out.push(item(
            !direct.is_empty() && image == direct && exact,
            format!("u={u}: {} field points ↔ {} pairs, norm identity exact: {exact}", image.len(), direct.len()),
        ));
    }
    let elapsed = start.elapsed();
    out.push(item(elapsed < Duration::from_secs(60), format!("runtime {:.2} s < 60 s", elapsed.as_secs_f64())));
    Ok(out)
}

fn criterion_5() -> Outcome {
    let unit = pell_unit(15, 229, 10_000).map_err(err)?;
    let (t, v) = (unit.t.to_string(), unit.v.to_string());
    let eps = &unit.eps;
    // least v with 229v² + 4 = t², 15 | v and t ≡ 2 mod 15
    let scan = (1u64..100_000).find_map(|v| {
        let s = 229 * v * v + 4;
        let t = (s as f64).sqrt().round() as u64;
        (t * t == s && v % 15 == 0 && t % 15 == 2).then_some((t, v))
    });
    let brute = pell_unit_brute(15, 229, 1_000_000);
    Ok(vec![
        item(t == "227" && v == "15", format!("(t, v) = ({t}, {v})")),
        item(*eps.x() == ratio(227, 2) && *eps.y() == ratio(15, 2), format!("ε = {eps}")),
        item(eps.norm() == ratio(1, 1), format!("norm ε = {}", eps.norm())),
        item(eps.is_totally_positive(), "totally positive".into()),
        item(eps.is_one_mod(15), "ε ≡ 1 mod 15·O_L".into()),
        item(scan == Some((227, 15)) && brute == Some((227, 15)), format!("scans: {scan:?}, {brute:?}")),
        item((unit.log_eps - 5.42493).abs() <= 1e-5, format!("log ε = {:.8} vs 5.42493 ± 1e-5", unit.log_eps)),
    ])
}

fn criterion_6() -> Outcome {
    let (k, unit) = test_class()?;
    let target = unit.log_eps / (3375.0 * 229f64.sqrt());
    let mut out = vec![item(
        (zeta_residue(&k, &unit).value - target).abs() < 1e-15 && (target - 1.0622e-4).abs() <= 5e-9,
        format!("log ε/(N³√229) = {target:.6e}"),
    )];
    for u in [1u64, 2, 4, 7] {
        let e = zeta_residue_extrapolation(&k, &unit, u, 1_000_000_000, &[0.5, 0.25, 0.125]).map_err(err)?;
        let f: Vec<f64> = e.samples.iter().map(|p| p.1).collect();
        // quadratic in s - 1 through s - 1 = 1/2, 1/4, 1/8, evaluated at 0
        let richardson = f[0] / 3.0 - 2.0 * f[1] + 8.0 * f[2] / 3.0;
        let rel = (richardson - target).abs() / target;
        out.push(item(
            rel <= 0.10,
            format!(
                "u={u}: samples {:.4e}, {:.4e}, {:.4e} → {richardson:.4e}, {:.1}% off (limit 10%)",
                f[0],
                f[1],
                f[2],
                100.0 * rel
            ),
        ));
    }
    for u in [1u64, 2, 4, 7] {
        let a = zeta_gamma_u(&k, &unit, u, 2.0, 200_000).map_err(err)?;
        let b = zeta_gamma_u_field_route(&k, &unit, u, 2.0, 200_000).map_err(err)?;
        let diff = (a.value - b.value).abs();
        out.push(item(
            diff <= a.tail + b.tail,
            format!("u={u}: ζ(2) routes differ by {diff:.2e} <= tails {:.2e}", a.tail + b.tail),
        ));
    }
    Ok(out)
}

fn criterion_7() -> Outcome {
    let closed = 3375.0 / (PI * 480.0 * PI);
    let r = sum_du_constant(level(15), &SeriesParams { bound: 1_000_000, ..SeriesParams::default() }).map_err(err)?;
    let pm = (r.plus_minus.value - closed).abs();
    let strict = (r.strict.value - closed).abs();
    let which = match (pm <= 1e-4, strict <= 1e-4) {
        (true, true) => "both",
        (true, false) => "d ≡ ±u⁻¹ mod N",
        (false, true) => "d ≡ u⁻¹ mod N",
        (false, false) => "neither",
    };
    Ok(vec![
        item((closed - 0.712415).abs() <= 5e-7 && (r.closed - closed).abs() < 1e-14, format!("N³/(πv) = {closed:.7}")),
        item(
            pm <= 1e-4 || strict <= 1e-4,
            format!("|Σ D_u(1) - closed|: ± convention {pm:.2e}, strict {strict:.2e} (d <= 10⁶); matching: {which}"),
        ),
    ])
}

fn criterion_8() -> Outcome {
    let lv = level(15);
    let expect = 1.0 / (480.0 * PI);
    let est = scattering_residue_estimate(lv, 0.2, 4, 1_000_000).map_err(err)?;
    let rel = (est.estimate - expect).abs() / expect;
    let mut mismatches = Vec::new();
    for k in 1..=20 {
        for conv in [DuConvention::Strict, DuConvention::PlusMinus] {
            if census_count(lv, k, conv) != census_brute(lv, k, conv) {
                mismatches.push((k, conv));
            }
        }
    }
    Ok(vec![
        item(
            (inverse_volume(lv).map_err(err)? - expect).abs() < 1e-15 && (expect - 6.6315e-4).abs() <= 5e-9,
            format!("1/(480π) = {expect:.5e}"),
        ),
        item(rel <= 0.05, format!("extrapolated (s-1)φ(s) = {:.5e}, {:.2}% off (limit 5%)", est.estimate, 100.0 * rel)),
        item(mismatches.is_empty(), format!("census = brute for k <= 20, mismatches {mismatches:?}")),
    ])
}

fn criterion_9() -> Outcome {
    let mut a2_worst = 0.0f64;
    for t in [0.5, 1.0, 2.0, 4.0, 8.0] {
        a2_worst = a2_worst.max(a2(&KernelParams::new(t).map_err(err)?).map_err(err)?.discrepancy());
    }
    let mut al_worst = 0.0f64;
    let mut al_ok = true;
    for t in [1.0, 5.0, 10.0] {
        let p = KernelParams::new(t).map_err(err)?;
        for l in [3, 4, 5] {
            match a_l(&p, l).map_err(err)?.discrepancy() {
                Some(d) => al_worst = al_worst.max(d),
                None => al_ok = false,
            }
        }
    }
    let spec = KernelParams::new(1.0).map_err(err)?.quad;
    let mut heat_worst = 0.0f64;
    for u in [0.5f64, 1.0, 2.0, 10.0] {
        heat_worst = heat_worst.max((heat_integral(u, spec).map_err(err)? - (-u / 2.0).exp()).abs());
    }
    Ok(vec![
        item(a2_worst <= 1e-8, format!("A₂ quadrature vs erf: max {a2_worst:.2e} <= 1e-8")),
        item(al_ok && al_worst <= 1e-6, format!("A_l spectral vs heat: max {al_worst:.2e} <= 1e-6")),
        item(heat_worst <= 1e-8, format!("∫g(t,u)dt vs e^(-u/2): max {heat_worst:.2e} <= 1e-8")),
    ])
}

fn criterion_10() -> Outcome {
    let lv = level(15);
    let params = SeriesParams { bound: 1_000_000, ..SeriesParams::default() };
    let c = eisenstein_zero_coeff(lv, 2, 1, 2.0, 16, 4e8, &params).map_err(err)?;
    let phi = scattering_series(lv, 2.0, 100_000, DuConvention::PlusMinus).map_err(err)?;
    let prediction = 4.0 + phi.value / 2.0;
    let diff = (c.integral.value - prediction).abs();
    // lattice truncation, φ truncation, and rounding of the 16-node average
    let bound = c.integral.tail + phi.tail / 2.0 + 16.0 * f64::EPSILON * prediction;
    let z = RationalPoint::from_parts(1, 3, 4, 5).map_err(err)?;
    let sp = SeriesParams { bound: 100_000, ..SeriesParams::default() };
    let a = eisenstein_lattice_sum(lv, &z, 2.0, 1e6, &sp).map_err(err)?;
    let b = eisenstein_lattice_sum(lv, &z.translate(15), 2.0, 1e6, &sp).map_err(err)?;
    let same_norms = lattice_norms(lv, 1, &z, 1e6) == lattice_norms(lv, 1, &z.translate(15), 1e6);
    Ok(vec![
        item(diff <= bound, format!("|∫E - (4 + φ(2)/2)| = {diff:.2e} <= {bound:.2e}")),
        item(a.value.to_bits() == b.value.to_bits() && same_norms, "E(z) = E(z + 15) bit for bit".into()),
    ])
}

fn tag_ok(tag: &str) -> bool {
    let source = |s: &str| ["user", "default0", "estimate"].contains(&s);
    if ["exact", "computed", "level gate"].contains(&tag) || source(tag) {
        return true;
    }
    tag.strip_prefix("computed;")
        .is_some_and(|rest| rest.split(';').all(|kv| kv.split_once('=').is_some_and(|(_, s)| source(s))))
}

fn criterion_11() -> Outcome {
    let params = PipelineParams::default();
    let a = e_invariant_report(level(15), &params).map_err(err)?;
    let b = e_invariant_report(level(15), &params).map_err(err)?;
    let t1 = pipeline_table(&[15], &params, 30).map_err(err)?;
    let t2 = pipeline_table(&[15], &params, 30).map_err(err)?;
    let bytes = |t: &arakelov_xn::Table| -> Result<(String, String), String> {
        Ok((t.render(Format::Csv).map_err(err)?, t.render(Format::Json).map_err(err)?))
    };
    let reproducible = a == b && bytes(&t1)? == bytes(&t2)?;
    let untagged: Vec<&str> = t1.rows.iter().filter(|r| !tag_ok(&r[3])).map(|r| r[1].as_str()).collect();
    let mut bad = Vec::new();
    let mut count = 0;
    for n in (3..=10_000).filter(|&n| level_admissible(n)) {
        if curve_data(n).map_err(err)?.main_coefficient() != ratio(1, 1) - ratio(6, n) {
            bad.push(n);
        }
        count += 1;
    }
    Ok(vec![
        item(
            reproducible,
            "e_invariant_report(15, defaults) and its CSV/JSON renderings are byte-identical across runs".into(),
        ),
        item(
            untagged.is_empty() && !t1.rows.is_empty(),
            format!("{} output rows, untagged: {untagged:?}", t1.rows.len()),
        ),
        item(a.analytic.c_exact == ratio(3, 5), format!("C(15) = {}", a.analytic.c_exact)),
        item(bad.is_empty(), format!("C(N) = 1 - 6/N exactly for {count} admissible N <= 10⁴, mismatches {bad:?}")),
    ])
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("index and genus against coset enumeration", criterion_1),
        ("two-route exactness of the vertical pairings", criterion_2),
        ("geometric contribution: routes, value, trend", criterion_3),
        ("field/pair bijection on the fundamental slice", criterion_4),
        ("Pell unit for D = 229", criterion_5),
        ("residue of ζ_{γ,u} by Richardson extrapolation; orbit routes", criterion_6),
        ("Σ_u D_u(1) against N³/(πv)", criterion_7),
        ("scattering residue and census counts", criterion_8),
        ("A₂, A_l and heat-kernel dual routes", criterion_9),
        ("Eisenstein zeroth Fourier coefficient and Γ-invariance", criterion_10),
        ("pipeline determinism, provenance and C(N)", criterion_11),
    ];
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (ok, lines) = match outcome {
            Ok(items) => (items.iter().all(|(ok, _)| *ok), items),
            Err(e) => (false, vec![(false, format!("error: {e}"))]),
        };
        println!("{} {id:>2}  {title} ({secs:.2} s)", if ok { "PASS" } else { "FAIL" });
        for (ok, detail) in lines {
            println!("        {} {detail}", if ok { "ok  " } else { "FAIL" });
        }
        if !ok {
            failed.push(id);
        }
    }
    println!("acceptance: {} passed, {} failed {failed:?}", criteria.len() - failed.len(), failed.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
