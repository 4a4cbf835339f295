//! Oracle suites run by `verify`: brute-force counts, two-route equalities, bijections, residue
//! extrapolations, dual quadrature routes and determinism of the pipeline output.

use crate::commands::pipeline_table;
use crate::config::Format;
use crate::output::Table;
use crate::CliError;
use clap::ValueEnum;
use std::f64::consts::PI;
use std::time::{Duration, Instant};
use xn_arith::{level_admissible, ratio, BigRational, Level};
use xn_curve::{brute_psl2_order, curve_data};
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

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Coset,
    Pairings,
    Geometric,
    #[value(name = "lemma41")]
    Lemma41,
    Pell,
    Residue,
    Dirichlet,
    Scattering,
    Kernels,
    Eisenstein,
    Pipeline,
    All,
}

impl Suite {
    pub fn names() -> Vec<String> {
        Suite::value_variants().iter().filter_map(|v| v.to_possible_value()).map(|p| p.get_name().to_string()).collect()
    }

    pub fn name(self) -> String {
        self.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
    }

    /// Every suite except `all`, in run order.
    pub fn each() -> Vec<Suite> {
        Suite::value_variants().iter().copied().filter(|s| *s != Suite::All).collect()
    }
}

/// The outcome of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    suite: String,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder { suite: suite.name(), checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { suite: self.suite.clone(), name: name.into(), passed, detail: detail.into() });
    }

    fn timed(&mut self, name: &str, elapsed: Duration, limit: Duration) {
        self.check(name, elapsed < limit, format!("{:.2} s (limit {} s)", elapsed.as_secs_f64(), limit.as_secs()));
    }
}

pub fn table(checks: &[Check]) -> Table {
    let mut t = Table::new("verify", &["suite", "check", "status", "detail"]);
    for c in checks {
        let status = if c.passed { "pass" } else { "fail" };
        t.push(vec![c.suite.clone(), c.name.clone(), status.into(), c.detail.clone()]);
    }
    t
}

pub fn run_suite(suite: Suite) -> Result<Vec<Check>, CliError> {
    if suite == Suite::All {
        let mut all = Vec::new();
        for s in Suite::each() {
            all.extend(run_suite(s)?);
        }
        return Ok(all);
    }
    let mut r = Recorder::new(suite);
    match suite {
        Suite::Coset => coset(&mut r)?,
        Suite::Pairings => pairings(&mut r)?,
        Suite::Geometric => geometric(&mut r)?,
        Suite::Lemma41 => lemma41(&mut r)?,
        Suite::Pell => pell(&mut r)?,
        Suite::Residue => residue(&mut r)?,
        Suite::Dirichlet => dirichlet(&mut r)?,
        Suite::Scattering => scattering(&mut r)?,
        Suite::Kernels => kernels(&mut r)?,
        Suite::Eisenstein => eisenstein(&mut r)?,
        Suite::Pipeline => pipeline(&mut r)?,
        Suite::All => unreachable!("handled above"),
    }
    Ok(r.checks)
}

fn lv(n: i64) -> Result<Level, CliError> {
    Ok(Level::new(n)?)
}

fn sci(x: f64) -> String {
    format!("{x:.6e}")
}

fn coset(r: &mut Recorder) -> Result<(), CliError> {
    let start = Instant::now();
    for (n, index, genus) in [(15u64, 1440u64, 73u64), (21, 4032, 241), (33, 15840, 1081)] {
        let cd = curve_data(n as i64)?;
        let brute = brute_psl2_order(n);
        r.check(
            format!("index N={n}"),
            cd.index == brute && brute == index,
            format!("curve_data {} / brute {} / expected {index}", cd.index, brute),
        );
        r.check(format!("genus N={n}"), cd.genus == genus, format!("{} (expected {genus})", cd.genus));
    }
    r.timed("runtime", start.elapsed(), Duration::from_secs(10));
    Ok(())
}

fn pairings(r: &mut Recorder) -> Result<(), CliError> {
    let mut levels = 0;
    let mut mismatches = Vec::new();
    for n in (3..=105).filter(|&n| level_admissible(n)) {
        let l = lv(n)?;
        if vertical_pairings_closed(l)? != vertical_pairings_components(l)? {
            mismatches.push(n);
        }
        levels += 1;
    }
    r.check(
        "closed = components, admissible N <= 105",
        mismatches.is_empty(),
        format!("{levels} levels, mismatches {mismatches:?}"),
    );
    let t = vertical_pairings(lv(15)?)?;
    let off = t.v0_vinf().to_f64();
    let diag = t.vinf_vinf().to_f64();
    r.check("(V0,Vinf) at N=15", (off - 1033.04).abs() <= 0.01, format!("{off} vs 1033.04 ± 0.01"));
    r.check("(Vinf,Vinf) at N=15", (diag + 4026.15).abs() <= 0.01, format!("{diag} vs -4026.15 ± 0.01"));
    Ok(())
}

fn geometric(r: &mut Recorder) -> Result<(), CliError> {
    let mut ratios = Vec::new();
    for n in [15, 105, 1155] {
        match geometric_contribution(lv(n)?) {
            Ok(g) => {
                r.check(format!("two routes N={n}"), true, "exact equality of 𝒢 and φ·(𝒢/φ)");
                ratios.push((n, g.ratio_to_g_log_n()));
                if n == 15 {
                    let v = g.over_phi_f64();
                    r.check("𝒢/φ at N=15", (v - 137.91).abs() <= 0.01, format!("{v} vs 137.91 ± 0.01"));
                }
            }
            Err(e) => r.check(format!("two routes N={n}"), false, e.to_string()),
        }
    }
    let decreasing = ratios.windows(2).all(|w| w[1].1 < w[0].1);
    let shown: Vec<String> = ratios.iter().map(|(n, x)| format!("N={n}: {x:.6}")).collect();
    r.check("𝒢/(φ g log N) decreasing over 15, 105, 1155", ratios.len() == 3 && decreasing, shown.join(", "));
    Ok(())
}

fn test_class() -> Result<(HyperbolicClass, PellUnit), CliError> {
    let k = make_class(lv(15)?, 227, 1, 1, -57)?;
    let unit = pell_unit(15, k.disc, 10_000)?;
    Ok((k, unit))
}

fn lemma41(r: &mut Recorder) -> Result<(), CliError> {
    const HEIGHT: i128 = 2000;
    let start = Instant::now();
    let (k, unit) = test_class()?;
    let n3 = ratio(15 * 15 * 15 * k.a as i64, 1);
    for u in [1u64, 2, 4, 7] {
        let lat = OrbitLattice::new(&k, u, &unit)?;
        let field = lat.field_slice(HEIGHT)?;
        let pairs = pair_slice(&k, &unit, u as i128, HEIGHT)?;
        let mut norm_ok = true;
        let mut inverse_ok = true;
        let mut mapped: Vec<(i128, i128, i128)> = field
            .iter()
            .map(|(m1, n1, xi)| {
                let (m, n) = lat.to_pair(*m1, *n1);
                let h = k.height(m, n);
                norm_ok &= BigRational::from_integer(h.into()) == xi.norm() * n3.clone();
                inverse_ok &= lat.from_pair(m, n) == Some((*m1, *n1));
                (h, m, n)
            })
            .collect();
        mapped.sort_unstable();
        let direct: Vec<(i128, i128, i128)> = pairs.iter().map(|p| (p.height, p.m, p.n)).collect();
        r.check(
            format!("bijection u={u}"),
            !direct.is_empty() && mapped == direct && inverse_ok,
            format!("{} field points, {} pairs", mapped.len(), direct.len()),
        );
        r.check(format!("norm identity u={u}"), norm_ok, "f(u + Nn', -Nm') = aN³·N(ξ) exactly");
    }
    r.timed("runtime", start.elapsed(), Duration::from_secs(60));
    Ok(())
}

fn pell(r: &mut Recorder) -> Result<(), CliError> {
    let unit = pell_unit(15, 229, 10_000)?;
    let t = unit.t.to_string();
    let v = unit.v.to_string();
    r.check("(t, v) = (227, 15)", t == "227" && v == "15", format!("({t}, {v})"));
    r.check(
        "ε = (227 + 15√229)/2",
        *unit.eps.x() == ratio(227, 2) && *unit.eps.y() == ratio(15, 2) && unit.disc == 229,
        unit.eps.to_string(),
    );
    r.check("norm 1", unit.eps.norm() == ratio(1, 1), unit.eps.norm().to_string());
    r.check("totally positive", unit.eps.is_totally_positive(), "");
    r.check("ε ≡ 1 mod 15·O_L", unit.eps.is_one_mod(15), "");
    let brute = pell_unit_brute(15, 229, 1_000_000);
    r.check("brute scan agrees", brute == Some((227, 15)), format!("{brute:?}"));
    r.check("log ε", (unit.log_eps - 5.42493).abs() <= 1e-5, format!("{} vs 5.42493 ± 1e-5", unit.log_eps));
    Ok(())
}

/// Height bound of the residue samples; beyond it the sum is replaced by its density tail.
pub const RESIDUE_HEIGHT: i128 = 1_000_000_000;

fn residue(r: &mut Recorder) -> Result<(), CliError> {
    let (k, unit) = test_class()?;
    let target = zeta_residue(&k, &unit).value;
    r.check("log ε/(N³√229)", (target - 1.0622e-4).abs() <= 5e-9, format!("{} vs 1.0622e-4", sci(target)));
    for u in [1u64, 2, 4, 7] {
        let e = zeta_residue_extrapolation(&k, &unit, u, RESIDUE_HEIGHT, &[0.5, 0.25, 0.125])?;
        let rel = (e.estimate - target).abs() / target;
        r.check(
            format!("Richardson (s-1)ζ(s), s = 1.5, 1.25, 1.125, u={u}"),
            rel <= 0.10,
            format!(
                "{} vs {}: {:.1}% off (limit 10%); height density {}",
                sci(e.estimate),
                sci(target),
                100.0 * rel,
                sci(e.density)
            ),
        );
    }
    for u in [1u64, 2, 4, 7] {
        let a = zeta_gamma_u(&k, &unit, u, 2.0, 200_000)?;
        let b = zeta_gamma_u_field_route(&k, &unit, u, 2.0, 200_000)?;
        let diff = (a.value - b.value).abs();
        r.check(
            format!("orbit routes at s=2, u={u}"),
            diff <= a.tail + b.tail,
            format!("|Δ| = {} <= tails {}", sci(diff), sci(a.tail + b.tail)),
        );
    }
    Ok(())
}

fn dirichlet(r: &mut Recorder) -> Result<(), CliError> {
    let rep = sum_du_constant(lv(15)?, &SeriesParams { bound: 1_000_000, ..SeriesParams::default() })?;
    r.check("N³/(π v) at N=15", (rep.closed - 0.712415).abs() <= 5e-7, format!("{}", rep.closed));
    let pm = rep.plus_minus_discrepancy().abs();
    let st = rep.strict_discrepancy().abs();
    let mut matching = Vec::new();
    if pm <= 1e-4 {
        matching.push("±u⁻¹");
    }
    if st <= 1e-4 {
        matching.push("u⁻¹");
    }
    r.check(
        "a sign convention matches within 1e-4",
        !matching.is_empty(),
        format!(
            "d ≡ ±u⁻¹: {} (tail {}), d ≡ u⁻¹: {} (tail {}); matching: {}",
            sci(pm),
            sci(rep.plus_minus.tail),
            sci(st),
            sci(rep.strict.tail),
            if matching.is_empty() { "none".to_string() } else { matching.join(", ") }
        ),
    );
    Ok(())
}

fn scattering(r: &mut Recorder) -> Result<(), CliError> {
    let l = lv(15)?;
    let expect = 1.0 / (480.0 * PI);
    r.check(
        "1/v at N=15",
        (inverse_volume(l)? - expect).abs() < 1e-15 && (expect - 6.6315e-4).abs() < 5e-9,
        sci(expect),
    );
    let est = scattering_residue_estimate(l, 0.2, 4, 1_000_000)?;
    let rel = (est.estimate - expect).abs() / expect;
    r.check(
        "extrapolated (s-1)φ(s)",
        rel <= 0.05,
        format!("{} vs {}: {:.2}% off (limit 5%)", sci(est.estimate), sci(expect), 100.0 * rel),
    );
    let mut bad = Vec::new();
    for k in 1..=20 {
        for conv in [DuConvention::Strict, DuConvention::PlusMinus] {
            if census_count(l, k, conv) != census_brute(l, k, conv) {
                bad.push((k, conv));
            }
        }
    }
    r.check("census = brute matrix scan, k <= 20", bad.is_empty(), format!("mismatches {bad:?}"));
    Ok(())
}

fn kernels(r: &mut Recorder) -> Result<(), CliError> {
    let mut worst = 0.0f64;
    for t in [0.5, 1.0, 2.0, 4.0, 8.0] {
        worst = worst.max(a2(&KernelParams::new(t)?)?.discrepancy());
    }
    r.check("A2 quadrature vs erf", worst <= 1e-8, format!("max {}", sci(worst)));
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for t in [1.0, 5.0, 10.0] {
        let p = KernelParams::new(t)?;
        for l in [3, 4, 5] {
            match a_l(&p, l)?.discrepancy() {
                Some(d) => worst = worst.max(d),
                None => failures.push((t, l)),
            }
        }
    }
    r.check(
        "A_l spectral vs heat",
        failures.is_empty() && worst <= 1e-6,
        format!("max {}, failed {failures:?}", sci(worst)),
    );
    let spec = KernelParams::new(1.0)?.quad;
    let mut worst = 0.0f64;
    for u in [0.5, 1.0, 2.0, 10.0] {
        worst = worst.max((heat_integral(u, spec)? - (-u / 2.0f64).exp()).abs());
    }
    r.check("∫ g(t,u) dt = e^{-u/2}", worst <= 1e-8, format!("max {}", sci(worst)));
    Ok(())
}

fn eisenstein(r: &mut Recorder) -> Result<(), CliError> {
    let l = lv(15)?;
    let params = SeriesParams { bound: 1_000_000, ..SeriesParams::default() };
    let c = eisenstein_zero_coeff(l, 2, 1, 2.0, 16, 4e8, &params)?;
    let phi = scattering_series(l, 2.0, 100_000, DuConvention::PlusMinus)?;
    let diff = (c.integral.value - c.prediction).abs();
    let bound = c.integral.tail + phi.tail / 2.0 + 16.0 * f64::EPSILON * c.prediction;
    r.check(
        "∫₀¹ E(σ(x+2i), 2) dx = 4 + φ(2)/2",
        diff <= bound,
        format!(
            "|Δ| = {} <= {} (lattice tail {}, φ tail/2 {})",
            sci(diff),
            sci(bound),
            sci(c.integral.tail),
            sci(phi.tail / 2.0)
        ),
    );
    let z = RationalPoint::from_parts(1, 3, 4, 5)?;
    let p = SeriesParams { bound: 100_000, ..SeriesParams::default() };
    let a = eisenstein_lattice_sum(l, &z, 2.0, 1e6, &p)?;
    let b = eisenstein_lattice_sum(l, &z.translate(15), 2.0, 1e6, &p)?;
    let norms_equal = lattice_norms(l, 1, &z, 1e6) == lattice_norms(l, 1, &z.translate(15), 1e6);
    r.check(
        "invariance under [[1,15],[0,1]]",
        a.value.to_bits() == b.value.to_bits() && norms_equal,
        format!("{} / {}", a.value, b.value),
    );
    Ok(())
}

fn pipeline(r: &mut Recorder) -> Result<(), CliError> {
    let params = PipelineParams::default();
    let l = lv(15)?;
    let a = e_invariant_report(l, &params)?;
    let b = e_invariant_report(l, &params)?;
    r.check("report reproducible", a == b, "");
    let t1 = pipeline_table(&[15], &params, 30)?;
    let t2 = pipeline_table(&[15], &params, 30)?;
    let csv1 = t1.render(Format::Csv)?;
    let json1 = t1.render(Format::Json)?;
    r.check(
        "byte-identical output",
        csv1 == t2.render(Format::Csv)? && json1 == t2.render(Format::Json)?,
        format!("{} CSV bytes", csv1.len()),
    );
    r.check("CSV and JSON carry identical strings", decoded_csv(&csv1) == decoded_json(&json1), "");
    let untagged: Vec<String> =
        t1.rows.iter().filter(|row| !provenance_ok(&row[3])).map(|row| format!("{}:{}", row[1], row[3])).collect();
    r.check("every number carries a tag", untagged.is_empty(), format!("untagged {untagged:?}"));
    r.check("C = 3/5 at N=15", a.analytic.c_exact == ratio(3, 5), a.analytic.c_exact.to_string());
    let mut bad = Vec::new();
    let mut count = 0;
    for n in (3..=10_000).filter(|&n| level_admissible(n)) {
        if curve_data(n)?.main_coefficient() != ratio(1, 1) - ratio(6, n) {
            bad.push(n);
        }
        count += 1;
    }
    r.check("C(N) = 1 - 6/N, admissible N <= 10⁴", bad.is_empty(), format!("{count} levels, mismatches {bad:?}"));
    Ok(())
}

fn decoded_csv(text: &str) -> Option<Vec<Vec<String>>> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    rd.records().map(|r| r.ok().map(|r| r.iter().map(str::to_string).collect())).collect()
}

fn decoded_json(text: &str) -> Option<Vec<Vec<String>>> {
    let v: serde_json::Value = serde_json::from_str(text).ok()?;
    v.get("rows")?
        .as_array()?
        .iter()
        .map(|row| row.as_array()?.iter().map(|c| c.as_str().map(str::to_string)).collect())
        .collect()
}

/// `exact`, `computed`, a plug-in source, the level gate, or `computed;name=source;…`.
pub fn provenance_ok(tag: &str) -> bool {
    let source = |s: &str| matches!(s, "user" | "default0" | "estimate");
    match tag {
        "exact" | "computed" | "level gate" => true,
        t if source(t) => true,
        t => t.strip_prefix("computed;").is_some_and(|rest| {
            rest.split(';').all(|kv| kv.split_once('=').is_some_and(|(k, s)| !k.is_empty() && source(s)))
        }),
    }
}
