//! The six commands, each producing one [`Table`].

use crate::config::{Command, RunConfig};
use crate::output::Table;
use crate::verify;
use crate::CliError;
use std::fs::File;
use std::io::{BufWriter, Write};
use xn_arith::{BigRational, Level, LogLinear};
use xn_curve::curve_data;
use xn_hyperbolic::{class_representatives, pell_unit};
use xn_pipeline::{
    asymptotic_table, geometric_contribution, render_f64, render_loglinear, vertical_pairings, DecompositionReport,
    TableRow,
};
use xn_spectral::{a2, a_l, KernelParams, PipelineParams, SelbergTransform, Source, Weight};
use xn_zeta::{zeta_gamma_u, zeta_residue, Kappa};

/// Entry bound of the class enumeration in `hyperbolic`.
pub const CLASS_ENTRY_BOUND: i128 = 40;
/// Largest power of the fundamental unit tried when solving for `ε`.
const UNIT_MAX_POWER: u32 = 10_000;
/// Traces `l` of the `A_l(T)` rows in `spectral`.
pub const SPECTRAL_TRACES: [i64; 3] = [3, 4, 5];

/// A command's table and the number of failed checks (nonzero only for `verify`).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub failed: usize,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let table = match cfg.command {
        Command::Invariants => invariants(cfg)?,
        Command::Geometry => geometry(cfg)?,
        Command::Hyperbolic => hyperbolic(cfg)?,
        Command::Spectral => spectral(cfg)?,
        Command::Pipeline => pipeline(cfg)?,
        Command::Verify => {
            let suite = cfg.suite.ok_or_else(|| CliError::Config("no suite selected".into()))?;
            let checks = verify::run_suite(suite)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            return Ok(Outcome { table: verify::table(&checks), failed });
        }
    };
    Ok(Outcome { table, failed: 0 })
}

/// Runs `cfg` and writes its table; a verification failure is reported after the table is written.
pub fn execute(cfg: &RunConfig) -> Result<(), CliError> {
    let outcome = run(cfg)?;
    match &cfg.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            outcome.table.write(cfg.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            outcome.table.write(cfg.format, &mut lock)?;
            lock.flush()?;
        }
    }
    if outcome.failed > 0 {
        return Err(CliError::Verification { failed: outcome.failed, total: outcome.table.rows.len() });
    }
    Ok(())
}

fn level(n: i64) -> Result<Level, CliError> {
    Ok(Level::new(n)?)
}

fn rat(x: &BigRational) -> String {
    x.to_string()
}

fn invariants(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t =
        Table::new("invariants", &["N", "index", "genus", "cusps", "vol_over_pi", "main_coefficient", "volume"]);
    for &n in &cfg.levels {
        let cd = curve_data(n)?;
        t.push(vec![
            n.to_string(),
            cd.index.to_string(),
            cd.genus.to_string(),
            cd.cusp_count.to_string(),
            rat(&cd.vol_over_pi),
            rat(&cd.main_coefficient()),
            render_f64(cd.volume(), cfg.precision),
        ]);
    }
    Ok(t)
}

fn geometry(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new("geometry", &["N", "quantity", "p", "symbolic", "value"]);
    let d = cfg.precision;
    for &n in &cfg.levels {
        let lv = level(n)?;
        let pairings = vertical_pairings(lv)?;
        let mut push = |q: &str, p: &str, x: &LogLinear| {
            t.push(vec![n.to_string(), q.to_string(), p.to_string(), x.to_string(), render_loglinear(x, d)]);
        };
        for pp in &pairings.per_prime {
            let p = pp.p.to_string();
            push("V0_Vinf", &p, &pp.v0_vinf);
            push("V0_V0", &p, &pp.v0_v0);
            push("Vinf_Vinf", &p, &pp.vinf_vinf);
        }
        push("V0_Vinf", "all", &pairings.v0_vinf());
        push("Vinf_V0", "all", &pairings.vinf_v0());
        push("V0_V0", "all", &pairings.v0_v0());
        push("Vinf_Vinf", "all", &pairings.vinf_vinf());
        let g = geometric_contribution(lv)?;
        push("G", "all", &g.total);
        push("G_over_phi", "all", &g.over_phi);
        t.push(vec![
            n.to_string(),
            "G_over_phi_g_log_N".into(),
            "all".into(),
            String::new(),
            render_f64(g.ratio_to_g_log_n(), d),
        ]);
    }
    Ok(t)
}

/// Least trace `l > 2` of a hyperbolic element of `Γ(N)`; traces there are `≡ ±2 mod N²`.
pub fn least_trace(n: i64) -> i128 {
    (n as i128) * (n as i128) - 2
}

fn hyperbolic(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new("hyperbolic", &["N", "l", "class", "D", "quantity", "u", "value"]);
    let d = cfg.precision;
    for &n in &cfg.levels {
        let lv = level(n)?;
        let l = cfg.trace.unwrap_or_else(|| least_trace(n));
        let n2 = (n as i128) * (n as i128);
        if l.abs() <= 2 || ((l - 2) % n2 != 0 && (l + 2) % n2 != 0) {
            return Err(CliError::Config(format!(
                "trace {l} is not admissible at N = {n}: need |l| > 2 and l ≡ ±2 mod N²"
            )));
        }
        let census = class_representatives(lv, l, CLASS_ENTRY_BOUND);
        let summary = |q: &str, v: String| {
            vec![n.to_string(), l.to_string(), String::new(), String::new(), q.into(), String::new(), v]
        };
        t.push(summary("classes_found", census.classes.len().to_string()));
        t.push(summary("census_complete", census.complete.to_string()));
        for k in census.classes.iter().map(|c| &c.rep) {
            let unit = pell_unit(n as u64, k.disc, UNIT_MAX_POWER)?;
            let residue = zeta_residue(k, &unit);
            let class = format!("({},{},{})", k.a, k.b, k.c);
            let mut push = |q: &str, u: String, v: String| {
                t.push(vec![n.to_string(), l.to_string(), class.clone(), k.disc.to_string(), q.into(), u, v]);
            };
            push("unit_t", String::new(), unit.t.to_string());
            push("unit_v", String::new(), unit.v.to_string());
            push("unit_power", String::new(), unit.power.to_string());
            push("log_eps", String::new(), render_f64(unit.log_eps, d));
            push("residue", String::new(), render_f64(residue.value, d));
            for u in lv.unit_reps() {
                let z = zeta_gamma_u(k, &unit, u, 2.0, cfg.bound as i128)?;
                push("zeta_at_2", u.to_string(), render_f64(z.value, d));
                push("zeta_at_2_tail", u.to_string(), render_f64(z.tail, d));
            }
        }
    }
    Ok(t)
}

fn spectral(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new("spectral", &["T", "quantity", "l", "value"]);
    let d = cfg.precision;
    for &tt in &cfg.t_grid {
        let p = KernelParams::new(tt)?;
        let ts = tt.to_string();
        let mut push = |q: &str, l: String, v: f64| t.push(vec![ts.clone(), q.into(), l, render_f64(v, d)]);
        let a = a2(&p)?;
        push("A2_closed", String::new(), a.primary);
        push("A2_quadrature", String::new(), a.alternate);
        push("A2_discrepancy", String::new(), a.discrepancy());
        for l in SPECTRAL_TRACES {
            let r = a_l(&p, l)?;
            let spectral = r.spectral.clone()?;
            push("A_l_heat", l.to_string(), r.heat);
            push("A_l_spectral", l.to_string(), spectral);
            push("A_l_discrepancy", l.to_string(), (spectral - r.heat).abs());
            push("A_l_tail_bound", l.to_string(), r.tail_bound);
        }
        let tr = SelbergTransform::new(p);
        push("phi0_at_0", String::new(), tr.phi(Weight::Zero, 0.0)?);
        push("phi2_at_0", String::new(), tr.phi(Weight::Two, 0.0)?);
        push("h_mass", String::new(), tr.h_mass());
    }
    Ok(t)
}

fn provenance(list: &[(&'static str, Source)]) -> String {
    if list.is_empty() {
        return "computed".into();
    }
    let tags: Vec<String> = list.iter().map(|(name, s)| format!("{name}={s}")).collect();
    format!("computed;{}", tags.join(";"))
}

fn kappa_label(k: &Kappa) -> &'static str {
    match k {
        Kappa::Zero => "zero",
        _ => "table",
    }
}

/// Rows of one pipeline report; the `provenance` column is `exact`, `computed`, a plug-in
/// source, or `computed;` followed by the plug-ins the value depends on.
fn report_rows(t: &mut Table, r: &DecompositionReport, params: &PipelineParams, d: usize) {
    let n = r.level.get().to_string();
    let mut push =
        |q: &str, v: String, prov: String, note: &str| t.push(vec![n.clone(), q.into(), v, prov, note.into()]);
    push("param_C1", params.c1.value.to_string(), params.c1.source.to_string(), "");
    push("param_selberg_limit", params.selberg_limit.value.to_string(), params.selberg_limit.source.to_string(), "");
    push("param_G_const", params.g_const.value.to_string(), params.g_const.source.to_string(), "");
    push("param_kappa", kappa_label(&params.kappa.value).into(), params.kappa.source.to_string(), "");
    push("genus", r.genus.to_string(), "exact".into(), "");
    push("phi", r.phi.to_string(), "exact".into(), "");
    push("C", rat(&r.analytic.c_exact), "exact".into(), "4π(g-1)/v = 1 - 6/N");
    push("G_over_phi", render_loglinear(&r.geometric.over_phi, d), "exact".into(), "");
    push("main_term", render_f64(r.analytic.main_term, d), "computed".into(), "2Cg log N");
    for b in &r.analytic.blocks {
        push(&format!("block_{}", b.name), render_f64(b.value, d), provenance(&b.provenance), b.order);
        push(
            &format!("block_{}_over_g_log_N", b.name),
            render_f64(b.ratio_to_g_log_n, d),
            provenance(&b.provenance),
            "",
        );
    }
    let all = provenance(&r.provenance);
    push("A_over_phi", render_f64(r.analytic.over_phi, d), all.clone(), "main term plus blocks");
    push("A_over_phi_direct", render_f64(r.analytic.direct_over_phi, d), all.clone(), "sum over the cusps 0_ξ");
    push("e_estimate", render_f64(r.e_estimate, d), all.clone(), "");
    push("g_log_N", render_f64(r.g_log_n, d), "computed".into(), "");
    push("e_over_g_log_N", render_f64(r.ratio_g_log_n(), d), all.clone(), "");
    push("e_over_2g_log_N", render_f64(r.ratio_2g_log_n(), d), all, "");
}

pub fn pipeline_table(levels: &[i64], params: &PipelineParams, precision: usize) -> Result<Table, CliError> {
    let mut t = Table::new("pipeline", &["N", "quantity", "value", "provenance", "note"]);
    for row in asymptotic_table(levels, params)? {
        match row {
            TableRow::Report(r) => report_rows(&mut t, &r, params, precision),
            TableRow::Rejected { n, reason } => {
                t.push(vec![n.to_string(), "rejected".into(), String::new(), "level gate".into(), reason]);
            }
        }
    }
    Ok(t)
}

fn pipeline(cfg: &RunConfig) -> Result<Table, CliError> {
    pipeline_table(&cfg.levels, &cfg.params, cfg.precision)
}
