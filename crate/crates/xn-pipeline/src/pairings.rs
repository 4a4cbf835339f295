//! `(V₀, V∞)`, `(V₀, V₀)` and `(V∞, V∞)` as exact combinations of `log p`, from the closed
//! forms and from the component intersection numbers of the fibers above `p | N`.

use crate::PipelineError;
use xn_arith::{ratio, BigRational, Level, LogLinear};
use xn_curve::{curve_data, fiber_data, FiberData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePairings {
    pub p: u64,
    pub v0_vinf: LogLinear,
    pub v0_v0: LogLinear,
    pub vinf_vinf: LogLinear,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingTable {
    pub level: Level,
    pub per_prime: Vec<PrimePairings>,
}

impl PairingTable {
    fn total(&self, f: impl Fn(&PrimePairings) -> &LogLinear) -> LogLinear {
        self.per_prime.iter().fold(LogLinear::zero(), |acc, pp| acc.add(f(pp)))
    }

    pub fn v0_vinf(&self) -> LogLinear {
        self.total(|pp| &pp.v0_vinf)
    }

    /// Equal to `(V₀, V∞)`; the pairing is symmetric.
    pub fn vinf_v0(&self) -> LogLinear {
        self.v0_vinf()
    }

    pub fn v0_v0(&self) -> LogLinear {
        self.total(|pp| &pp.v0_v0)
    }

    pub fn vinf_vinf(&self) -> LogLinear {
        self.total(|pp| &pp.vinf_vinf)
    }
}

fn int(n: u64) -> BigRational {
    ratio(n as i64, 1)
}

/// `4(g-1)φ(N)(1 - 6/N)`.
fn pairing_scale(level: Level) -> Result<BigRational, PipelineError> {
    let cd = curve_data(level.get() as i64)?;
    let n = level.get() as i64;
    Ok(int(4 * (cd.genus - 1) * level.phi()) * (ratio(1, 1) - ratio(6, n)))
}

/// `(V₀,V∞) = K Σ p log p/(p²-1)`, `(V₀,V₀) = (V∞,V∞) = -K Σ p² log p/(p²-1)`,
/// `K = 4(g-1)φ(N)(1 - 6/N)`.
pub fn vertical_pairings_closed(level: Level) -> Result<PairingTable, PipelineError> {
    let k = pairing_scale(level)?;
    let per_prime = level
        .primes()
        .into_iter()
        .map(|p| {
            let d = (p * p - 1) as i64;
            let off = LogLinear::term(p, &k * ratio(p as i64, d));
            let diag = LogLinear::term(p, -(&k * ratio((p * p) as i64, d)));
            PrimePairings { p, v0_vinf: off, v0_v0: diag.clone(), vinf_vinf: diag }
        })
        .collect();
    Ok(PairingTable { level, per_prime })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cusp {
    Zero,
    Infinity,
}

/// `(C_{q,𝔭}, C_{q',𝔭'})` summed over the primes `𝔭 | p`, `𝔭' | p'`, as a multiple of `log p`:
/// zero for different primes, `s_p Σ log #k(𝔭)` off the diagonal, `-(r_p - 1)s_p Σ log #k(𝔭)` on it.
fn component_pairing(q: Cusp, fp: &FiberData, q2: Cusp, fp2: &FiberData) -> LogLinear {
    if fp.p != fp2.p {
        return LogLinear::zero();
    }
    let log_k = fp.residue_log_sum();
    let s = int(fp.s_p);
    if q == q2 {
        log_k.scale(&(-int(fp.r_p - 1) * s))
    } else {
        log_k.scale(&s)
    }
}

/// `V_q = Σ_{𝔭|N} 2(g-1)/(r_𝔭 s_𝔭) C_{q,𝔭}` paired bilinearly.
fn pair(q: Cusp, q2: Cusp, fibers: &[FiberData], genus: u64) -> Vec<LogLinear> {
    let coeff = |f: &FiberData| ratio(2 * (genus as i64 - 1), (f.r_p * f.s_p) as i64);
    fibers
        .iter()
        .map(|f| {
            fibers.iter().fold(LogLinear::zero(), |acc, f2| {
                acc.add(&component_pairing(q, f, q2, f2).scale(&(coeff(f) * coeff(f2))))
            })
        })
        .collect()
}

/// The pairings assembled from component intersection numbers and the fiber data `r_p`, `s_p`.
pub fn vertical_pairings_components(level: Level) -> Result<PairingTable, PipelineError> {
    let genus = curve_data(level.get() as i64)?.genus;
    let fibers = level.primes().into_iter().map(|p| fiber_data(level, p)).collect::<Result<Vec<_>, _>>()?;
    let off = pair(Cusp::Zero, Cusp::Infinity, &fibers, genus);
    let off_rev = pair(Cusp::Infinity, Cusp::Zero, &fibers, genus);
    let d0 = pair(Cusp::Zero, Cusp::Zero, &fibers, genus);
    let dinf = pair(Cusp::Infinity, Cusp::Infinity, &fibers, genus);
    if off != off_rev {
        return Err(PipelineError::RouteMismatch { what: "pairing symmetry", n: level.get() });
    }
    let per_prime = fibers
        .iter()
        .enumerate()
        .map(|(i, f)| PrimePairings {
            p: f.p,
            v0_vinf: off[i].clone(),
            v0_v0: d0[i].clone(),
            vinf_vinf: dinf[i].clone(),
        })
        .collect();
    Ok(PairingTable { level, per_prime })
}

/// Both routes, which must agree exactly.
pub fn vertical_pairings(level: Level) -> Result<PairingTable, PipelineError> {
    let a = vertical_pairings_closed(level)?;
    let b = vertical_pairings_components(level)?;
    if a != b {
        return Err(PipelineError::RouteMismatch { what: "vertical pairings", n: level.get() });
    }
    Ok(a)
}
