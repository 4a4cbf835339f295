//! Intersection pairings of the vertical divisors `V₀`, `V∞` on the regular model of `X(N)`,
//! the split of `φ(N)·e(Γ(N))` into a geometric part `𝒢(N)` and an analytic part `𝒜(N)`,
//! and per-level tables of the resulting estimates.

mod decomposition;
mod pairings;
mod render;

pub use decomposition::{
    analytic_contribution, asymptotic_table, correction_sums, e_invariant_report, geometric_contribution,
    green_at_cusps, AnalyticBreakdown, Block, CorrectionSums, DecompositionReport, Geometric, GreenBreakdown, TableRow,
};
pub use pairings::{
    vertical_pairings, vertical_pairings_closed, vertical_pairings_components, PairingTable, PrimePairings,
};
pub use render::{render_f64, render_fixed, render_loglinear, RENDER_DIGITS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Arith(#[from] xn_arith::ArithError),
    #[error(transparent)]
    Curve(#[from] xn_curve::CurveError),
    #[error(transparent)]
    Zeta(#[from] xn_zeta::ZetaError),
    #[error(transparent)]
    Spectral(#[from] xn_spectral::SpectralError),
    #[error("routes disagree for {what} at N = {n}")]
    RouteMismatch { what: &'static str, n: u64 },
}
