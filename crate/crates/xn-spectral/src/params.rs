//! Plug-in constants of the final assembly, each carrying where its value came from.

use std::fmt;
use xn_zeta::Kappa;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    User,
    Default0,
    Estimate,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::User => "user",
            Source::Default0 => "default0",
            Source::Estimate => "estimate",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tagged<T> {
    pub value: T,
    pub source: Source,
}

impl<T> Tagged<T> {
    pub fn user(value: T) -> Self {
        Tagged { value, source: Source::User }
    }

    pub fn estimate(value: T) -> Self {
        Tagged { value, source: Source::Estimate }
    }
}

impl<T: Default> Tagged<T> {
    pub fn default0() -> Self {
        Tagged { value: T::default(), source: Source::Default0 }
    }
}

impl<T: Default> Default for Tagged<T> {
    fn default() -> Self {
        Self::default0()
    }
}

/// External constants: `C₁ = lim C₁(T)`, `lim_{s→1}(Z'/Z(s) - 1/(s-1))`, the Green's function
/// constant `𝒢`, and the correction `κ(ξ)` of the scattering constants.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PipelineParams {
    pub c1: Tagged<f64>,
    pub selberg_limit: Tagged<f64>,
    pub g_const: Tagged<f64>,
    pub kappa: Tagged<Kappa>,
}

impl PipelineParams {
    /// `(name, source)` for every field, in a fixed order.
    pub fn provenance(&self) -> Vec<(&'static str, Source)> {
        vec![
            ("C1", self.c1.source),
            ("selberg_limit", self.selberg_limit.source),
            ("G_const", self.g_const.source),
            ("kappa", self.kappa.source),
        ]
    }
}
