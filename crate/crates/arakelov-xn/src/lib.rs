//! Batch commands over the `X(N)` toolkit: curve invariants, vertical pairings, hyperbolic
//! classes and their zeta values, spectral kernel tables, the `e(Γ(N))` decomposition, and the
//! oracle verification suites. Every command produces a [`Table`] of decimal strings.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

pub use commands::run;
pub use config::{Command, Format, RunConfig};
pub use output::{Table, SCHEMA_VERSION};
pub use verify::{Check, Suite};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("missing field `{field}`: {hint}")]
    MissingField { field: &'static str, hint: String },
    #[error(transparent)]
    Pipeline(#[from] xn_pipeline::PipelineError),
    #[error(transparent)]
    Spectral(#[from] xn_spectral::SpectralError),
    #[error(transparent)]
    Zeta(#[from] xn_zeta::ZetaError),
    #[error(transparent)]
    Hyperbolic(#[from] xn_hyperbolic::HypError),
    #[error(transparent)]
    Curve(#[from] xn_curve::CurveError),
    #[error(transparent)]
    Arith(#[from] xn_arith::ArithError),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{failed} of {total} checks failed")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    /// 1 for verification failures, 2 for configuration and output errors, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification { .. } => 1,
            CliError::Config(_) | CliError::MissingField { .. } | CliError::Io(_) => 2,
            _ => 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Verification { failed: 1, total: 2 }.exit_code(), 1);
        assert_eq!(CliError::Config("x".into()).exit_code(), 2);
        assert_eq!(CliError::MissingField { field: "params", hint: String::new() }.exit_code(), 2);
        let numeric = CliError::Zeta(xn_zeta::ZetaError::Domain("s".into()));
        assert_eq!(numeric.exit_code(), 3);
        let route = CliError::Pipeline(xn_pipeline::PipelineError::RouteMismatch { what: "x", n: 15 });
        assert_eq!(route.exit_code(), 3);
    }

    #[test]
    fn provenance_vocabulary() {
        for ok in ["exact", "computed", "user", "default0", "level gate", "computed;C1=default0;kappa=user"] {
            assert!(verify::provenance_ok(ok), "{ok}");
        }
        for bad in ["", "computed;", "computed;C1", "computed;C1=guess", "guess"] {
            assert!(!verify::provenance_ok(bad), "{bad}");
        }
    }

    #[test]
    fn suite_names() {
        let names = Suite::names();
        assert_eq!(names.len(), 12);
        assert!(names.contains(&"lemma41".to_string()));
        assert_eq!(Suite::each().len(), 11);
    }
}
