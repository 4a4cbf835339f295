//! High-precision constants, generated by `scripts/gen_constants.py`.
//! Do not edit by hand.

/// Pi.
pub const PI: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899";
/// Euler-Mascheroni constant.
pub const EULER_GAMMA: &str = "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467";
/// Derivative of the Riemann zeta function at -1.
pub const ZETA_PRIME_M1: &str = "-0.16542114370045092921391966024278064276403638033520178366652230635735969966657717";
/// Logarithm of the Glaisher-Kinkelin constant.
pub const LN_GLAISHER: &str = "0.24875447703378426254725299357611397609736971366853511699985563969069303299991050";
/// 1 - log(4 pi) + zeta'(-1)/zeta(-1).
pub const SCATTERING_C: &str = "0.45402947743612035758914432864395586537014148238659932424328458582939138217471056";
