//! Hyperbolic elements `γ_l(a, b, c)` of `Γ(N)`, the quadratic forms they stabilize, Pell units
//! generating `U₊(N)`, and the orbit structure of the lattices `M(u)` under the stabilizers.

mod class;
mod orbit;
mod pell;

pub use class::{
    beta_l, beta_l_inv, class_representatives, enumerate_sp_l, make_class, CensusClass, ClassCensus, Form,
    HyperbolicClass,
};
pub use orbit::{
    bfs_orbit_count, in_positive_coset, lattice_member, orbit_representatives, pair_slice, partial_zeta,
    positive_member, OrbitLattice, OrbitRep, Sheet,
};
pub use pell::{
    fundamental_solution, pell_unit, pell_unit_brute, stabilizer_matrix, unit_exponent, PellSolution, PellUnit,
};

use thiserror::Error;
use xn_arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("trace {0} is not hyperbolic (|l| <= 2)")]
    NotHyperbolic(i128),
    #[error("N² = {}² does not divide l² - 4 for l = {l}", n)]
    TraceNotAdmissible { l: i128, n: u64 },
    #[error("leading coefficient a = {0} is not positive")]
    NonPositiveLeading(i128),
    #[error("gcd({a}, {b}, {c}) != 1")]
    NotPrimitive { a: i128, b: i128, c: i128 },
    #[error("congruence failure for l = {l}, b = {b}: {reason}")]
    Congruence { l: i128, b: i128, reason: &'static str },
    #[error("l² - 4 != N²·D for l = {l}, D = {disc}, N = {n}")]
    DiscriminantMismatch { l: i128, disc: i128, n: u64 },
    #[error("discriminant {0} is a square or not positive")]
    SquareDiscriminant(i128),
    #[error("form discriminant {disc} differs from l² - 4 = {expected}")]
    FormDiscriminant { disc: i128, expected: i128 },
    #[error("no unit ≡ 1 mod {n} for D = {d} among the first {max_power} powers")]
    PellBound { d: i128, n: u64, max_power: u32 },
    #[error("u = {u} is not a unit mod {n}")]
    NotAUnit { u: u64, n: u64 },
    #[error("unit for D = {unit} used with a class of discriminant {class}")]
    UnitMismatch { unit: i128, class: i128 },
    #[error("height bound must be positive, got {0}")]
    InvalidBound(i128),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
