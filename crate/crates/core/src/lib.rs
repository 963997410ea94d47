//! Endomorphism counting for the irreducible spherical reflection groups.
//!
//! The crate is split the same way the computation is:
//!
//! * [`groups`] holds concrete element arithmetic (signed permutations for
//!   `A_n`, `C_n`, `D_n`; dihedral elements for `I_2(m)`; exact golden-ratio
//!   matrices for `H_3`; half-integer matrices for `F_4`) and Coxeter
//!   presentations for every family.
//! * [`classify`] computes signed cycle-types, involution-types and signs.
//! * [`counting`] evaluates every closed-form count with exact big integers.
//! * [`tables`] assembles endomorphism and homomorphism tables.
//! * [`oracle`] enumerates homomorphisms by brute force and diffs the
//!   results against the closed forms.
//! * [`stats`] derives the exact image-order distribution of a random
//!   endomorphism and the related probabilities.
//!
//! Sums with fractional intermediate terms are written once over a generic
//! [`Scalar`] and instantiated either exactly ([`Ratio`]) or in floating point.

pub mod classify;
pub mod counting;
pub mod groups;
pub mod oracle;
pub mod scalar;
pub mod stats;
pub mod tables;

pub use groups::{GroupError, GroupId, Family};

/// Library version, recorded in exported datasets.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub use scalar::Scalar;

/// Exact nonnegative integer used for every count.
pub type CountInt = num_bigint::BigUint;

/// Exact rational in canonical form (positive denominator, reduced).
pub type Ratio = num_rational::BigRational;

/// Single-precision instantiation of the generic sums.
pub type Approx32 = f32;

/// Double-precision instantiation of the generic sums.
pub type Approx64 = f64;
