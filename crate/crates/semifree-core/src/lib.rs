//! Exact bookkeeping for semifree circle actions on six-dimensional symplectic
//! manifolds whose regular reduced spaces are ruled surfaces.
//!
//! Every regular level of the (possibly circle-valued) moment map carries a
//! reduced space diffeomorphic to an S²-bundle over a surface Σ_g, so its
//! degree-2 cohomology is spanned by two classes `u` (dual to a fiber) and `v`
//! (dual to a section).  Everything this crate does happens in that rank-2
//! lattice with exact rational coefficients:
//!
//! * [`homology`] — intersection pairing, first Chern class, adjunction genus,
//!   the symplectic cone, and the H² isometries induced by symplectomorphisms;
//! * [`dh`] — evolution of the reduced class between critical levels, Euler
//!   class jumps across walls, the Duistermaat–Heckman volume as an exact
//!   piecewise polynomial, log-concavity and min-slope step checks;
//! * [`constraints`] — per-component rules for fixed surfaces and isolated
//!   fixed points (adjunction, positivity, sign and degree rules, extremal
//!   Euler classes), plus the Diophantine dual-class solver;
//! * [`classifier`] — whole-document validation, Hamiltonicity verdicts for
//!   circle-valued data, and bounded exhaustive enumeration of admissible
//!   fixed-point configurations.
//!
//! The crate is `no_std` (with `alloc`); parsing, file formats and the CLI live
//! in the companion crate `semifree-cli`.  No floating point is used anywhere:
//! all arithmetic is `BigRational`/`i64` exact arithmetic, so every check is a
//! decision, not an approximation.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classifier;
pub mod constraints;
pub mod dh;
pub mod homology;
pub mod poly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact scalar used throughout: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience constructor for a rational from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}
