//! Spectral workbench for the positive and negative square energies of graphs.
//!
//! For a simple graph with adjacency eigenvalues `μ₁ ≥ … ≥ μₙ`, the positive
//! square energy `s⁺` is the sum of `μᵢ²` over positive eigenvalues and the
//! negative square energy `s⁻` the same sum over negative ones. Their sum is
//! always `2m`.
//!
//! The crate is organised as:
//!
//! * [`graph`]: graph representation, family constructors, graph6 I/O,
//!   seeded random samplers and isomorph-free enumeration of small graphs.
//! * [`spectral`]: dense symmetric eigensolver (generic over [`Real`]),
//!   inertia, square energies, the positive/negative resolution `A = B − C`
//!   and an exact integer inertia oracle.
//! * [`exact`]: arbitrary-precision closed-form spectra for Kneser graphs,
//!   generalised quadrangles, Taylor graphs and blowups, plus the binomial
//!   identities behind Kneser symmetry.
//! * [`checks`]: named inequality checks producing [`checks::Verdict`]s,
//!   including an exact chromatic number for small graphs.
//! * [`experiments`]: random-graph sweeps, average energies over
//!   enumerations or corpora, and growth-rate tables.

pub mod checks;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod graph;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::Graph;
pub use scalar::Real;
pub use spectral::Inertia;

/// Arbitrary-precision integer used by the closed-form families.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational used by the binomial identities.
pub type Rational = num_rational::BigRational;

pub type Spectrum64 = spectral::Spectrum<f64>;
pub type Spectrum32 = spectral::Spectrum<f32>;
pub type SquareEnergies64 = spectral::SquareEnergies<f64>;
pub type SquareEnergies32 = spectral::SquareEnergies<f32>;
pub type ResolutionPair64 = spectral::ResolutionPair<f64>;
pub type SymmetricEigen64 = spectral::SymmetricEigen<f64>;
pub type DenseMatrix64 = spectral::DenseMatrix<f64>;
