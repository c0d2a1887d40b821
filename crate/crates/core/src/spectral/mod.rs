//! Adjacency spectra, inertia and square energies.

mod charpoly;
mod eigen;
mod matrix;
mod resolution;

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::scalar::Real;

pub use charpoly::{characteristic_polynomial, exact_inertia, EXACT_INERTIA_MAX_N};
pub use eigen::{symmetric_eigen, SymmetricEigen, MAX_QL_SWEEPS};
pub use matrix::DenseMatrix;
pub use resolution::{spectral_resolution, support_irreducible, ResolutionPair};

/// Adjacency eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    scale: T,
    residual: Option<T>,
}

impl<T: Real> Spectrum<T> {
    /// Wrap eigenvalues (any order) without a reconstruction residual.
    pub fn from_values(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        let scale = values.iter().fold(T::one(), |acc, &x| acc.max(x.abs()));
        Spectrum {
            values,
            scale,
            residual: None,
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `max(1, |μ₁|, |μₙ|)`.
    pub fn scale(&self) -> T {
        self.scale
    }

    /// Frobenius reconstruction error `‖A − VΛVᵀ‖`, when eigenvectors were
    /// computed.
    pub fn residual(&self) -> Option<T> {
        self.residual
    }

    /// Default zero threshold: the scalar's relative sign tolerance times the
    /// scale.
    pub fn default_tau(&self) -> T {
        T::default_sign_tol() * self.scale
    }

    pub fn largest(&self) -> T {
        self.values.first().copied().unwrap_or_else(T::zero)
    }

    pub fn trace(&self) -> T {
        self.values.iter().copied().sum()
    }

    pub fn sum_of_squares(&self) -> T {
        self.values.iter().map(|&x| x * x).sum()
    }
}

/// Counts of positive, zero and negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn n(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

/// `s⁺`, `s⁻` and the quantities derived from them.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SquareEnergies<T> {
    pub s_plus: T,
    pub s_minus: T,
    /// `max(s⁺/s⁻, s⁻/s⁺)`, or `+∞` when either side is numerically zero.
    pub ratio_max: T,
    /// Squared spread `s⁺ − s⁻`.
    pub spread: T,
}

impl<T: Real> SquareEnergies<T> {
    pub fn min(&self) -> T {
        self.s_plus.min(self.s_minus)
    }

    pub fn total(&self) -> T {
        self.s_plus + self.s_minus
    }
}

fn adjacency_matrix<T: Real>(g: &Graph) -> DenseMatrix<T> {
    DenseMatrix::from_row_major(g.n(), g.adjacency())
}

/// Spectrum plus eigenvectors of the adjacency matrix, with the
/// reconstruction residual filled in.
pub fn eigen_decomposition<T: Real>(g: &Graph) -> Result<(Spectrum<T>, SymmetricEigen<T>)> {
    let a = adjacency_matrix::<T>(g);
    let eig = symmetric_eigen(&a, true)?;
    let mut spec = Spectrum::from_values(eig.values.clone());
    spec.residual = eig.reconstruction_residual(&a);
    Ok((spec, eig))
}

/// Full adjacency spectrum with the reconstruction residual.
pub fn eigenvalues_symmetric<T: Real>(g: &Graph) -> Result<Spectrum<T>> {
    eigen_decomposition(g).map(|(s, _)| s)
}

/// Eigenvalues only (no eigenvectors, no residual). Roughly three times
/// cheaper; used by the large random sweeps.
pub fn eigenvalues_only<T: Real>(g: &Graph) -> Result<Spectrum<T>> {
    let eig = symmetric_eigen(&adjacency_matrix::<T>(g), false)?;
    Ok(Spectrum::from_values(eig.values))
}

/// Sign counts with `|μ| ≤ tau` classified as zero; `None` uses
/// [`Spectrum::default_tau`].
pub fn inertia<T: Real>(spec: &Spectrum<T>, tau: Option<T>) -> Inertia {
    let tau = tau.unwrap_or_else(|| spec.default_tau());
    let mut out = Inertia {
        n_plus: 0,
        n_zero: 0,
        n_minus: 0,
    };
    for &x in &spec.values {
        if x > tau {
            out.n_plus += 1;
        } else if x < -tau {
            out.n_minus += 1;
        } else {
            out.n_zero += 1;
        }
    }
    out
}

/// Square energies; eigenvalues within `[−tau, tau]` count towards neither.
pub fn square_energies<T: Real>(spec: &Spectrum<T>, tau: Option<T>) -> SquareEnergies<T> {
    let tau = tau.unwrap_or_else(|| spec.default_tau());
    let mut s_plus = T::zero();
    let mut s_minus = T::zero();
    for &x in &spec.values {
        if x > tau {
            s_plus += x * x;
        } else if x < -tau {
            s_minus += x * x;
        }
    }
    let ratio_max = if s_plus.min(s_minus) < tau * tau || s_plus.min(s_minus) == T::zero() {
        T::infinity()
    } else {
        (s_plus / s_minus).max(s_minus / s_plus)
    };
    SquareEnergies {
        s_plus,
        s_minus,
        ratio_max,
        spread: s_plus - s_minus,
    }
}

/// Largest adjacency eigenvalue `μ₁`.
pub fn spectral_radius<T: Real>(g: &Graph) -> Result<T> {
    Ok(eigenvalues_only::<T>(g)?.largest())
}
