//! Splitting `A = B − C` into its positive and negative spectral parts.

use std::collections::VecDeque;

use super::{eigen_decomposition, DenseMatrix, Spectrum};
use crate::error::Result;
use crate::graph::Graph;
use crate::scalar::Real;

/// `B = Σ_{μᵢ>τ} μᵢ vᵢvᵢᵀ` and `C = Σ_{μᵢ<−τ} (−μᵢ) vᵢvᵢᵀ`, both positive
/// semidefinite, with `A = B − C`, `tr B² = s⁺`, `tr C² = s⁻`.
#[derive(Clone, Debug)]
pub struct ResolutionPair<T> {
    pub b: DenseMatrix<T>,
    pub c: DenseMatrix<T>,
    pub spectrum: Spectrum<T>,
    pub tau: T,
}

impl<T: Real> ResolutionPair<T> {
    /// `‖A − (B − C)‖_F`.
    pub fn reconstruction_error(&self, g: &Graph) -> T {
        let a = DenseMatrix::from_row_major(g.n(), g.adjacency::<T>());
        a.sub(&self.b.sub(&self.c)).frobenius_norm()
    }

    pub fn trace_b_squared(&self) -> T {
        self.b.trace_of_product(&self.b)
    }

    pub fn trace_c_squared(&self) -> T {
        self.c.trace_of_product(&self.c)
    }

    /// `‖B·C‖_F`; zero up to rounding since the eigenspaces are orthogonal.
    pub fn cross_norm(&self) -> T {
        self.b.matmul(&self.c).frobenius_norm()
    }

    /// Default support threshold for irreducibility reports.
    pub fn support_tau(&self) -> T {
        self.spectrum.default_tau()
    }
}

/// Positive/negative resolution of the adjacency matrix. `tau` defaults to
/// the spectrum's sign tolerance.
pub fn spectral_resolution<T: Real>(g: &Graph, tau: Option<T>) -> Result<ResolutionPair<T>> {
    let (spectrum, eig) = eigen_decomposition::<T>(g)?;
    let tau = tau.unwrap_or_else(|| spectrum.default_tau());
    let n = g.n();
    let v = eig
        .vectors
        .as_ref()
        .expect("decomposition carries eigenvectors");
    let mut b = DenseMatrix::zeros(n);
    let mut c = DenseMatrix::zeros(n);
    for (k, &mu) in eig.values.iter().enumerate() {
        let (target, weight) = if mu > tau {
            (&mut b, mu)
        } else if mu < -tau {
            (&mut c, -mu)
        } else {
            continue;
        };
        for i in 0..n {
            let wi = weight * v[(i, k)];
            for j in 0..n {
                target[(i, j)] += wi * v[(j, k)];
            }
        }
    }
    Ok(ResolutionPair {
        b,
        c,
        spectrum,
        tau,
    })
}

/// A symmetric matrix is irreducible exactly when the graph on its indices
/// with edges `{i, j}` for `|M_ij| > tau`, `i ≠ j`, is connected.
pub fn support_irreducible<T: Real>(m: &DenseMatrix<T>, tau: T) -> bool {
    let n = m.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && i != j && m[(i, j)].abs() > tau {
                seen[j] = true;
                count += 1;
                queue.push_back(j);
            }
        }
    }
    count == n
}
