//! Dense symmetric eigensolver: Householder reduction to tridiagonal form
//! followed by the implicit-shift QL iteration (the EISPACK `tred2`/`tql2`
//! pair), generic over the scalar type.

use super::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Per-eigenvalue cap on QL sweeps before reporting non-convergence.
pub const MAX_QL_SWEEPS: usize = 60;

/// Eigenvalues (descending) and, optionally, orthonormal eigenvectors stored
/// as the columns of `vectors` in the same order.
#[derive(Clone, Debug)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    pub vectors: Option<DenseMatrix<T>>,
}

impl<T: Real> SymmetricEigen<T> {
    /// `‖A − V Λ Vᵀ‖_F`, or `None` without eigenvectors.
    pub fn reconstruction_residual(&self, a: &DenseMatrix<T>) -> Option<T> {
        let v = self.vectors.as_ref()?;
        let n = a.n();
        let mut acc = T::zero();
        for i in 0..n {
            for j in 0..n {
                let mut s = T::zero();
                for (k, &lam) in self.values.iter().enumerate() {
                    s += lam * v[(i, k)] * v[(j, k)];
                }
                let d = a[(i, j)] - s;
                acc += d * d;
            }
        }
        Some(acc.sqrt())
    }
}

/// Householder tridiagonalisation. On return `d` holds the diagonal, `e` the
/// subdiagonal in `e[1..]`, and `v` the accumulated orthogonal transform.
fn tridiagonalize<T: Real>(v: &mut DenseMatrix<T>, d: &mut [T], e: &mut [T]) {
    let n = v.n();
    let zero = T::zero();
    for j in 0..n {
        d[j] = v[(n - 1, j)];
    }
    for i in (1..n).rev() {
        let mut scale = zero;
        let mut h = zero;
        for &dk in d.iter().take(i) {
            scale += dk.abs();
        }
        if scale == zero {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1, j)];
                v[(i, j)] = zero;
                v[(j, i)] = zero;
            }
        } else {
            for dk in d.iter_mut().take(i) {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > zero {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = zero;
            }
            for j in 0..i {
                f = d[j];
                v[(j, i)] = f;
                g = e[j] + v[(j, j)] * f;
                for k in j + 1..i {
                    g += v[(k, j)] * d[k];
                    e[k] += v[(k, j)] * f;
                }
                e[j] = g;
            }
            f = zero;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    let upd = f * e[k] + g * d[k];
                    v[(k, j)] -= upd;
                }
                d[j] = v[(i - 1, j)];
                v[(i, j)] = zero;
            }
        }
        d[i] = h;
    }
    for i in 0..n.saturating_sub(1) {
        v[(n - 1, i)] = v[(i, i)];
        v[(i, i)] = T::one();
        let h = d[i + 1];
        if h != zero {
            for k in 0..=i {
                d[k] = v[(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = zero;
                for k in 0..=i {
                    g += v[(k, i + 1)] * v[(k, j)];
                }
                for k in 0..=i {
                    let upd = g * d[k];
                    v[(k, j)] -= upd;
                }
            }
        }
        for k in 0..=i {
            v[(k, i + 1)] = zero;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1, j)];
        v[(n - 1, j)] = zero;
    }
    if n > 0 {
        v[(n - 1, n - 1)] = T::one();
        e[0] = zero;
    }
}

/// Implicit-shift QL on the tridiagonal `(d, e)`. Rotations are applied to
/// `v` only when `track_vectors` is set.
fn ql_implicit<T: Real>(
    v: &mut DenseMatrix<T>,
    d: &mut [T],
    e: &mut [T],
    track_vectors: bool,
) -> Result<()> {
    let n = d.len();
    let zero = T::zero();
    let one = T::one();
    let two = one + one;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    if n > 0 {
        e[n - 1] = zero;
    }
    let eps = T::epsilon();
    let mut f = zero;
    let mut tst1 = zero;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_SWEEPS {
                    return Err(Error::NoConvergence {
                        iterations: MAX_QL_SWEEPS,
                    });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (two * e[l]);
                let mut r = p.hypot(one);
                if p < zero {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = one;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = zero;
                let mut s2 = zero;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if track_vectors {
                        for k in 0..n {
                            h = v[(k, i + 1)];
                            v[(k, i + 1)] = s * v[(k, i)] + c * h;
                            v[(k, i)] = c * v[(k, i)] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = zero;
    }
    Ok(())
}

/// Full eigendecomposition of a symmetric matrix. Only the lower triangle is
/// read. Eigenvalues come back in descending order.
pub fn symmetric_eigen<T: Real>(
    a: &DenseMatrix<T>,
    want_vectors: bool,
) -> Result<SymmetricEigen<T>> {
    let n = a.n();
    let mut v = a.clone();
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    tridiagonalize(&mut v, &mut d, &mut e);
    ql_implicit(&mut v, &mut d, &mut e, want_vectors)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].partial_cmp(&d[i]).expect("eigenvalues are finite"));
    let values = order.iter().map(|&i| d[i]).collect();
    let vectors = want_vectors.then(|| {
        let mut out = DenseMatrix::zeros(n);
        for (col, &src) in order.iter().enumerate() {
            for r in 0..n {
                out[(r, col)] = v[(r, src)];
            }
        }
        out
    });
    Ok(SymmetricEigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(n: usize, rows: &[f64]) -> DenseMatrix<f64> {
        DenseMatrix::from_row_major(n, rows.to_vec())
    }

    #[test]
    fn two_by_two() {
        let e = symmetric_eigen(&mat(2, &[2.0, 1.0, 1.0, 2.0]), true).unwrap();
        assert!((e.values[0] - 3.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        assert!(
            e.reconstruction_residual(&mat(2, &[2.0, 1.0, 1.0, 2.0]))
                .unwrap()
                < 1e-14
        );
    }

    #[test]
    fn diagonal_and_empty() {
        let e = symmetric_eigen(
            &mat(3, &[1.0, 0.0, 0.0, 0.0, -4.0, 0.0, 0.0, 0.0, 2.5]),
            false,
        )
        .unwrap();
        assert_eq!(e.values, vec![2.5, 1.0, -4.0]);
        assert!(e.vectors.is_none());
        let empty = symmetric_eigen(&DenseMatrix::<f64>::zeros(0), true).unwrap();
        assert!(empty.values.is_empty());
        let one = symmetric_eigen(&mat(1, &[7.0]), true).unwrap();
        assert_eq!(one.values, vec![7.0]);
    }

    #[test]
    fn vectors_are_orthonormal() {
        // tridiagonal Toeplitz: eigenvalues 2 + 2cos(kπ/(n+1))
        let n = 8;
        let mut a = DenseMatrix::<f64>::zeros(n);
        for i in 0..n {
            a[(i, i)] = 2.0;
            if i + 1 < n {
                a[(i, i + 1)] = 1.0;
                a[(i + 1, i)] = 1.0;
            }
        }
        let e = symmetric_eigen(&a, true).unwrap();
        for (k, &lam) in e.values.iter().enumerate() {
            let expect = 2.0 + 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((lam - expect).abs() < 1e-12, "{lam} vs {expect}");
        }
        let v = e.vectors.as_ref().unwrap();
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|r| v[(r, i)] * v[(r, j)]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn single_precision() {
        let a = DenseMatrix::<f32>::from_row_major(2, vec![0.0, 1.0, 1.0, 0.0]);
        let e = symmetric_eigen(&a, true).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-6);
        assert!((e.values[1] + 1.0).abs() < 1e-6);
    }
}
