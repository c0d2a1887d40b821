//! Exact characteristic polynomial and inertia of an adjacency matrix.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Inertia;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const EXACT_INERTIA_MAX_N: usize = 30;

/// Coefficients `c₀, …, cₙ` of `det(xI − A)` (so `cₙ = 1`), by the
/// Faddeev–LeVerrier recurrence in exact integer arithmetic:
/// `M₁ = I`, `c_{n−k} = −tr(A Mₖ)/k`, `M_{k+1} = A Mₖ + c_{n−k} I`.
/// The divisions are exact for integer matrices.
pub fn characteristic_polynomial(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    if n == 0 {
        return coeffs;
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::from(1);
    }
    for k in 1..=n {
        // A·M touches only rows of M indexed by neighbours, since A is 0/1.
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for &w in &nbrs[i] {
                for j in 0..n {
                    am[i * n + j] += &m[w * n + j];
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
        let c = -trace / BigInt::from(k);
        coeffs[n - k] = c.clone();
        if k < n {
            for i in 0..n {
                am[i * n + i] += &c;
            }
            m = am;
        }
    }
    coeffs
}

fn sign_variations<'a>(seq: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in seq {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact inertia from the characteristic polynomial. Because every root is
/// real, Descartes' rule of signs is exact: positive roots equal the sign
/// variations of `p(x)`, negative roots those of `p(−x)`.
pub fn exact_inertia(g: &Graph) -> Result<Inertia> {
    if g.n() > EXACT_INERTIA_MAX_N {
        return Err(Error::SizeBudget {
            what: "exact inertia",
            limit: EXACT_INERTIA_MAX_N,
            got: g.n(),
        });
    }
    let p = characteristic_polynomial(g);
    let n_zero = p
        .iter()
        .position(|c| !c.is_zero())
        .expect("monic polynomial");
    let n_plus = sign_variations(p.iter());
    let flipped: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let n_minus = sign_variations(flipped.iter());
    let inertia = Inertia {
        n_plus,
        n_zero,
        n_minus,
    };
    debug_assert_eq!(inertia.n(), g.n(), "adjacency polynomial is real-rooted");
    Ok(inertia)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn polynomials() {
        // K3: x^3 - 3x - 2
        assert_eq!(
            characteristic_polynomial(&make_complete(3)),
            ints(&[-2, -3, 0, 1])
        );
        // P3: x^3 - 2x
        assert_eq!(
            characteristic_polynomial(&make_path(3)),
            ints(&[0, -2, 0, 1])
        );
        assert_eq!(characteristic_polynomial(&Graph::empty(0)), ints(&[1]));
        // C4: x^4 - 4x^2
        assert_eq!(
            characteristic_polynomial(&make_cycle(4).unwrap()),
            ints(&[0, 0, -4, 0, 1])
        );
    }

    #[test]
    fn inertias() {
        let i = |p, z, m| Inertia {
            n_plus: p,
            n_zero: z,
            n_minus: m,
        };
        assert_eq!(exact_inertia(&make_path(3)).unwrap(), i(1, 1, 1));
        assert_eq!(
            exact_inertia(&make_kneser(5, 2).unwrap()).unwrap(),
            i(6, 0, 4)
        );
        assert_eq!(
            exact_inertia(&make_kneser(4, 2).unwrap()).unwrap(),
            i(3, 0, 3)
        );
        assert_eq!(exact_inertia(&Graph::empty(3)).unwrap(), i(0, 3, 0));
        assert_eq!(
            exact_inertia(&make_kneser(6, 2).unwrap()).unwrap(),
            i(10, 0, 5)
        );
    }

    #[test]
    fn budget() {
        assert!(exact_inertia(&make_cycle(31).unwrap()).is_err());
        assert!(exact_inertia(&make_cycle(30).unwrap()).is_ok());
    }
}
