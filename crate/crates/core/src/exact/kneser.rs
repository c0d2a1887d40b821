use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{binomial, binomial_signed, exact_square_energies, q_coefficients, RationalSpectrum};
use crate::error::{Error, Result};
use crate::spectral::Inertia;
use crate::Rational;

fn check_kneser(n: u64, k: u64) -> Result<()> {
    if k < 1 || n < 2 * k {
        return Err(Error::param(format!(
            "Kneser graph needs n >= 2k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Eigenvalues `(−1)^i C(n−k−i, k−i)` for `i = 0..=k`, with multiplicity
/// `C(n, i) − C(n, i−1)`. Coinciding eigenvalues (only when `n = 2k`) merge.
pub fn kneser_spectrum(n: u64, k: u64) -> Result<RationalSpectrum> {
    check_kneser(n, k)?;
    let pairs = (0..=k).map(|i| {
        let mag = binomial(n - k - i, k - i);
        let eig = if i % 2 == 0 { mag } else { -mag };
        let mult = binomial(n, i) - binomial_signed(n, i as i64 - 1);
        (eig, mult)
    });
    Ok(RationalSpectrum::new(pairs))
}

/// `2m = C(n, k)·C(n − k, k)`.
pub fn kneser_two_m(n: u64, k: u64) -> BigInt {
    binomial(n, k) * binomial(n - k, k)
}

/// Sign counts of `K(n, k)`: no zero eigenvalues, and the positive count is
/// the alternating multiplicity sum `Σ_{i even} (C(n,i) − C(n,i−1))`, which
/// telescopes to `C(n−1, k)` for even `k` and `C(n−1, k−1)` for odd `k`
/// (the negative count takes the other binomial).
pub fn kneser_inertia(n: u64, k: u64) -> Result<Inertia> {
    check_kneser(n, k)?;
    let fit = |x: BigInt| {
        x.to_usize()
            .ok_or_else(|| Error::param(format!("inertia of K({n},{k}) overflows usize")))
    };
    let (even, odd) = (binomial(n - 1, k), binomial(n - 1, k - 1));
    let (plus, minus) = if k.is_multiple_of(2) {
        (even, odd)
    } else {
        (odd, even)
    };
    Ok(Inertia {
        n_plus: fit(plus)?,
        n_zero: 0,
        n_minus: fit(minus)?,
    })
}

fn check_symmetry_params(k: u64, j: u64) -> Result<()> {
    if !(j >= 1 && k > j) {
        return Err(Error::param(format!(
            "symmetric Kneser family needs k > j >= 1, got k = {k}, j = {j}"
        )));
    }
    Ok(())
}

/// Common value `s⁺ = s⁻ = ½·C(2k+2j, k)·C(k+2j, k)` of `K(2k+2j, k)`.
pub fn kneser_symmetry_value(k: u64, j: u64) -> Result<BigInt> {
    check_symmetry_params(k, j)?;
    let twice = binomial(2 * k + 2 * j, k) * binomial(k + 2 * j, k);
    debug_assert!((&twice % 2u32).is_zero());
    Ok(twice / 2u32)
}

/// Evidence for `s⁺ = s⁻` on `K(2k+2j, k)` from two independent routes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KneserSymmetryWitness {
    pub k: u64,
    pub j: u64,
    #[serde(serialize_with = "super::ser_big")]
    pub s_plus: BigInt,
    #[serde(serialize_with = "super::ser_big")]
    pub s_minus: BigInt,
    #[serde(serialize_with = "super::ser_big")]
    pub closed_form: BigInt,
    /// Alternating sum `Σ_{i=0}^{2k+2j} (−1)^i C(2k+2j, i)·Q(k+j−i)`, with
    /// `Q` the even polynomial from [`q_coefficients`]. Zero by the Ruiz
    /// corollary.
    pub alternating_sum: String,
    pub energies_equal: bool,
    pub identity_holds: bool,
}

impl KneserSymmetryWitness {
    pub fn holds(&self) -> bool {
        self.energies_equal && self.identity_holds && self.s_plus == self.closed_form
    }
}

/// Exact `s⁺`, `s⁻` of `K(2k+2j, k)` from its spectrum, and separately the
/// alternating binomial sum whose vanishing implies their equality.
pub fn verify_kneser_symmetry(k: u64, j: u64) -> Result<KneserSymmetryWitness> {
    check_symmetry_params(k, j)?;
    let n = 2 * k + 2 * j;
    let e = exact_square_energies(&kneser_spectrum(n, k)?);

    let q = q_coefficients(j as usize);
    let mut sum = Rational::zero();
    for i in 0..=n {
        let y = Rational::from_integer(BigInt::from(k + j) - BigInt::from(i));
        let mut qy = Rational::zero();
        for c in q.iter().rev() {
            qy = qy * &y + c;
        }
        let term = Rational::from_integer(binomial(n, i)) * qy;
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }

    Ok(KneserSymmetryWitness {
        k,
        j,
        energies_equal: e.s_plus == e.s_minus,
        identity_holds: sum.is_zero(),
        alternating_sum: sum.to_string(),
        closed_form: kneser_symmetry_value(k, j)?,
        s_plus: e.s_plus,
        s_minus: e.s_minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectra() {
        assert_eq!(
            kneser_spectrum(5, 2).unwrap(),
            RationalSpectrum::from_i64(&[(3, 1), (1, 5), (-2, 4)])
        );
        assert_eq!(
            kneser_spectrum(6, 2).unwrap(),
            RationalSpectrum::from_i64(&[(6, 1), (1, 9), (-3, 5)])
        );
        assert_eq!(
            kneser_spectrum(2, 1).unwrap(),
            RationalSpectrum::from_i64(&[(1, 1), (-1, 1)])
        );
        assert_eq!(
            kneser_spectrum(4, 2).unwrap(),
            RationalSpectrum::from_i64(&[(1, 3), (-1, 3)])
        );
        assert!(kneser_spectrum(3, 2).is_err());
        assert!(kneser_spectrum(3, 0).is_err());
    }

    #[test]
    fn spectra_are_consistent() {
        for n in 2..=24u64 {
            for k in 1..=n / 2 {
                let s = kneser_spectrum(n, k).unwrap();
                assert!(s.trace().is_zero(), "trace of K({n},{k})");
                assert_eq!(s.sum_of_squares(), kneser_two_m(n, k));
                assert_eq!(s.n(), binomial(n, k));
                assert_eq!(s.inertia(), kneser_inertia(n, k).unwrap());
            }
        }
    }

    #[test]
    fn energies() {
        let e = exact_square_energies(&kneser_spectrum(6, 2).unwrap());
        assert_eq!((e.s_plus, e.s_minus), (BigInt::from(45), BigInt::from(45)));
    }

    #[test]
    fn inertia_closed_form() {
        let i = |p, m| Inertia {
            n_plus: p,
            n_zero: 0,
            n_minus: m,
        };
        assert_eq!(kneser_inertia(5, 2).unwrap(), i(6, 4));
        assert_eq!(kneser_inertia(6, 2).unwrap(), i(10, 5));
        assert_eq!(kneser_inertia(2, 1).unwrap(), i(1, 1));
        // K(n,1) = K_n and K(7,3): odd k swaps the two binomials
        assert_eq!(kneser_inertia(6, 1).unwrap(), i(1, 5));
        assert_eq!(kneser_inertia(7, 3).unwrap(), i(15, 20));
    }

    #[test]
    fn symmetry_values() {
        assert_eq!(kneser_symmetry_value(2, 1).unwrap(), BigInt::from(45));
        assert_eq!(kneser_symmetry_value(3, 1).unwrap(), BigInt::from(280));
        assert_eq!(kneser_symmetry_value(3, 2).unwrap(), BigInt::from(2100));
        assert!(kneser_symmetry_value(2, 2).is_err());
        assert!(kneser_symmetry_value(2, 0).is_err());
        let e = exact_square_energies(&kneser_spectrum(8, 3).unwrap());
        assert_eq!(
            (e.s_plus, e.s_minus),
            (BigInt::from(280), BigInt::from(280))
        );
        let e = exact_square_energies(&kneser_spectrum(10, 3).unwrap());
        assert_eq!(
            (e.s_plus, e.s_minus),
            (BigInt::from(2100), BigInt::from(2100))
        );
    }

    #[test]
    fn witnesses() {
        for (k, j) in [(2, 1), (5, 1), (8, 3)] {
            let w = verify_kneser_symmetry(k, j).unwrap();
            assert!(w.holds(), "{w:?}");
            assert_eq!(w.alternating_sum, "0");
        }
        assert_eq!(
            verify_kneser_symmetry(2, 1).unwrap().s_plus,
            BigInt::from(45)
        );
    }

    #[test]
    fn non_family_kneser_graphs_are_asymmetric() {
        // K(5,2) and K(7,2) lie outside the family and have s⁺ ≠ s⁻.
        for (n, k) in [(5, 2), (7, 2), (9, 3)] {
            let e = exact_square_energies(&kneser_spectrum(n, k).unwrap());
            assert_ne!(e.s_plus, e.s_minus, "K({n},{k})");
        }
    }
}
