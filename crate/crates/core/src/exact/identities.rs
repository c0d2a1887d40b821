//! Alternating binomial identities and the even polynomial behind Kneser
//! symmetry, evaluated in exact arithmetic.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

fn from_usize<T: FromPrimitive>(x: usize) -> T {
    T::from_usize(x).expect("small integer converts")
}

/// Generalised binomial `a(a−1)…(a−k+1)/k!` for any `a` in a field.
pub fn binomial_poly<T: Clone + Num + FromPrimitive>(a: &T, k: usize) -> T {
    let mut num = T::one();
    let mut den = T::one();
    for i in 0..k {
        num = num * (a.clone() - from_usize(i));
        den = den * from_usize(i + 1);
    }
    num / den
}

fn alternating_power_sum<T: Clone + Num + FromPrimitive>(n: usize, x: &T, exponent: usize) -> T {
    let mut sum = T::zero();
    let mut c = T::one();
    for i in 0..=n {
        let term = c.clone() * num_traits::pow(x.clone() - from_usize(i), exponent);
        sum = if i % 2 == 0 { sum + term } else { sum - term };
        if i < n {
            c = c * from_usize(n - i) / from_usize(i + 1);
        }
    }
    sum
}

/// `Σ_{i=0}^{n} (−1)^i C(n, i) (x − i)^n`, which equals `n!` for every `x`.
pub fn ruiz_identity<T: Clone + Num + FromPrimitive>(n: usize, x: &T) -> T {
    alternating_power_sum(n, x, n)
}

/// `Σ_{i=0}^{n} (−1)^i C(n, i) (x − i)^{n−j}`, which vanishes for `1 ≤ j ≤ n`.
pub fn ruiz_derivative_identity<T: Clone + Num + FromPrimitive>(
    n: usize,
    x: &T,
    j: usize,
) -> Result<T> {
    if j < 1 || j > n {
        return Err(Error::param(format!(
            "derivative order j = {j} outside 1..={n}"
        )));
    }
    Ok(alternating_power_sum(n, x, n - j))
}

/// `P(a) = C(a, 2j)² + C(a−1, 2j)²` with generalised binomials.
pub fn p_polynomial<T: Clone + Num + FromPrimitive>(j: usize, a: &T) -> T {
    let x = binomial_poly(a, 2 * j);
    let y = binomial_poly(&(a.clone() - T::one()), 2 * j);
    x.clone() * x + y.clone() * y
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            out[i + k] += x * y;
        }
    }
    out
}

fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Coefficients `c₀ … c_{4j}` of `Q(y) = P(y + j)`, expanded from the factored
/// form `2·(1/(2j)!)²·y²·(y² + j²)·Π_{m=1}^{j−1} (y² − m²)²`.
pub fn q_coefficients(j: usize) -> Vec<Rational> {
    assert!(j >= 1, "q_coefficients needs j >= 1");
    let jj = j as i64;
    let mut poly = vec![Rational::zero(), Rational::zero(), Rational::one()]; // y²
    poly = poly_mul(&poly, &[int(jj * jj), Rational::zero(), Rational::one()]);
    for m in 1..jj {
        let factor = [int(-m * m), Rational::zero(), Rational::one()];
        poly = poly_mul(&poly, &factor);
        poly = poly_mul(&poly, &factor);
    }
    let fact: BigInt = (1..=2 * j).map(BigInt::from).product();
    let lead = Rational::new(BigInt::from(2), &fact * &fact);
    poly.iter().map(|c| c * &lead).collect()
}

/// Cross-check of [`q_coefficients`] against [`p_polynomial`] at `4j + 1`
/// points, enough to pin a degree-`4j` polynomial.
pub fn q_matches_p(j: usize) -> bool {
    let q = q_coefficients(j);
    (0..=4 * j as i64).all(|a| {
        let a = int(a - 2 * j as i64);
        let y = &a - int(j as i64);
        let mut qy = Rational::zero();
        for c in q.iter().rev() {
            qy = qy * &y + c;
        }
        qy == p_polynomial(j, &a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ruiz_small() {
        assert_eq!(ruiz_identity(3, &int(0)), int(6));
        assert_eq!(ruiz_identity(1, &int(5)), int(1));
        assert_eq!(ruiz_identity(12, &rat(7, 3)), int(479_001_600));
    }

    #[test]
    fn ruiz_in_floating_point() {
        assert!((ruiz_identity(5, &0.37f64) - 120.0).abs() < 1e-8);
    }

    #[test]
    fn ruiz_derivative_small() {
        assert_eq!(ruiz_derivative_identity(4, &int(2), 1).unwrap(), int(0));
        assert_eq!(ruiz_derivative_identity(6, &int(-1), 6).unwrap(), int(0));
        assert_eq!(ruiz_derivative_identity(10, &rat(9, 2), 3).unwrap(), int(0));
        assert!(ruiz_derivative_identity(4, &int(2), 0).is_err());
        assert!(ruiz_derivative_identity(4, &int(2), 5).is_err());
    }

    #[test]
    fn p_for_j1() {
        // ½((a−1)⁴ + (a−1)²)
        for a in -5i64..10 {
            let y = int(a - 1);
            let want = (y.clone() * &y * &y * &y + y.clone() * &y) / int(2);
            assert_eq!(p_polynomial(1, &int(a)), want, "a = {a}");
        }
        assert_eq!(p_polynomial(1, &int(3)), int(10));
    }

    #[test]
    fn p_vanishes_on_small_arguments() {
        for j in 1..=4usize {
            for a in 1..(2 * j as i64) {
                assert!(p_polynomial(j, &int(a)).is_zero(), "j = {j}, a = {a}");
            }
        }
    }

    #[test]
    fn q_is_even_and_matches_p() {
        for j in 1..=5 {
            let q = q_coefficients(j);
            assert_eq!(q.len(), 4 * j + 1);
            assert!(!q[4 * j].is_zero());
            assert!(q.iter().skip(1).step_by(2).all(Zero::is_zero));
            assert!(q_matches_p(j), "j = {j}");
        }
        // Q(y) = (y⁴ + y²)/2 for j = 1
        assert_eq!(
            q_coefficients(1),
            vec![int(0), int(0), rat(1, 2), int(0), rat(1, 2)]
        );
    }
}
