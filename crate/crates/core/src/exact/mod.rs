//! Exact closed-form spectra and energies in arbitrary precision.
//!
//! Spectra here are lists of `(eigenvalue, multiplicity)` pairs with
//! [`BigInt`] entries; binomial identities are evaluated over any exact
//! numeric type (normally [`crate::Rational`]).

mod identities;
mod kneser;
mod srg;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::spectral::Inertia;

pub use identities::{
    binomial_poly, p_polynomial, q_coefficients, q_matches_p, ruiz_derivative_identity,
    ruiz_identity,
};
pub use kneser::{
    kneser_inertia, kneser_spectrum, kneser_symmetry_value, kneser_two_m, verify_kneser_symmetry,
    KneserSymmetryWitness,
};
pub use srg::{gq_spectrum, taylor_spectrum, SrgFamily, SrgSpectrumParams};

/// `C(n, k)` for non-negative integers; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` with `C(n, −1) = 0`.
pub(crate) fn binomial_signed(n: u64, k: i64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        binomial(n, k as u64)
    }
}

/// Exact spectrum as distinct eigenvalues with positive multiplicities,
/// sorted by eigenvalue, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpectrum {
    pairs: Vec<(BigInt, BigInt)>,
}

impl RationalSpectrum {
    /// Merges repeated eigenvalues and drops zero multiplicities.
    /// Negative multiplicities are a caller bug and panic.
    pub fn new(pairs: impl IntoIterator<Item = (BigInt, BigInt)>) -> Self {
        let mut merged: Vec<(BigInt, BigInt)> = Vec::new();
        for (eig, mult) in pairs {
            assert!(
                !mult.is_negative(),
                "negative multiplicity {mult} for eigenvalue {eig}"
            );
            if mult.is_zero() {
                continue;
            }
            match merged.iter_mut().find(|(e, _)| *e == eig) {
                Some((_, m)) => *m += mult,
                None => merged.push((eig, mult)),
            }
        }
        merged.sort_by(|a, b| b.0.cmp(&a.0));
        RationalSpectrum { pairs: merged }
    }

    pub fn from_i64(pairs: &[(i64, i64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(e, m)| (BigInt::from(e), BigInt::from(m))),
        )
    }

    pub fn pairs(&self) -> &[(BigInt, BigInt)] {
        &self.pairs
    }

    /// Total multiplicity, i.e. the vertex count.
    pub fn n(&self) -> BigInt {
        self.pairs.iter().map(|(_, m)| m).sum()
    }

    pub fn trace(&self) -> BigInt {
        self.pairs.iter().map(|(e, m)| e * m).sum()
    }

    pub fn sum_of_squares(&self) -> BigInt {
        self.pairs.iter().map(|(e, m)| e * e * m).sum()
    }

    pub fn largest(&self) -> Option<&BigInt> {
        self.pairs.first().map(|(e, _)| e)
    }

    pub fn inertia(&self) -> Inertia {
        let mut out = Inertia {
            n_plus: 0,
            n_zero: 0,
            n_minus: 0,
        };
        for (e, m) in &self.pairs {
            let m = m.to_usize().expect("multiplicity fits usize");
            match e.sign() {
                num_bigint::Sign::Plus => out.n_plus += m,
                num_bigint::Sign::Minus => out.n_minus += m,
                num_bigint::Sign::NoSign => out.n_zero += m,
            }
        }
        out
    }

    /// Expanded multiset of eigenvalues as `f64`, descending. Only sensible
    /// for spectra small enough to realise.
    pub fn to_f64_values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for (e, m) in &self.pairs {
            let e = e.to_f64().expect("finite");
            let m = m.to_usize().expect("multiplicity fits usize");
            out.extend(std::iter::repeat_n(e, m));
        }
        out
    }

    /// Compact `eig^mult` rendering, e.g. `3^1 1^5 -2^4`.
    pub fn render(&self) -> String {
        self.pairs
            .iter()
            .map(|(e, m)| format!("{e}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for RationalSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Exact square energies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactEnergies {
    #[serde(serialize_with = "ser_big")]
    pub s_plus: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub s_minus: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub spread: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub two_m: BigInt,
}

pub(crate) fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl ExactEnergies {
    /// `s⁻ / s⁺` as a float, `+∞` when `s⁺ = 0`.
    pub fn ratio_minus_over_plus(&self) -> f64 {
        ratio_f64(&self.s_minus, &self.s_plus)
    }

    pub fn ratio_plus_over_minus(&self) -> f64 {
        ratio_f64(&self.s_plus, &self.s_minus)
    }
}

/// Quotient of big integers as `f64`, reducing first so huge operands do not
/// overflow the conversion.
pub(crate) fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    if den.is_zero() {
        return f64::INFINITY;
    }
    let g = num.gcd(den);
    let (n, d) = (num / &g, den / &g);
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            let shift = n.bits().max(d.bits()).saturating_sub(900);
            (n >> shift).to_f64().unwrap_or(f64::NAN) / (d >> shift).to_f64().unwrap_or(f64::NAN)
        }
    }
}

/// Sums of `mult · eig²` split by sign; zero eigenvalues are ignored.
pub fn exact_square_energies(spec: &RationalSpectrum) -> ExactEnergies {
    let mut s_plus = BigInt::zero();
    let mut s_minus = BigInt::zero();
    for (e, m) in spec.pairs() {
        let sq = e * e * m;
        if e.is_positive() {
            s_plus += sq;
        } else if e.is_negative() {
            s_minus += sq;
        }
    }
    ExactEnergies {
        spread: &s_plus - &s_minus,
        two_m: &s_plus + &s_minus,
        s_plus,
        s_minus,
    }
}

/// Spectrum of the `t`-blowup: every eigenvalue scaled by `t`, plus
/// `(t − 1)·n` extra zeros.
pub fn blowup_spectrum(spec: &RationalSpectrum, t: u64) -> crate::Result<RationalSpectrum> {
    if t == 0 {
        return Err(crate::Error::param("blowup factor must be >= 1"));
    }
    let t = BigInt::from(t);
    let extra_zeros = (&t - 1u32) * spec.n();
    let scaled = spec.pairs().iter().map(|(e, m)| (e * &t, m.clone()));
    Ok(RationalSpectrum::new(
        scaled.chain(std::iter::once((BigInt::zero(), extra_zeros))),
    ))
}
