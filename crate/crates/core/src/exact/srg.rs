//! Strongly regular families handled purely through their spectra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{ser_big, RationalSpectrum};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum SrgFamily {
    /// Collinearity graph of a generalised quadrangle of order `(s, t)`.
    Gq { s: u64, t: u64 },
    /// Taylor's strongly regular graph on `q³` vertices, `q` odd.
    Taylor { q: u64 },
}

/// Spectrum `k¹ r^f s^g` of a strongly regular graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SrgSpectrumParams {
    pub family: SrgFamily,
    #[serde(serialize_with = "ser_big")]
    pub n: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub k: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub r: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub s: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub f: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub g: BigInt,
}

impl SrgSpectrumParams {
    pub fn spectrum(&self) -> RationalSpectrum {
        RationalSpectrum::new([
            (self.k.clone(), BigInt::from(1)),
            (self.r.clone(), self.f.clone()),
            (self.s.clone(), self.g.clone()),
        ])
    }

    /// `1 + f + g = n` and `k + r·f + s·g = 0`.
    pub fn is_consistent(&self) -> bool {
        1 + &self.f + &self.g == self.n
            && (&self.k + &self.r * &self.f + &self.s * &self.g).is_zero()
    }
}

fn exact_div(num: BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Divisibility(what.to_string()))
    }
}

/// Collinearity graph of `GQ(s, t)`: `n = (s+1)(st+1)`, `k = s(t+1)`,
/// `r = s − 1`, `a = −t − 1`, `f = s(s+1)t(t+1)/(s+t)`, `g = s²(st+1)/(s+t)`.
pub fn gq_spectrum(s: u64, t: u64) -> Result<SrgSpectrumParams> {
    if s < 1 || t < 1 {
        return Err(Error::param(format!(
            "GQ order needs s, t >= 1, got ({s}, {t})"
        )));
    }
    let (sb, tb) = (BigInt::from(s), BigInt::from(t));
    let st1 = &sb * &tb + 1;
    let sum = &sb + &tb;
    let what = format!("GQ({s},{t})");
    let f = exact_div(&sb * (&sb + 1) * &tb * (&tb + 1), &sum, &what)?;
    let g = exact_div(&sb * &sb * &st1, &sum, &what)?;
    let out = SrgSpectrumParams {
        family: SrgFamily::Gq { s, t },
        n: (&sb + 1) * &st1,
        k: &sb * (&tb + 1),
        r: &sb - 1,
        s: -(&tb + 1u32),
        f,
        g,
    };
    if !out.is_consistent() {
        return Err(Error::Divisibility(what));
    }
    Ok(out)
}

/// Taylor graph `T_q`: `n = q³`, `k = ½(q−1)(q²+1)`, `r = ½(q−1)`,
/// `s = −½(q²+1)`, `f = (q−1)(q²+1)`, `g = q(q−1)`. Primality of `q` is not
/// checked.
pub fn taylor_spectrum(q: u64) -> Result<SrgSpectrumParams> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::param(format!(
            "Taylor graph needs an odd q >= 3, got {q}"
        )));
    }
    let qb = BigInt::from(q);
    let q2p1: BigInt = &qb * &qb + 1u32;
    let out = SrgSpectrumParams {
        family: SrgFamily::Taylor { q },
        n: &qb * &qb * &qb,
        k: (&qb - 1u32) * &q2p1 / 2u32,
        r: (&qb - 1u32) / 2u32,
        s: -(&q2p1 / 2u32),
        f: (&qb - 1) * &q2p1,
        g: &qb * (&qb - 1),
    };
    debug_assert!(out.is_consistent() && !out.s.is_positive());
    Ok(out)
}
