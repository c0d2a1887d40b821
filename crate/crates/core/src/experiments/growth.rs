use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{blowup_spectrum, exact_square_energies, gq_spectrum, taylor_spectrum};

/// Growth-rate tables over exact family spectra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthStudy {
    /// `GQ(q, q²)`: statistic `(s⁻/s⁺)/n^{1/4}`.
    GqRatio,
    /// `GQ(q², q³)`: statistic `μ₁²/s⁺`.
    GqSquareCube,
    /// Blowups `T_q^{[q^a]}`: statistic `spread/n^{2 − 2/(3+a)}`.
    TaylorSpread,
}

impl GrowthStudy {
    pub fn name(self) -> &'static str {
        match self {
            GrowthStudy::GqRatio => "gq-ratio",
            GrowthStudy::GqSquareCube => "gq-square-cube",
            GrowthStudy::TaylorSpread => "taylor-spread",
        }
    }

    /// Default `q` grid.
    pub fn default_grid(self) -> Vec<u64> {
        match self {
            GrowthStudy::GqRatio | GrowthStudy::GqSquareCube => vec![2, 3, 4, 5, 7, 8, 9, 11, 13],
            GrowthStudy::TaylorSpread => vec![3, 5, 7, 9, 11],
        }
    }
}

impl FromStr for GrowthStudy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gq-ratio" => Ok(GrowthStudy::GqRatio),
            "gq-square-cube" => Ok(GrowthStudy::GqSquareCube),
            "taylor-spread" => Ok(GrowthStudy::TaylorSpread),
            other => Err(Error::param(format!(
                "unknown study {other:?} (expected gq-ratio, gq-square-cube or taylor-spread)"
            ))),
        }
    }
}

impl fmt::Display for GrowthStudy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One family member with exact energies and a normalised statistic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthRow {
    pub family: String,
    pub parameter: String,
    #[serde(serialize_with = "crate::exact::ser_big")]
    pub n: BigInt,
    #[serde(serialize_with = "crate::exact::ser_big")]
    pub s_plus: BigInt,
    #[serde(serialize_with = "crate::exact::ser_big")]
    pub s_minus: BigInt,
    #[serde(serialize_with = "crate::exact::ser_big")]
    pub spread: BigInt,
    /// `s⁻/s⁺`.
    pub ratio: f64,
    pub mu1_sq_over_s_plus: f64,
    pub statistic_name: &'static str,
    pub statistic: f64,
}

fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn srg_row(
    family: String,
    parameter: String,
    n: &BigInt,
    mu1: &BigInt,
    spec: &crate::exact::RationalSpectrum,
) -> GrowthRow {
    let e = exact_square_energies(spec);
    GrowthRow {
        family,
        parameter,
        n: n.clone(),
        ratio: e.ratio_minus_over_plus(),
        mu1_sq_over_s_plus: crate::exact::ratio_f64(&(mu1 * mu1), &e.s_plus),
        s_plus: e.s_plus,
        s_minus: e.s_minus,
        spread: e.spread,
        statistic_name: "",
        statistic: f64::NAN,
    }
}

/// Tabulate `study` over `q_grid`. For the Taylor study every `q` is paired
/// with each exponent in `exponents` (blowup factor `t = q^a`); the other
/// studies ignore `exponents`.
pub fn ratio_growth_study(
    study: GrowthStudy,
    q_grid: &[u64],
    exponents: &[u32],
) -> Result<Vec<GrowthRow>> {
    let mut rows = Vec::new();
    for &q in q_grid {
        match study {
            GrowthStudy::GqRatio | GrowthStudy::GqSquareCube => {
                let (s, t) = if study == GrowthStudy::GqRatio {
                    (q, q.checked_mul(q))
                } else {
                    (q * q, q.checked_pow(3))
                };
                let t = t.ok_or_else(|| Error::param(format!("q = {q} overflows the GQ order")))?;
                let p = gq_spectrum(s, t)?;
                let mut row = srg_row(
                    format!("GQ({s},{t})"),
                    format!("q={q}"),
                    &p.n,
                    &p.k,
                    &p.spectrum(),
                );
                if study == GrowthStudy::GqRatio {
                    row.statistic_name = "ratio/n^(1/4)";
                    row.statistic = row.ratio / to_f64(&p.n).powf(0.25);
                } else {
                    row.statistic_name = "mu1^2/s_plus";
                    row.statistic = row.mu1_sq_over_s_plus;
                }
                rows.push(row);
            }
            GrowthStudy::TaylorSpread => {
                let p = taylor_spectrum(q)?;
                for &a in exponents {
                    let t = q
                        .checked_pow(a)
                        .ok_or_else(|| Error::param(format!("q^a = {q}^{a} overflows")))?;
                    let spec = blowup_spectrum(&p.spectrum(), t)?;
                    let n = &p.n * t;
                    let mut row = srg_row(
                        format!("T_{q}"),
                        format!("q={q},a={a},t={t}"),
                        &n,
                        &(&p.k * t),
                        &spec,
                    );
                    row.statistic_name = "spread/n^(2-2/(3+a))";
                    row.statistic =
                        to_f64(&row.spread) / to_f64(&n).powf(2.0 - 2.0 / (3.0 + a as f64));
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gq_ratio_spot_value() {
        let rows = ratio_growth_study(GrowthStudy::GqRatio, &[2], &[]).unwrap();
        let r = &rows[0];
        assert_eq!(r.n, BigInt::from(27));
        assert_eq!(
            (r.s_plus.clone(), r.s_minus.clone()),
            (BigInt::from(120), BigInt::from(150))
        );
        assert!((r.ratio - 1.25).abs() < 1e-15);
        assert!((r.statistic - 1.25 / 27f64.powf(0.25)).abs() < 1e-12);
    }

    #[test]
    fn square_cube_trend() {
        let rows = ratio_growth_study(GrowthStudy::GqSquareCube, &[2, 3, 4, 5], &[]).unwrap();
        assert!(rows.windows(2).all(|w| w[1].statistic < w[0].statistic));
        assert!(rows.windows(2).all(|w| w[1].ratio > w[0].ratio));
    }

    #[test]
    fn taylor_blowup() {
        let rows = ratio_growth_study(GrowthStudy::TaylorSpread, &[3], &[0, 1]).unwrap();
        assert_eq!(rows[0].spread, BigInt::from(-30));
        assert_eq!(rows[1].n, BigInt::from(81));
        assert_eq!(rows[1].spread, BigInt::from(-270));
        assert!(rows
            .iter()
            .all(|r| r.statistic < 0.0 && r.statistic.is_finite()));
    }

    #[test]
    fn names_round_trip() {
        for s in [
            GrowthStudy::GqRatio,
            GrowthStudy::GqSquareCube,
            GrowthStudy::TaylorSpread,
        ] {
            assert_eq!(s.name().parse::<GrowthStudy>().unwrap(), s);
        }
        assert!("kneser".parse::<GrowthStudy>().is_err());
        assert!(ratio_growth_study(GrowthStudy::TaylorSpread, &[4], &[1]).is_err());
    }
}
