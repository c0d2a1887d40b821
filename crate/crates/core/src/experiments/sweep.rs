use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::sample_gnp;
use crate::spectral::{eigenvalues_only, square_energies};

/// Aggregated `G(n, p)` statistics for one `p`.
///
/// Standard deviations use the `samples − 1` denominator (zero for a single
/// sample).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub p: f64,
    pub samples: usize,
    pub seed: u64,
    pub mean_s_plus: f64,
    pub sd_s_plus: f64,
    pub mean_s_minus: f64,
    pub sd_s_minus: f64,
    pub mean_mu1_sq: f64,
    pub sd_mu1_sq: f64,
    pub mean_m: f64,
    pub sd_m: f64,
}

/// SplitMix64 finaliser.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of sample `index` at edge probability `p`:
/// `seed ⊕ index ⊕ splitmix64(bits(p))`.
pub fn sample_seed(seed: u64, p: f64, index: usize) -> u64 {
    seed ^ index as u64 ^ splitmix64(p.to_bits())
}

/// Parse `start:stop:step` (inclusive of `stop` up to rounding) or a comma
/// separated list of probabilities.
pub fn parse_p_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::param(format!("invalid probability grid {spec:?}"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let grid: Vec<f64> = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [a, b, h] = parts[..] else {
            return Err(bad());
        };
        let (a, b, h) = (num(a)?, num(b)?, num(h)?);
        if h.is_nan() || h <= 0.0 || b < a {
            return Err(bad());
        }
        let steps = ((b - a) / h + 1e-9).floor() as usize;
        // Round to 12 decimals so 0.1-steps print as 0.3, not 0.30000000000000004.
        (0..=steps)
            .map(|i| ((a + i as f64 * h) * 1e12).round() / 1e12)
            .collect()
    } else {
        spec.split(',').map(num).collect::<Result<_>>()?
    };
    if grid.is_empty() || grid.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(bad());
    }
    Ok(grid)
}

#[derive(Clone, Copy)]
struct Sample {
    s_plus: f64,
    s_minus: f64,
    mu1_sq: f64,
    m: f64,
}

fn draw(n: usize, p: f64, seed: u64) -> Result<Sample> {
    let g = sample_gnp(n, p, seed)?;
    let spec = eigenvalues_only::<f64>(&g)?;
    let e = square_energies(&spec, None);
    let mu1 = spec.largest();
    Ok(Sample {
        s_plus: e.s_plus,
        s_minus: e.s_minus,
        mu1_sq: mu1 * mu1,
        m: g.m() as f64,
    })
}

fn mean_sd(xs: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let k = xs.clone().count() as f64;
    let mean = xs.clone().sum::<f64>() / k;
    if k < 2.0 {
        return (mean, 0.0);
    }
    let var = xs.map(|x| (x - mean) * (x - mean)).sum::<f64>() / (k - 1.0);
    (mean, var.sqrt())
}

/// Sample `samples` graphs from `G(n, p)` for every `p` in the grid.
///
/// Samples are drawn in parallel but reduced in `(p, index)` order, so the
/// rows do not depend on the number of worker threads.
pub fn random_sweep(n: usize, p_grid: &[f64], samples: usize, seed: u64) -> Result<Vec<SweepRow>> {
    if samples == 0 {
        return Err(Error::param("sweep needs at least one sample"));
    }
    if let Some(p) = p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::param(format!("edge probability {p} outside [0, 1]")));
    }
    let jobs: Vec<(usize, usize)> = (0..p_grid.len())
        .flat_map(|j| (0..samples).map(move |i| (j, i)))
        .collect();
    let drawn = jobs
        .par_iter()
        .map(|&(j, i)| draw(n, p_grid[j], sample_seed(seed, p_grid[j], i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(p_grid
        .iter()
        .zip(drawn.chunks(samples))
        .map(|(&p, chunk)| {
            let it = chunk.iter();
            let (mean_s_plus, sd_s_plus) = mean_sd(it.clone().map(|s| s.s_plus));
            let (mean_s_minus, sd_s_minus) = mean_sd(it.clone().map(|s| s.s_minus));
            let (mean_mu1_sq, sd_mu1_sq) = mean_sd(it.clone().map(|s| s.mu1_sq));
            let (mean_m, sd_m) = mean_sd(it.map(|s| s.m));
            SweepRow {
                n,
                p,
                samples,
                seed,
                mean_s_plus,
                sd_s_plus,
                mean_s_minus,
                sd_s_minus,
                mean_mu1_sq,
                sd_mu1_sq,
                mean_m,
                sd_m,
            }
        })
        .collect())
}

/// Means of `s⁺/n²`, `s⁻/n²` and `μ₁²/n²` over `G(n, ½)` next to their
/// almost-sure limits `3/8`, `1/8` and `1/4`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlmostAllStats {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub s_plus_over_n2: f64,
    pub sd_s_plus_over_n2: f64,
    pub s_minus_over_n2: f64,
    pub sd_s_minus_over_n2: f64,
    pub mu1_sq_over_n2: f64,
    pub sd_mu1_sq_over_n2: f64,
    pub limit_s_plus: f64,
    pub limit_s_minus: f64,
    pub limit_mu1_sq: f64,
}

pub fn almost_all_check(n: usize, samples: usize, seed: u64) -> Result<AlmostAllStats> {
    if n < 50 {
        return Err(Error::param(format!(
            "almost-all statistics need n >= 50, got {n}"
        )));
    }
    let row = random_sweep(n, &[0.5], samples, seed)?.remove(0);
    let n2 = (n * n) as f64;
    Ok(AlmostAllStats {
        n,
        samples,
        seed,
        s_plus_over_n2: row.mean_s_plus / n2,
        sd_s_plus_over_n2: row.sd_s_plus / n2,
        s_minus_over_n2: row.mean_s_minus / n2,
        sd_s_minus_over_n2: row.sd_s_minus / n2,
        mu1_sq_over_n2: row.mean_mu1_sq / n2,
        sd_mu1_sq_over_n2: row.sd_mu1_sq / n2,
        limit_s_plus: 3.0 / 8.0,
        limit_s_minus: 1.0 / 8.0,
        limit_mu1_sq: 1.0 / 4.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_p_grid("0:1:0.1").unwrap().len(), 11);
        assert_eq!(parse_p_grid("0:1:0.1").unwrap()[3], 0.3);
        assert_eq!(parse_p_grid("0.5").unwrap(), vec![0.5]);
        assert_eq!(parse_p_grid("0.2, 0.4").unwrap(), vec![0.2, 0.4]);
        for bad in ["", "0:1", "0:1:0", "1:0:0.1", "0:2:1", "x", "1.5"] {
            assert!(parse_p_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn seeds_differ_by_sample_and_p() {
        assert_ne!(sample_seed(7, 0.5, 0), sample_seed(7, 0.5, 1));
        assert_ne!(sample_seed(7, 0.5, 0), sample_seed(7, 0.6, 0));
        assert_eq!(sample_seed(7, 0.5, 3), sample_seed(7, 0.5, 3));
    }

    #[test]
    fn extremes_are_exact() {
        let rows = random_sweep(30, &[0.0, 1.0], 3, 1).unwrap();
        assert_eq!(rows[0].mean_s_plus, 0.0);
        assert_eq!(rows[0].sd_m, 0.0);
        assert!((rows[1].mean_s_plus - 29.0 * 29.0).abs() < 1e-8);
        assert!((rows[1].mean_s_minus - 29.0).abs() < 1e-8);
    }

    #[test]
    fn conservation_and_determinism() {
        let a = random_sweep(40, &[0.3, 0.7], 4, 99).unwrap();
        for r in &a {
            let lhs = r.mean_s_plus + r.mean_s_minus;
            assert!((lhs - 2.0 * r.mean_m).abs() <= 1e-6 * lhs.max(1.0));
            // Concavity of 2m − 4m²/n² carries the per-graph bound to the means.
            let n2 = (r.n * r.n) as f64;
            assert!(r.mean_s_minus <= 2.0 * r.mean_m - 4.0 * r.mean_m * r.mean_m / n2 + 1e-9);
        }
        assert_eq!(a, random_sweep(40, &[0.3, 0.7], 4, 99).unwrap());
        assert!(random_sweep(10, &[0.5], 0, 1).is_err());
    }

    #[test]
    fn almost_all_needs_large_n() {
        assert!(almost_all_check(20, 2, 0).is_err());
        let s = almost_all_check(60, 2, 0).unwrap();
        assert!(s.s_plus_over_n2 > s.s_minus_over_n2);
    }
}
