//! Seeded random graph samplers.
//!
//! All randomness comes from [`GNP_RNG`] (ChaCha8 seeded through
//! `SeedableRng::seed_from_u64`), whose output stream is fixed across
//! platforms and releases. Together with the fixed visiting order below, a
//! seed therefore pins the sampled graph exactly.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// Name of the generator behind every sampler in this module.
pub const GNP_RNG: &str = "ChaCha8Rng::seed_from_u64";

/// Erdős–Rényi `G(n, p)`.
///
/// Pairs are visited in lexicographic order `(0,1), (0,2), …, (n−2, n−1)` and
/// each consumes exactly one uniform `f64` in `[0, 1)`; the pair is an edge
/// when the draw is `< p`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// Random maximal planar graph (triangulation of the sphere) on `n` vertices.
///
/// Starts from `K₄` (`K₃` when `n = 3`), inserts each further vertex into a
/// uniformly chosen face joined to its three corners, then attempts `flips`
/// diagonal flips on uniformly chosen edges. A flip of edge `ab` with opposite
/// corners `x, y` is applied only when `xy` is not already an edge, so the
/// result stays a simple triangulation with `3(n − 2)` edges. Covers a
/// subfamily of all triangulations; it is not a uniform sampler.
pub fn generate_maximal_planar(n: usize, seed: u64, flips: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!(
            "maximal planar graph needs n >= 3, got {n}"
        )));
    }
    if n == 3 {
        return Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 3, 1], [1, 3, 2], [2, 3, 0]];
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut adj: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    for v in 4..n {
        let f = rng.random_range(0..faces.len());
        let [a, b, c] = faces[f];
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        for w in [a, b, c] {
            edges.push((w, v));
            adj.insert((w, v));
        }
    }

    for _ in 0..flips {
        let idx = rng.random_range(0..edges.len());
        let (a, b) = edges[idx];
        let incident: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&a) && f.contains(&b))
            .map(|(i, _)| i)
            .collect();
        debug_assert_eq!(incident.len(), 2, "every edge borders two faces");
        let third = |f: &[usize; 3]| *f.iter().find(|&&w| w != a && w != b).expect("triangle");
        let (f1, f2) = (incident[0], incident[1]);
        let (x, y) = (third(&faces[f1]), third(&faces[f2]));
        if x == y || adj.contains(&key(x, y)) {
            continue;
        }
        adj.remove(&key(a, b));
        adj.insert(key(x, y));
        edges[idx] = key(x, y);
        faces[f1] = [a, x, y];
        faces[f2] = [b, y, x];
    }

    Graph::from_edges(n, edges)
}
