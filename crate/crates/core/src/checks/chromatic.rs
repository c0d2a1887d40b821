//! Exact chromatic number by branch and bound on small graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_MAX_N: usize = 16;

/// Chromatic number with a proper colouring attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    /// `coloring[v]` is the colour of vertex `v`, in `0..chi`.
    pub coloring: Vec<usize>,
}

impl ChromaticResult {
    /// Every edge joins differently coloured endpoints.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.coloring.len() == g.n()
            && g.edges().all(|(u, v)| self.coloring[u] != self.coloring[v])
            && self.coloring.iter().all(|&c| c < self.chi.max(1))
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| g.neighbors(u).fold(0u32, |acc, v| acc | (1 << v)))
        .collect()
}

fn max_clique(adj: &[u32]) -> usize {
    fn grow(adj: &[u32], size: usize, cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, size + 1, rest & adj[v], best);
        }
    }
    let n = adj.len();
    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    grow(adj, 0, all, &mut best);
    best
}

/// DSatur greedy colouring: returns the colouring and the number of colours.
fn dsatur(adj: &[u32]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                let sat = neighbour_colours(adj, &color, v).count_ones();
                (sat, adj[v].count_ones(), std::cmp::Reverse(v))
            })
            .expect("uncoloured vertex remains");
        let taken = neighbour_colours(adj, &color, v);
        let c = (!taken).trailing_zeros() as usize;
        color[v] = c;
        used = used.max(c + 1);
    }
    (color, used)
}

fn neighbour_colours(adj: &[u32], color: &[usize], v: usize) -> u32 {
    let mut bits = 0u32;
    let mut nb = adj[v];
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if color[u] != usize::MAX {
            bits |= 1 << color[u];
        }
    }
    bits
}

/// Exhaustive `k`-colourability with the usual symmetry breaking: a vertex
/// may open at most one new colour.
fn k_colour(
    adj: &[u32],
    order: &[usize],
    k: usize,
    color: &mut [usize],
    depth: usize,
    used: usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let taken = neighbour_colours(adj, color, v);
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if taken & (1 << c) != 0 {
            continue;
        }
        color[v] = c;
        if k_colour(adj, order, k, color, depth + 1, used.max(c + 1)) {
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

/// Exact chromatic number for `n ≤ 16`.
///
/// The clique number bounds from below, DSatur from above, and every `k` in
/// between is settled by exhaustive search.
pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    let n = g.n();
    if n > CHROMATIC_MAX_N {
        return Err(Error::SizeBudget {
            what: "chromatic number",
            limit: CHROMATIC_MAX_N,
            got: n,
        });
    }
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            coloring: Vec::new(),
        });
    }
    let adj = masks(g);
    let lower = max_clique(&adj);
    let (greedy, upper) = dsatur(&adj);
    if lower == upper {
        return Ok(ChromaticResult {
            chi: upper,
            coloring: greedy,
        });
    }
    // Colour in DSatur order so conflicts surface early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (greedy[v], std::cmp::Reverse(adj[v].count_ones()), v));
    for k in lower..upper {
        let mut color = vec![usize::MAX; n];
        if k_colour(&adj, &order, k, &mut color, 0, 0) {
            return Ok(ChromaticResult {
                chi: k,
                coloring: color,
            });
        }
    }
    Ok(ChromaticResult {
        chi: upper,
        coloring: greedy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g).unwrap();
        assert!(r.is_proper(g));
        r.chi
    }

    #[test]
    fn small_families() {
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&Graph::empty(5)), 1);
        assert_eq!(chi(&make_complete(4)), 4);
        assert_eq!(chi(&make_cycle(5).unwrap()), 3);
        assert_eq!(chi(&make_cycle(6).unwrap()), 2);
        assert_eq!(chi(&make_complete_bipartite(3, 4)), 2);
        assert_eq!(chi(&make_complete(16)), 16);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        assert_eq!(chi(&make_kneser(5, 2).unwrap()), 3);
    }

    #[test]
    fn greedy_gap_is_closed() {
        // Kneser K(6,2) has clique number 3 and chromatic number 4.
        assert_eq!(chi(&make_kneser(6, 2).unwrap()), 4);
        // Grötzsch-like: the Mycielskian of C5 is triangle-free with chi 4.
        let mut b = GraphBuilder::new(11);
        for i in 0..5 {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(i + 5, (i + 1) % 5);
            b.add_edge((i + 1) % 5 + 5, i);
            b.add_edge(i + 5, 10);
        }
        let g = b.build();
        assert_eq!(max_clique(&masks(&g)), 2);
        assert_eq!(chi(&g), 4);
    }

    #[test]
    fn budget() {
        assert!(matches!(
            chromatic_number(&Graph::empty(17)),
            Err(Error::SizeBudget { .. })
        ));
    }
}
