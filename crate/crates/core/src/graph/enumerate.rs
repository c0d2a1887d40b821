//! Isomorph-free generation of all graphs on `n` vertices.
//!
//! Canonical construction path: every graph on `k + 1` vertices is produced
//! from exactly one parent on `k` vertices, namely the graph obtained by
//! deleting its canonical deletion vertex. Children are accepted only when the
//! newly added vertex lies in the orbit of that vertex; duplicates among the
//! children of a single parent (neighbourhoods in the same orbit of the
//! parent's automorphism group) are removed by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_form, marked_form, CanonicalForm};
use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// Largest `n` served by the built-in enumerator.
pub const ENUMERATION_MAX_N: usize = 7;

/// Isomorphism-invariant vertex key used to shortlist deletion candidates.
fn vertex_key(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Is `v` in the orbit of the canonical deletion vertex of `g`?
fn is_canonical_extension(g: &Graph, v: usize) -> Result<bool> {
    let keys: Vec<_> = (0..g.n()).map(|w| vertex_key(g, w)).collect();
    let best = keys.iter().max().expect("non-empty graph");
    if keys[v] != *best {
        return Ok(false);
    }
    let candidates: Vec<usize> = (0..g.n()).filter(|&w| keys[w] == *best).collect();
    if candidates.len() == 1 {
        return Ok(true);
    }
    let mine = marked_form(g, v)?;
    for w in candidates {
        if w != v && marked_form(g, w)? < mine {
            return Ok(false);
        }
    }
    Ok(true)
}

fn children(parent: &Graph) -> Result<Vec<(CanonicalForm, Graph)>> {
    let k = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let mut b = GraphBuilder::new(k + 1);
        for (u, v) in parent.edges() {
            b.add_edge(u, v);
        }
        for u in 0..k {
            if mask >> u & 1 == 1 {
                b.add_edge(u, k);
            }
        }
        let child = b.build();
        if !is_canonical_extension(&child, k)? {
            continue;
        }
        let form = canonical_form(&child)?;
        if seen.insert(form.clone()) {
            let g = form.to_graph();
            out.push((form, g));
        }
    }
    Ok(out)
}

/// One canonically labelled representative per isomorphism class of graphs
/// on `n` vertices, sorted by canonical form.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_MAX_N {
        return Err(Error::SizeBudget {
            what: "built-in enumeration (use a graph6 corpus beyond it)",
            limit: ENUMERATION_MAX_N,
            got: n,
        });
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        let next: Result<Vec<Vec<(CanonicalForm, Graph)>>> =
            level.par_iter().map(children).collect();
        let mut next: Vec<(CanonicalForm, Graph)> = next?.into_iter().flatten().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dedupe of every labelled graph on `n` vertices by canonical form.
    fn brute_force_classes(n: usize) -> HashSet<CanonicalForm> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut classes = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            classes.insert(canonical_form(&g).unwrap());
        }
        classes
    }

    #[test]
    fn small_counts_match_brute_force() {
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            let brute = brute_force_classes(n);
            assert_eq!(brute.len(), expected, "brute force n = {n}");
            let gen: HashSet<_> = enumerate_nonisomorphic(n)
                .unwrap()
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(gen, brute, "n = {n}");
        }
    }

    #[test]
    fn six_vertices_match_brute_force() {
        let gen = enumerate_nonisomorphic(6).unwrap();
        assert_eq!(gen.len(), 156);
        let forms: HashSet<_> = gen.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), 156);
        assert_eq!(forms, brute_force_classes(6));
    }

    #[test]
    fn seven_vertices() {
        let gen = enumerate_nonisomorphic(7).unwrap();
        assert_eq!(gen.len(), 1044);
        let forms: HashSet<_> = gen.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), 1044);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_nonisomorphic(0).is_err());
        assert!(enumerate_nonisomorphic(8).is_err());
    }
}
