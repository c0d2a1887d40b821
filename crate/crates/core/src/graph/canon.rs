//! Canonical labelling of small graphs by exhaustive permutation search.
//!
//! The canonical form is the lexicographically smallest graph6 adjacency
//! bit-string over all vertex orderings. The search places vertices one
//! position at a time and prunes any branch whose partial bit-string already
//! exceeds the best complete string found.

use std::fmt;

use super::{encode_graph6, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the brute-force search.
pub const CANON_MAX_N: usize = 10;

/// Canonical adjacency bit-string, stored as the graph6 text of the
/// canonically relabelled graph (same bit order, so ordering agrees).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_graph6(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        super::parse_graph6(&self.0).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Search {
    n: usize,
    adj: [u16; CANON_MAX_N],
    perm: [usize; CANON_MAX_N],
    cols: [u16; CANON_MAX_N],
    best: [u16; CANON_MAX_N],
    best_perm: [usize; CANON_MAX_N],
    have_best: bool,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let mut adj = [0u16; CANON_MAX_N];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Search {
            n: g.n(),
            adj,
            perm: [0; CANON_MAX_N],
            cols: [0; CANON_MAX_N],
            best: [0; CANON_MAX_N],
            best_perm: [0; CANON_MAX_N],
            have_best: false,
        }
    }

    fn column(&self, k: usize, v: usize) -> u16 {
        let mut col = 0u16;
        for u in 0..k {
            col = (col << 1) | ((self.adj[v] >> self.perm[u]) & 1);
        }
        col
    }

    fn run(&mut self, k: usize, used: u16) {
        if k == self.n {
            if !self.have_best || self.cols[..k] < self.best[..k] {
                self.best[..k].copy_from_slice(&self.cols[..k]);
                self.best_perm[..k].copy_from_slice(&self.perm[..k]);
                self.have_best = true;
            }
            return;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            self.perm[k] = v;
            self.cols[k] = self.column(k, v);
            if self.have_best && self.cols[..=k] > self.best[..=k] {
                continue;
            }
            self.run(k + 1, used | 1 << v);
        }
    }
}

fn check_budget(g: &Graph) -> Result<()> {
    if g.n() > CANON_MAX_N {
        return Err(Error::SizeBudget {
            what: "canonical form",
            limit: CANON_MAX_N,
            got: g.n(),
        });
    }
    Ok(())
}

/// Vertex order `perm` such that `g.permuted(&perm)` is the canonical graph.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>> {
    check_budget(g)?;
    let mut s = Search::new(g);
    s.run(0, 0);
    Ok(s.best_perm[..g.n()].to_vec())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let perm = canonical_labelling(g)?;
    Ok(CanonicalForm(encode_graph6(&g.permuted(&perm))))
}

/// Canonical form of `g` with vertex `v` individualised (forced first).
/// Two vertices get equal forms exactly when an automorphism maps one to the
/// other.
pub(crate) fn marked_form(g: &Graph, v: usize) -> Result<CanonicalForm> {
    check_budget(g)?;
    let mut s = Search::new(g);
    s.perm[0] = v;
    s.cols[0] = 0;
    s.run(1, 1 << v);
    let perm = &s.best_perm[..g.n()];
    Ok(CanonicalForm(encode_graph6(&g.permuted(perm))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_kneser, make_path, make_star};

    fn reversed(g: &Graph) -> Graph {
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        g.permuted(&perm)
    }

    #[test]
    fn relabelled_triangles_agree() {
        let k3 = make_complete(3);
        let other = Graph::from_edges(3, [(2, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(
            canonical_form(&k3).unwrap(),
            canonical_form(&other).unwrap()
        );
    }

    #[test]
    fn path_differs_from_triangle() {
        assert_ne!(
            canonical_form(&make_path(3)).unwrap(),
            canonical_form(&make_complete(3)).unwrap()
        );
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&c5.complement()).unwrap()
        );
    }

    #[test]
    fn canonical_graph_is_a_fixed_point() {
        let g = make_kneser(5, 2).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
        assert_eq!(canonical_form(&reversed(&g)).unwrap(), f);
    }

    #[test]
    fn form_is_minimal_string() {
        // edgeless beats everything; the star's canonical form puts the centre last
        assert_eq!(canonical_form(&Graph::empty(4)).unwrap().as_graph6(), "C?");
        let star = canonical_form(&make_star(4)).unwrap().to_graph();
        assert_eq!(star.degree(3), 3);
    }

    #[test]
    fn marked_forms_separate_orbits() {
        let star = make_star(5);
        let leaf = marked_form(&star, 1).unwrap();
        assert_eq!(leaf, marked_form(&star, 4).unwrap());
        assert_ne!(leaf, marked_form(&star, 0).unwrap());
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(
            canonical_form(&make_cycle(11).unwrap()),
            Err(Error::SizeBudget { .. })
        ));
    }
}
