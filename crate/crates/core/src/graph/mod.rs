//! Simple undirected graphs and the families used throughout the workbench.

mod canon;
mod enumerate;
mod graph6;
mod random;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labelling, CanonicalForm, CANON_MAX_N};
pub use enumerate::{enumerate_nonisomorphic, ENUMERATION_MAX_N};
pub use graph6::{encode_graph6, parse_graph6, read_graph6, Graph6Reader};
pub use random::{generate_maximal_planar, sample_gnp, GNP_RNG};

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency is stored as a dense bit matrix, so membership queries are O(1).
/// Graphs are immutable once built; constructors go through [`GraphBuilder`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Build from an edge list. Self-loops and out-of-range endpoints are
    /// rejected; repeated edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[u * self.stride..(u + 1) * self.stride];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn degree(&self, u: usize) -> usize {
        self.bits[u * self.stride..(u + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// `Some(d)` when every vertex has degree `d`. The null graph is not regular.
    pub fn is_regular(&self) -> Option<usize> {
        let mut degs = (0..self.n).map(|u| self.degree(u));
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The null graph counts as connected, as does `K₁`.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colourability by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when the vertex set induces a complete graph.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
        }
        b.build()
    }

    /// Relabel so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        self.induced(perm)
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency<T: num_traits::Zero + num_traits::One + Clone>(&self) -> Vec<T> {
        let mut a = vec![T::zero(); self.n * self.n];
        for (u, v) in self.edges() {
            a[u * self.n + v] = T::one();
            a[v * self.n + u] = T::one();
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, g6={})",
            self.n,
            self.m,
            encode_graph6(self)
        )
    }
}

/// Mutable staging area for building a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    m: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        GraphBuilder {
            n,
            m: 0,
            stride,
            bits: vec![0; n * stride],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Returns `false` when the edge was already present.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u >= self.n || v >= self.n {
            return Err(Error::param(format!(
                "edge ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::param(format!("self-loop at vertex {u}")));
        }
        if self.get(u, v) {
            return Ok(false);
        }
        self.set(u, v);
        self.set(v, u);
        self.m += 1;
        Ok(true)
    }

    /// Panics on self-loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        self.try_add_edge(u, v).expect("valid edge")
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.get(u, v)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            m: self.m,
            stride: self.stride,
            bits: self.bits,
        }
    }
}

pub fn make_complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v);
        }
    }
    b.build()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn make_complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = GraphBuilder::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g.build()
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// Star on `n` vertices with centre 0, i.e. `K_{1,n−1}`.
pub fn make_star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("star edges are valid")
}

/// Largest vertex count [`make_kneser`] will realise.
pub const KNESER_MAX_VERTICES: usize = 1 << 14;

/// All `k`-subsets of `0..n` as multiword bitmasks, in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<u64>> {
    let words = n.div_ceil(64).max(1);
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut mask = vec![0u64; words];
        for &i in &idx {
            mask[i / 64] |= 1 << (i % 64);
        }
        out.push(mask);
        // Advance to the next combination.
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return out;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Kneser graph `K(n, k)`: `k`-subsets of an `n`-set, adjacent when disjoint.
/// Vertices are the subsets in lexicographic order.
pub fn make_kneser(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || n < 2 * k {
        return Err(Error::param(format!(
            "Kneser graph needs n >= 2k >= 2, got n = {n}, k = {k}"
        )));
    }
    let count = crate::exact::binomial(n as u64, k as u64);
    if count > num_bigint::BigInt::from(KNESER_MAX_VERTICES) {
        return Err(Error::SizeBudget {
            what: "Kneser graph vertices",
            limit: KNESER_MAX_VERTICES,
            got: usize::try_from(count).unwrap_or(usize::MAX),
        });
    }
    let sets = k_subsets(n, k);
    let mut b = GraphBuilder::new(sets.len());
    for (i, a) in sets.iter().enumerate() {
        for (j, c) in sets.iter().enumerate().skip(i + 1) {
            if a.iter().zip(c).all(|(x, y)| x & y == 0) {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// `t`-blowup: vertex `u` becomes `u·t .. u·t + t`, every edge becomes `K_{t,t}`.
pub fn blowup(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::param("blowup factor must be >= 1"));
    }
    let mut b = GraphBuilder::new(g.n() * t);
    for (u, v) in g.edges() {
        for i in 0..t {
            for j in 0..t {
                b.add_edge(u * t + i, v * t + j);
            }
        }
    }
    Ok(b.build())
}

/// Vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::new(off + h.n());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(u + off, v + off);
    }
    b.build()
}

pub fn disjoint_copies(g: &Graph, count: usize) -> Graph {
    (0..count).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, g))
}

/// Parameters naming every graph family the workbench can construct or
/// describe. GQ and Taylor families are spectrum-only.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphFamilyParams {
    Kneser { n: usize, k: usize },
    Blowup { base: Graph, t: usize },
    Gq { s: u64, t: u64 },
    Taylor { q: u64 },
    Gnp { n: usize, p: f64, seed: u64 },
    MaxPlanar { n: usize, seed: u64, flips: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Path { n: usize },
    Star { n: usize },
    DisjointCopies { base: Graph, count: usize },
}

impl GraphFamilyParams {
    /// Realise the family as an adjacency structure. Spectrum-only families
    /// (generalised quadrangles, Taylor graphs) are rejected.
    pub fn realize(&self) -> Result<Graph> {
        use GraphFamilyParams::*;
        match self {
            Kneser { n, k } => make_kneser(*n, *k),
            Blowup { base, t } => blowup(base, *t),
            Gq { .. } | Taylor { .. } => Err(Error::param(
                "generalised quadrangle and Taylor families are available as exact spectra only",
            )),
            Gnp { n, p, seed } => sample_gnp(*n, *p, *seed),
            MaxPlanar { n, seed, flips } => generate_maximal_planar(*n, *seed, *flips),
            Complete { n } => {
                if *n == 0 {
                    return Err(Error::param("complete graph needs n >= 1"));
                }
                Ok(make_complete(*n))
            }
            CompleteBipartite { a, b } => {
                if *a == 0 || *b == 0 {
                    return Err(Error::param("complete bipartite graph needs a, b >= 1"));
                }
                Ok(make_complete_bipartite(*a, *b))
            }
            Cycle { n } => make_cycle(*n),
            Path { n } | Star { n } if *n == 0 => Err(Error::param("path and star need n >= 1")),
            Path { n } => Ok(make_path(*n)),
            Star { n } => Ok(make_star(*n)),
            DisjointCopies { base, count } => Ok(disjoint_copies(base, *count)),
        }
    }
}
