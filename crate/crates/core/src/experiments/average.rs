use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_nonisomorphic, read_graph6, Graph};
use crate::spectral::{eigenvalues_only, square_energies};

/// Averages of `s⁺` and `s⁻` over the graphs with `m` edges.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AverageRow {
    pub m: usize,
    pub graph_count: usize,
    pub avg_s_plus: f64,
    pub avg_s_minus: f64,
}

/// Per-edge-count averages over a family of graphs on `n` vertices. Only edge
/// counts that occur get a row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AverageTable {
    pub n: usize,
    pub rows: Vec<AverageRow>,
}

impl AverageTable {
    pub fn total_graphs(&self) -> usize {
        self.rows.iter().map(|r| r.graph_count).sum()
    }

    /// Edge count with the largest average `s⁻` (the first on ties).
    pub fn argmax_s_minus(&self) -> Option<usize> {
        self.rows
            .iter()
            .fold(None::<&AverageRow>, |best, r| match best {
                Some(b) if b.avg_s_minus >= r.avg_s_minus => Some(b),
                _ => Some(r),
            })
            .map(|r| r.m)
    }

    /// Largest `|avg s⁺ + avg s⁻ − 2m|` over the rows.
    pub fn conservation_error(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| (r.avg_s_plus + r.avg_s_minus - 2.0 * r.m as f64).abs())
            .fold(0.0, f64::max)
    }

    /// `avg s⁺` is nondecreasing in `m`, up to `tol`.
    pub fn s_plus_monotone(&self, tol: f64) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].avg_s_plus >= w[0].avg_s_plus - tol)
    }

    /// `avg s⁻` rises (weakly) up to its argmax and falls (weakly) after it.
    pub fn s_minus_unimodal(&self, tol: f64) -> bool {
        let Some(peak) = self.argmax_s_minus() else {
            return true;
        };
        self.rows.windows(2).all(|w| {
            if w[1].m <= peak {
                w[1].avg_s_minus >= w[0].avg_s_minus - tol
            } else {
                w[1].avg_s_minus <= w[0].avg_s_minus + tol
            }
        })
    }
}

#[derive(Default)]
struct Accumulator {
    n: Option<usize>,
    sums: Vec<(usize, f64, f64)>,
}

impl Accumulator {
    fn push_batch(&mut self, graphs: &[Graph]) -> Result<()> {
        for g in graphs {
            match self.n {
                None => {
                    self.n = Some(g.n());
                    self.sums = vec![(0, 0.0, 0.0); g.n() * g.n().saturating_sub(1) / 2 + 1];
                }
                Some(n) if n != g.n() => {
                    return Err(Error::param(format!(
                        "average energies need graphs of one order; saw n = {n} and n = {}",
                        g.n()
                    )))
                }
                Some(_) => {}
            }
        }
        let energies = graphs
            .par_iter()
            .map(|g| {
                let e = square_energies(&eigenvalues_only::<f64>(g)?, None);
                Ok((g.m(), e.s_plus, e.s_minus))
            })
            .collect::<Result<Vec<_>>>()?;
        for (m, sp, sm) in energies {
            let slot = &mut self.sums[m];
            slot.0 += 1;
            slot.1 += sp;
            slot.2 += sm;
        }
        Ok(())
    }

    fn finish(self) -> Result<AverageTable> {
        let n = self.n.ok_or(Error::Empty("no graphs to average"))?;
        let rows = self
            .sums
            .into_iter()
            .enumerate()
            .filter(|(_, (c, _, _))| *c > 0)
            .map(|(m, (c, sp, sm))| AverageRow {
                m,
                graph_count: c,
                avg_s_plus: sp / c as f64,
                avg_s_minus: sm / c as f64,
            })
            .collect();
        Ok(AverageTable { n, rows })
    }
}

/// Averages over the given graphs, which must all have the same order.
pub fn average_over(graphs: &[Graph]) -> Result<AverageTable> {
    let mut acc = Accumulator::default();
    acc.push_batch(graphs)?;
    acc.finish()
}

/// Averages over all non-isomorphic graphs on `n ≤ 7` vertices.
pub fn average_square_energies(n: usize) -> Result<AverageTable> {
    if n == 0 {
        return Err(Error::param("average energies need n >= 1"));
    }
    average_over(&enumerate_nonisomorphic(n)?)
}

const BATCH: usize = 8192;

/// Averages over a graph6 stream, processed in batches. Parse errors carry
/// their line number.
pub fn average_from_graph6<R: BufRead>(reader: R) -> Result<AverageTable> {
    let mut acc = Accumulator::default();
    let mut batch = Vec::with_capacity(BATCH);
    for g in read_graph6(reader) {
        batch.push(g?);
        if batch.len() == BATCH {
            acc.push_batch(&batch)?;
            batch.clear();
        }
    }
    acc.push_batch(&batch)?;
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::encode_graph6;

    #[test]
    fn n4_row_m3() {
        let t = average_square_energies(4).unwrap();
        assert_eq!(t.total_graphs(), 11);
        let row = &t.rows[3];
        assert_eq!((row.m, row.graph_count), (3, 3));
        assert!((row.avg_s_minus - 8.0 / 3.0).abs() < 1e-9);
        assert!(t.conservation_error() < 1e-9);
    }

    #[test]
    fn n7_counts_and_shape() {
        let t = average_square_energies(7).unwrap();
        assert_eq!(t.total_graphs(), 1044);
        assert_eq!(t.rows.len(), 22);
        assert!(t.s_plus_monotone(1e-9));
        assert!(t.conservation_error() < 1e-9);
    }

    #[test]
    fn stream_matches_enumeration() {
        let graphs = enumerate_nonisomorphic(5).unwrap();
        let text: String = graphs.iter().map(|g| encode_graph6(g) + "\n").collect();
        let streamed = average_from_graph6(text.as_bytes()).unwrap();
        assert_eq!(streamed, average_over(&graphs).unwrap());
    }

    #[test]
    fn stream_errors() {
        assert!(matches!(
            average_from_graph6("".as_bytes()),
            Err(Error::Empty(_))
        ));
        let mixed = "C~\nD??\n";
        assert!(average_from_graph6(mixed.as_bytes()).is_err());
        let err = average_from_graph6("C~\nC!!\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn unimodality() {
        let mk = |v: &[f64]| AverageTable {
            n: 0,
            rows: v
                .iter()
                .enumerate()
                .map(|(m, &s)| AverageRow {
                    m,
                    graph_count: 1,
                    avg_s_plus: 0.0,
                    avg_s_minus: s,
                })
                .collect(),
        };
        assert!(mk(&[0.0, 2.0, 3.0, 1.0]).s_minus_unimodal(0.0));
        assert!(!mk(&[0.0, 2.0, 1.0, 3.0, 1.0]).s_minus_unimodal(0.0));
        assert_eq!(mk(&[0.0, 2.0, 3.0, 1.0]).argmax_s_minus(), Some(2));
    }
}
