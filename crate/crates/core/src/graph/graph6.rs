//! graph6 text encoding: one graph per line, printable bytes 63..=126.
//!
//! Layout: the vertex count `N(n)`, then the upper triangle of the adjacency
//! matrix in column order `(0,1),(0,2),(1,2),(0,3),…`, six bits per byte with
//! the most significant bit first, each byte offset by 63. Padding bits in the
//! last byte must be zero.

use std::io::BufRead;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = (1 << 36) - 1;

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph6 supports at most 2^36 - 1 vertices");
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::graph6(format!(
            "byte {b} outside the printable range 63..=126"
        )))
    }
}

fn decode_n(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let first = *bytes.first().ok_or_else(|| Error::graph6("empty input"))?;
    if first != 126 {
        return Ok((sextet(first)? as usize, &bytes[1..]));
    }
    let (width, rest) = if bytes.get(1) == Some(&126) {
        (6, &bytes[2..])
    } else {
        (3, &bytes[1..])
    };
    if rest.len() < width {
        return Err(Error::graph6("truncated vertex count"));
    }
    let mut n = 0usize;
    for &b in &rest[..width] {
        n = (n << 6) | sextet(b)? as usize;
    }
    Ok((n, &rest[width..]))
}

/// Parse one graph6 line. A trailing `\n` / `\r\n` is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, body) = decode_n(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::graph6(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0usize;
    let (mut u, mut v) = (0usize, 1usize);
    for &byte in body {
        let x = sextet(byte)?;
        for bit in (0..6).rev() {
            let set = (x >> bit) & 1 == 1;
            if k >= nbits {
                if set {
                    return Err(Error::graph6("nonzero padding bits"));
                }
                continue;
            }
            if set {
                b.add_edge(u, v);
            }
            k += 1;
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Ok(b.build())
}

/// Line-oriented reader over a graph6 corpus. Blank lines and the optional
/// `>>graph6<<` header are skipped; errors carry 1-based line numbers.
pub struct Graph6Reader<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            lines: reader.lines(),
            line_no: 0,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(e.into())),
            };
            self.line_no += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed == HEADER {
                continue;
            }
            return Some(parse_graph6(trimmed).map_err(|e| e.at_line(self.line_no)));
        }
    }
}

pub fn read_graph6<R: BufRead>(reader: R) -> Graph6Reader<R> {
    Graph6Reader::new(reader)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path};

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&make_complete(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(encode_graph6(&make_complete(4)), "C~");
        assert_eq!(encode_graph6(&make_path(2)), "A_");
        // 5-cycle 0-1-2-3-4-0
        assert_eq!(encode_graph6(&make_cycle(5).unwrap()), "Dhc");
    }

    #[test]
    fn round_trip_sample() {
        for s in ["D?{", "Dhc", "C~", "@", "?", "I?h]@eOWG"] {
            let g = parse_graph6(s).unwrap();
            assert_eq!(encode_graph6(&g), s);
        }
        let g = parse_graph6("D?{").unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
    }

    #[test]
    fn large_n_uses_escape() {
        let g = make_cycle(100).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err(), "too short");
        assert!(parse_graph6("C~~").is_err(), "too long");
        assert!(parse_graph6("C\x7f").is_err(), "byte out of range");
        // n = 2 has one adjacency bit; 'A' + 1 sets a padding bit.
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("~?").is_err(), "truncated escape");
    }

    #[test]
    fn reader_reports_line_numbers() {
        let text = ">>graph6<<C~\n\nDhc\nC!\n";
        let out: Vec<_> = read_graph6(text.as_bytes()).collect();
        assert_eq!(out.len(), 3);
        assert!(out[0].is_ok() && out[1].is_ok());
        let err = out[2].as_ref().unwrap_err().to_string();
        assert!(err.contains("line 4"), "{err}");
    }
}
