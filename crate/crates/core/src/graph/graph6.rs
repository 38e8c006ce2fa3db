//! graph6 text encoding, nauty convention.

use super::Graph;
use crate::error::{Error, Result};

const MAX_N: usize = 258_047;

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes `g`. Bits follow the upper triangle column by column:
/// (1,2), (1,3), (2,3), (1,4), ...
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 2..=n {
        for i in 1..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc + 63) as char);
    }
    out
}

/// Decodes a graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |why: &str| Error::Graph6(format!("{why} in `{s}`"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(bad("empty input")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(bad("8-byte size form unsupported"));
            }
            if bytes.len() < 4 {
                return Err(bad("truncated size"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_N {
        return Err(bad("vertex count too large"));
    }
    let total = n * n.saturating_sub(1) / 2;
    let need = total.div_ceil(6);
    if body.len() != need {
        return Err(bad(&format!(
            "expected {need} adjacency bytes, found {}",
            body.len()
        )));
    }
    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    for idx in total..need * 6 {
        if bit(idx) {
            return Err(bad("non-zero padding"));
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 2..=n {
        for i in 1..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges)
}
