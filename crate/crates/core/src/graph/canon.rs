//! Canonical labelling by colour refinement plus individualisation.
//!
//! The certificate of a labelling is the graph6 bit string of the
//! relabelled upper triangle; the canonical form is the largest certificate
//! over all leaves of the search tree. Within a cell, vertices that are
//! twins (same neighbourhood apart from each other) lead to isomorphic
//! subtrees, so only one of them is individualised.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the canonical labeller.
pub const CANON_GUARD: usize = 16;

/// Isomorphism-invariant fingerprint: equal iff the graphs are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }
}

struct Search {
    adj: Vec<Vec<bool>>,
    nbrs: Vec<Vec<usize>>,
    twins: Vec<Vec<bool>>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search {
    fn refine(&self, colors: &mut [usize]) {
        let n = colors.len();
        let mut count = distinct(colors);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut s: Vec<usize> = self.nbrs[v].iter().map(|&w| colors[w]).collect();
                    s.sort_unstable();
                    (colors[v], s)
                })
                .collect();
            let mut keys: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            keys.sort();
            keys.dedup();
            for v in 0..n {
                colors[v] = keys.binary_search(&&sigs[v]).expect("signature present");
            }
            if keys.len() == count {
                break;
            }
            count = keys.len();
        }
    }

    fn certificate(&self, colors: &[usize]) -> u128 {
        let n = colors.len();
        let mut inv = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            inv[c] = v;
        }
        let mut bits = 0u128;
        for j in 1..n {
            for i in 0..j {
                bits = (bits << 1) | self.adj[inv[i]][inv[j]] as u128;
            }
        }
        bits
    }

    fn descend(&mut self, colors: Vec<usize>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            let cert = self.certificate(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| cert > *b) {
                self.best = Some((cert, colors));
            }
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.twins[u][v]) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + (c == target && w != v) as usize)
                .collect();
            self.refine(&mut next);
            self.descend(next);
        }
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Returns the canonical form together with a canonical labelling
/// `perm[v - 1]` (1-based new label of old vertex `v`).
fn canonical(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANON_GUARD {
        return Err(Error::Guard {
            context: "canonical labelling",
            n,
            guard: CANON_GUARD,
        });
    }
    let mut adj = vec![vec![false; n]; n];
    let nbrs: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().map(|&w| w - 1).collect())
        .collect();
    for (u, v) in g.edges() {
        adj[u - 1][v - 1] = true;
        adj[v - 1][u - 1] = true;
    }
    let mut twins = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            twins[u][v] = u != v && (0..n).all(|w| w == u || w == v || adj[u][w] == adj[v][w]);
        }
    }
    let mut search = Search {
        adj,
        nbrs,
        twins,
        best: None,
    };
    let mut colors = vec![0usize; n];
    search.refine(&mut colors);
    search.descend(colors);
    let (bits, colors) = search.best.unwrap_or((0, Vec::new()));
    Ok((
        CanonicalForm { n, bits },
        colors.into_iter().map(|c| c + 1).collect(),
    ))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical(g).map(|(f, _)| f)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical(g)?;
    g.permute(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    if a.is_complete() || a.edge_count() == 0 {
        return Ok(true);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
