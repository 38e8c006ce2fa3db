//! Simple undirected graphs on the vertex set `[n] = {1, ..., n}`.
//!
//! Every public interface speaks 1-based labels. Graphs are immutable once
//! built; operations that remove vertices return a [`Subgraph`] that keeps
//! the map from new labels back to the labels of the parent graph.

mod canon;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_graph, is_isomorphic, CanonicalForm, CANON_GUARD};
pub use graph6::{from_graph6, to_graph6};

/// Sorted, duplicate-free set of 1-based vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Checks that every label lies in `[1, n]`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v == 0 || v > n) {
            Some(&vertex) => Err(Error::InvalidVertex { vertex, n }),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    // adj[v - 1] holds the sorted 1-based neighbours of v
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `[n]`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one;
    /// self-loops and out-of-range labels are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet((1..=self.n()).collect())
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter().filter(move |&&w| w > u).map(move |&w| (u, w))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// The common degree if every vertex has the same degree. The empty
    /// graph has no degree.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reachable_from(1).len() == self.n()
    }

    fn reachable_from(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([start]);
        seen[start - 1] = true;
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for &w in self.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// N[X]: the union of the closed neighbourhoods of the members of `x`.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        x.validate(self.n())?;
        let mut mark = vec![false; self.n()];
        for v in x.iter() {
            mark[v - 1] = true;
            for &w in self.neighbors(v) {
                mark[w - 1] = true;
            }
        }
        Ok(VertexSet(
            mark.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i + 1)
                .collect(),
        ))
    }

    /// G[X], relabelled to `[|X|]` in ascending order of the old labels.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Subgraph> {
        keep.validate(self.n())?;
        let mut new_label = vec![0usize; self.n()];
        for (i, v) in keep.iter().enumerate() {
            new_label[v - 1] = i + 1;
        }
        let mut adj = Vec::with_capacity(keep.len());
        let mut m = 0;
        for v in keep.iter() {
            let list: Vec<usize> = self
                .neighbors(v)
                .iter()
                .map(|&w| new_label[w - 1])
                .filter(|&l| l != 0)
                .collect();
            m += list.len();
            adj.push(list);
        }
        Ok(Subgraph {
            graph: Graph { adj, m: m / 2 },
            labels: keep.as_slice().to_vec(),
        })
    }

    /// G − X.
    pub fn delete_vertices(&self, remove: &VertexSet) -> Result<Subgraph> {
        remove.validate(self.n())?;
        self.induced_subgraph(&self.all_vertices().difference(remove))
    }

    /// G − N[D].
    pub fn delete_closed_neighborhood(&self, d: &VertexSet) -> Result<Subgraph> {
        let closed = self.closed_neighborhood(d)?;
        self.delete_vertices(&closed)
    }

    /// Connected components ordered by their least vertex.
    pub fn components(&self) -> Vec<Subgraph> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen[v - 1] {
                continue;
            }
            let part = self.reachable_from(v);
            for &w in &part {
                seen[w - 1] = true;
            }
            out.push(
                self.induced_subgraph(&VertexSet(part))
                    .expect("component labels are in range"),
            );
        }
        out
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + shift).collect()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// A copy with additional edges.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.n(), self.edges().chain(extra))
    }

    /// Relabels so that old vertex `v` becomes `perm[v - 1]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {n} vertices",
                perm.len()
            )));
        }
        for &p in perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::InvalidParameter(
                    "not a permutation of [n]".to_string(),
                ));
            }
            seen[p - 1] = true;
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])))
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

/// A graph cut out of a parent graph, with `labels[i - 1]` the parent label
/// of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Subgraph {
    /// The whole graph viewed as a subgraph of itself.
    pub fn identity(graph: &Graph) -> Self {
        Subgraph {
            labels: graph.vertices().collect(),
            graph: graph.clone(),
        }
    }

    pub fn parent_label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn to_parent(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.labels[v - 1]).collect()
    }

    pub fn parent_vertices(&self) -> VertexSet {
        VertexSet(self.labels.clone())
    }

    /// Composes with the label map of the parent, yielding labels of the
    /// grandparent.
    pub fn compose(mut self, outer: &[usize]) -> Subgraph {
        for l in &mut self.labels {
            *l = outer[*l - 1];
        }
        self
    }
}
