use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph, VertexSet};

use super::coloring::colorable;

/// What kind of forbidden graph a witness is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessKind {
    Vertex,
    Star {
        k: usize,
    },
    Clique {
        k: usize,
    },
    Cycle {
        length: usize,
    },
    Path {
        order: usize,
    },
    Regular {
        degree: usize,
    },
    /// A connected subgraph that is not (at_least - 1)-colourable.
    Chromatic {
        at_least: usize,
    },
}

/// A concrete forbidden subgraph found inside a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

impl Witness {
    pub(crate) fn new(kind: WitnessKind, vertices: VertexSet, edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        Witness {
            kind,
            vertices,
            edges,
        }
    }

    pub(crate) fn from_walk(kind: WitnessKind, walk: &[usize], closed: bool) -> Self {
        let mut edges: Vec<(usize, usize)> = walk.windows(2).map(|w| (w[0], w[1])).collect();
        if closed && walk.len() > 2 {
            edges.push((walk[walk.len() - 1], walk[0]));
        }
        Witness::new(kind, walk.iter().copied().collect(), edges)
    }

    /// Relabels into the parent graph of `sub`.
    pub fn to_parent(&self, sub: &Subgraph) -> Witness {
        Witness::new(
            self.kind,
            sub.to_parent(&self.vertices),
            self.edges
                .iter()
                .map(|&(a, b)| (sub.parent_label(a), sub.parent_label(b)))
                .collect(),
        )
    }

    /// The witness as a graph on its own vertex set.
    pub fn as_graph(&self) -> Graph {
        let idx = |v: usize| self.vertices.as_slice().binary_search(&v).unwrap() + 1;
        Graph::from_edges(
            self.vertices.len(),
            self.edges.iter().map(|&(a, b)| (idx(a), idx(b))),
        )
        .expect("witness edges lie on witness vertices")
    }

    /// Re-checks the witness against `g` from scratch: its edges must be
    /// edges of `g` and its shape must match its kind.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |why: String| Err(Error::InvalidInput(format!("witness rejected: {why}")));
        self.vertices.validate(g.n())?;
        if self.vertices.is_empty() {
            return fail("no vertices".into());
        }
        for &(a, b) in &self.edges {
            if !self.vertices.contains(a) || !self.vertices.contains(b) {
                return fail(format!("edge {a}-{b} leaves the vertex set"));
            }
            if !g.has_edge(a, b) {
                return fail(format!("{a}-{b} is not an edge of the graph"));
            }
        }
        let mut dedup = self.edges.clone();
        dedup.dedup();
        if dedup.len() != self.edges.len() {
            return fail("repeated edge".into());
        }
        let h = self.as_graph();
        let n = h.n();
        let ok = match self.kind {
            WitnessKind::Vertex => n == 1,
            WitnessKind::Star { k } => n == k + 1 && h.edge_count() == k && h.max_degree() == k,
            WitnessKind::Clique { k } => n == k && h.is_complete(),
            WitnessKind::Cycle { length } => {
                n == length && length >= 3 && h.is_regular() == Some(2) && h.is_connected()
            }
            WitnessKind::Path { order } => {
                n == order && h.edge_count() == order - 1 && h.is_connected() && h.max_degree() <= 2
            }
            WitnessKind::Regular { degree } => h.is_regular() == Some(degree),
            WitnessKind::Chromatic { at_least } => {
                at_least >= 1
                    && h.is_connected()
                    && (at_least == 1
                        || colorable(&h, at_least - 1, &mut Budget::default())?.is_none())
            }
        };
        if ok {
            Ok(())
        } else {
            fail(format!("shape does not match {:?}", self.kind))
        }
    }
}
