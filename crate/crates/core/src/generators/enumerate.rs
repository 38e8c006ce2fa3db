//! Isomorphism classes of small graphs, one canonical representative each.
//!
//! Graphs on n vertices are grown from the representatives on n - 1
//! vertices by attaching a new vertex to every subset of the old ones, then
//! deduplicated by canonical form.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_graph, CanonicalForm, Graph};

/// Largest order accepted by the enumerators.
pub const ENUM_GUARD: usize = 8;

fn check(n: usize) -> Result<()> {
    if n > ENUM_GUARD {
        return Err(Error::Guard {
            context: "graph enumeration",
            n,
            guard: ENUM_GUARD,
        });
    }
    Ok(())
}

fn level(prev: &[Graph], n: usize) -> Vec<Graph> {
    let mut seen: HashMap<CanonicalForm, Graph> = HashMap::new();
    for g in prev {
        for mask in 0u32..(1 << (n - 1)) {
            let extra = (1..n).filter(|&v| mask >> (v - 1) & 1 == 1).map(|v| (v, n));
            let h = Graph::from_edges(n, g.edges().chain(extra)).expect("labels in range");
            let form = canonical_form(&h).expect("n within canonical guard");
            seen.entry(form)
                .or_insert_with(|| canonical_graph(&h).expect("n within canonical guard"));
        }
    }
    let mut out: Vec<(CanonicalForm, Graph)> = seen.into_iter().collect();
    out.sort_by_key(|(form, g)| (g.edge_count(), *form));
    out.into_iter().map(|(_, g)| g).collect()
}

/// One representative of every isomorphism class of n-vertex graphs,
/// ordered by edge count then canonical form.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    let mut cur = vec![Graph::empty(0)];
    for order in 1..=n {
        cur = level(&cur, order);
    }
    Ok(cur)
}

/// One representative of every isomorphism class of connected n-vertex
/// graphs. `n = 0` yields nothing.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(enumerate_all(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}
