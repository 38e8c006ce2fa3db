//! Exact chromatic number: a greedy clique bounds χ from below, a DSATUR
//! greedy colouring bounds it from above, and backtracking with
//! saturation-degree ordering settles the values in between.

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

/// Greedy clique: for each vertex, grow a clique through its neighbours in
/// order of decreasing degree.
fn greedy_clique_size(g: &Graph) -> usize {
    let mut best = usize::from(g.n() > 0);
    for v in g.vertices() {
        let mut cand: Vec<usize> = g.neighbors(v).to_vec();
        cand.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        let mut clique = vec![v];
        for w in cand {
            if clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn pick_dsatur(g: &Graph, color: &[usize], none: usize) -> Option<usize> {
    // largest saturation, then largest degree, then least label
    let mut best: Option<((usize, usize), usize)> = None;
    for v in g.vertices() {
        if color[v - 1] != none {
            continue;
        }
        let mut seen: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| color[w - 1])
            .filter(|&c| c != none)
            .collect();
        seen.sort_unstable();
        seen.dedup();
        let key = (seen.len(), g.degree(v));
        if best.is_none_or(|(b, _)| key > b) {
            best = Some((key, v));
        }
    }
    best.map(|(_, v)| v)
}

/// DSATUR greedy colouring; returns colours in `0..count`.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let none = usize::MAX;
    let mut color = vec![none; g.n()];
    while let Some(v) = pick_dsatur(g, &color, none) {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w - 1]).collect();
        color[v - 1] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    color
}

fn extend(
    g: &Graph,
    k: usize,
    color: &mut [usize],
    max_used: usize,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick("colourability search")?;
    let none = usize::MAX;
    let Some(v) = pick_dsatur(g, color, none) else {
        return Ok(true);
    };
    // new colours are only opened in order, which removes colour symmetry
    let limit = (max_used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| color[w - 1] == c) {
            continue;
        }
        color[v - 1] = c;
        if extend(g, k, color, max_used.max(c + 1), budget)? {
            return Ok(true);
        }
        color[v - 1] = none;
    }
    Ok(false)
}

/// A proper colouring with colours `1..=k`, if one exists.
pub fn colorable(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut color = vec![usize::MAX; g.n()];
    if extend(g, k, &mut color, 0, budget)? {
        Ok(Some(color.into_iter().map(|c| c + 1).collect()))
    } else {
        Ok(None)
    }
}

fn chromatic_connected(g: &Graph, budget: &mut Budget) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let lower = greedy_clique_size(g);
    let upper = dsatur_greedy(g).into_iter().max().unwrap() + 1;
    for k in lower..upper {
        if colorable(g, k, budget)?.is_some() {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// χ(G), computed per component. χ of the empty graph is 0.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<usize> {
    let mut chi = 0;
    for c in g.components() {
        chi = chi.max(chromatic_connected(&c.graph, budget)?);
    }
    Ok(chi)
}
