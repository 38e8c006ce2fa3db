//! Containment tests for the forbidden families, each returning an explicit
//! witness subgraph when the answer is yes.
//!
//! Containment is ordinary (not induced) subgraph containment. Searches that
//! backtrack draw on a [`Budget`]; running out is reported as an error and
//! never as absence.

mod coloring;
mod family;
mod regular;
mod witness;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub use coloring::{chromatic_number, colorable};
pub use family::FamilySpec;
pub use regular::find_regular_subgraph;
pub use witness::{Witness, WitnessKind};

/// Δ(G).
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// A k-star, centred at the least vertex of degree at least k, using its k
/// least neighbours.
pub fn contains_star(g: &Graph, k: usize) -> Option<Witness> {
    let v = g.vertices().find(|&v| g.degree(v) >= k)?;
    let leaves = &g.neighbors(v)[..k];
    let mut vertices: VertexSet = leaves.iter().copied().collect();
    vertices.insert(v);
    Some(Witness::new(
        WitnessKind::Star { k },
        vertices,
        leaves.iter().map(|&w| (v, w)).collect(),
    ))
}

fn any_vertex(g: &Graph, kind: WitnessKind) -> Option<Witness> {
    (g.n() > 0).then(|| Witness::new(kind, VertexSet::singleton(1), Vec::new()))
}

fn any_edge(g: &Graph, kind: WitnessKind) -> Option<Witness> {
    g.edges()
        .next()
        .map(|(a, b)| Witness::new(kind, VertexSet::from([a, b]), vec![(a, b)]))
}

fn clique_extend(
    g: &Graph,
    k: usize,
    clique: &mut Vec<usize>,
    cand: &[usize],
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick("clique search")?;
    if clique.len() == k {
        return Ok(true);
    }
    for (i, &v) in cand.iter().enumerate() {
        if clique.len() + cand.len() - i < k {
            break;
        }
        let next: Vec<usize> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        clique.push(v);
        if clique_extend(g, k, clique, &next, budget)? {
            return Ok(true);
        }
        clique.pop();
    }
    Ok(false)
}

/// A k-clique, by backtracking over vertices of degree at least k - 1.
pub fn contains_clique(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Witness>> {
    let kind = WitnessKind::Clique { k };
    match k {
        0 => return Ok(None),
        1 => return Ok(any_vertex(g, kind)),
        2 => return Ok(any_edge(g, kind)),
        _ => {}
    }
    let cand: Vec<usize> = g.vertices().filter(|&v| g.degree(v) + 1 >= k).collect();
    let mut clique = Vec::with_capacity(k);
    if !clique_extend(g, k, &mut clique, &cand, budget)? {
        return Ok(None);
    }
    let edges = clique
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| clique[i + 1..].iter().map(move |&b| (a, b)))
        .collect();
    Ok(Some(Witness::new(
        kind,
        clique.iter().copied().collect(),
        edges,
    )))
}

/// Some cycle: the first edge (in ascending order) that closes a cycle in
/// the spanning forest built so far, plus the forest path between its ends.
pub fn contains_cycle_any(g: &Graph) -> Option<Witness> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in g.edges() {
        let (ra, rb) = (find(&mut parent, a - 1), find(&mut parent, b - 1));
        if ra != rb {
            parent[ra] = rb;
            forest[a - 1].push(b);
            forest[b - 1].push(a);
            continue;
        }
        // path from a to b inside the forest
        let mut prev = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([a]);
        seen[a - 1] = true;
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &w in &forest[u - 1] {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    prev[w - 1] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut walk = vec![b];
        while *walk.last().unwrap() != a {
            walk.push(prev[walk.last().unwrap() - 1]);
        }
        let len = walk.len();
        return Some(Witness::from_walk(
            WitnessKind::Cycle { length: len },
            &walk,
            true,
        ));
    }
    None
}

/// Depth-first extension of a simple path. With `close`, a path of
/// `order` vertices must also end next to its start, and only vertices
/// above the start are used.
fn path_extend(
    g: &Graph,
    order: usize,
    close: bool,
    walk: &mut Vec<usize>,
    on_walk: &mut [bool],
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick("path search")?;
    let start = walk[0];
    let last = *walk.last().unwrap();
    if walk.len() == order {
        return Ok(!close || g.has_edge(last, start));
    }
    for &w in g.neighbors(last) {
        if on_walk[w - 1] || (close && w < start) {
            continue;
        }
        walk.push(w);
        on_walk[w - 1] = true;
        let found = path_extend(g, order, close, walk, on_walk, budget)?;
        if found {
            return Ok(true);
        }
        on_walk[w - 1] = false;
        walk.pop();
    }
    Ok(false)
}

fn find_walk(
    g: &Graph,
    order: usize,
    close: bool,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    for s in g.vertices() {
        if close && g.degree(s) < 2 {
            continue;
        }
        let mut walk = vec![s];
        let mut on_walk = vec![false; g.n()];
        on_walk[s - 1] = true;
        if path_extend(g, order, close, &mut walk, &mut on_walk, budget)? {
            return Ok(Some(walk));
        }
    }
    Ok(None)
}

/// A cycle of exactly `k` vertices; `k = 1, 2` mean K_1 and K_2.
pub fn contains_cycle_len(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Witness>> {
    let kind = WitnessKind::Cycle { length: k };
    match k {
        0 => Ok(None),
        1 => Ok(any_vertex(g, WitnessKind::Vertex)),
        2 => Ok(any_edge(g, WitnessKind::Clique { k: 2 })),
        _ => Ok(find_walk(g, k, true, budget)?.map(|w| Witness::from_walk(kind, &w, true))),
    }
}

/// A path on exactly `k` vertices.
pub fn contains_path_order(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Witness>> {
    if k == 0 {
        return Ok(None);
    }
    let kind = WitnessKind::Path { order: k };
    Ok(find_walk(g, k, false, budget)?.map(|w| Witness::from_walk(kind, &w, false)))
}

/// A regular subgraph of some degree d >= r. Since a subgraph cannot have
/// a degree above Δ(G), the degrees tried are r..=Δ(G).
pub fn contains_regular_min(g: &Graph, r: usize, budget: &mut Budget) -> Result<Option<Witness>> {
    match r {
        0 => return Ok(any_vertex(g, WitnessKind::Regular { degree: 0 })),
        1 => return Ok(any_edge(g, WitnessKind::Regular { degree: 1 })),
        2 => {
            return Ok(contains_cycle_any(g).map(|mut w| {
                w.kind = WitnessKind::Regular { degree: 2 };
                w
            }))
        }
        _ => {}
    }
    for d in r..=g.max_degree() {
        if let Some(w) = find_regular_subgraph(g, d, budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// A connected subgraph of chromatic number at least k: the first
/// component that is not (k - 1)-colourable. χ is monotone under taking
/// subgraphs, so G contains such a graph iff χ(G) >= k.
pub fn contains_chromatic_min(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Witness>> {
    if k == 0 {
        return Ok(None);
    }
    let kind = WitnessKind::Chromatic { at_least: k };
    if k == 1 {
        return Ok(any_vertex(g, kind));
    }
    for c in g.components() {
        if c.graph.edge_count() == 0 {
            continue;
        }
        if colorable(&c.graph, k - 1, budget)?.is_none() {
            let edges = c
                .graph
                .edges()
                .map(|(a, b)| (c.parent_label(a), c.parent_label(b)))
                .collect();
            return Ok(Some(Witness::new(kind, c.parent_vertices(), edges)));
        }
    }
    Ok(None)
}

/// Whether `g` contains a member of `spec`, with the first witness found.
/// Union members are tried in their listed order.
///
/// For F_{0,k} ∪ F_{1,k} no separate search for regular subgraphs of degree
/// at least k is needed: such a subgraph contains a k-star, and once the
/// star test has failed Δ(G) < k caps the degrees tried anyway.
pub fn contains_family(
    g: &Graph,
    spec: &FamilySpec,
    budget: &mut Budget,
) -> Result<Option<Witness>> {
    match spec {
        FamilySpec::SingleVertex => Ok(any_vertex(g, WitnessKind::Vertex)),
        FamilySpec::Star(k) => Ok(contains_star(g, *k)),
        FamilySpec::Clique(k) => contains_clique(g, *k, budget),
        FamilySpec::CycleLen(k) => contains_cycle_len(g, *k, budget),
        FamilySpec::PathOrder(k) => contains_path_order(g, *k, budget),
        FamilySpec::AllCycles => Ok(contains_cycle_any(g)),
        FamilySpec::RegularMinDegree(r) => contains_regular_min(g, *r, budget),
        FamilySpec::ChromaticMin(k) => contains_chromatic_min(g, *k, budget),
        FamilySpec::Union(members) => {
            for m in members {
                if let Some(w) = contains_family(g, m, budget)? {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        complete, construction_b, cycle, enumerate_connected, gadget_c, gadget_partner, path, star,
    };

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn star_examples() {
        let w = contains_star(&star(3), 3).unwrap();
        assert_eq!(w.vertices, VertexSet::from([1, 2, 3, 4]));
        w.validate(&star(3)).unwrap();
        assert!(contains_star(&cycle(6).unwrap(), 3).is_none());
    }

    #[test]
    fn gadget_residual_has_k_star_at_partner() {
        for k in 2..=6 {
            let g = gadget_c(k).unwrap();
            for i in g.vertices() {
                let rest = g
                    .delete_closed_neighborhood(&VertexSet::singleton(i))
                    .unwrap();
                let j = gadget_partner(k, i);
                let local = rest.labels.iter().position(|&l| l == j).unwrap() + 1;
                assert_eq!(rest.graph.degree(local), k);
                assert!(contains_star(&rest.graph, k).is_some());
            }
        }
    }

    #[test]
    fn clique_examples() {
        let mut b = budget();
        let k5 = complete(5);
        let w = contains_clique(&k5, 4, &mut b).unwrap().unwrap();
        assert_eq!(w.vertices.len(), 4);
        w.validate(&k5).unwrap();
        assert!(contains_clique(&cycle(5).unwrap(), 3, &mut b)
            .unwrap()
            .is_none());
        let bg = construction_b(8, 3).unwrap().graph;
        let w = contains_clique(&bg, 4, &mut b).unwrap().unwrap();
        assert_eq!(w.vertices, VertexSet::from([1, 2, 3, 4]));
        assert!(contains_clique(&bg, 5, &mut b).unwrap().is_none());
    }

    #[test]
    fn cycle_and_path_examples() {
        let mut b = budget();
        assert!(contains_cycle_any(&path(6).unwrap()).is_none());
        assert!(contains_cycle_any(&star(4)).is_none());
        let c = contains_cycle_any(&cycle(5).unwrap()).unwrap();
        assert_eq!(c.kind, WitnessKind::Cycle { length: 5 });

        let g = gadget_c(4).unwrap();
        let rest = g
            .delete_closed_neighborhood(&VertexSet::singleton(1))
            .unwrap();
        let w = contains_cycle_len(&rest.graph, 5, &mut b).unwrap().unwrap();
        w.validate(&rest.graph).unwrap();

        let p5 = path(5).unwrap();
        let w = contains_path_order(&p5, 5, &mut b).unwrap().unwrap();
        assert_eq!(w.edges, p5.edges().collect::<Vec<_>>());
        assert!(contains_path_order(&p5, 6, &mut b).unwrap().is_none());
        assert!(contains_cycle_len(&cycle(6).unwrap(), 5, &mut b)
            .unwrap()
            .is_none());
    }

    #[test]
    fn regular_examples() {
        let mut b = budget();
        let c6 = cycle(6).unwrap();
        let w = contains_regular_min(&c6, 2, &mut b).unwrap().unwrap();
        assert_eq!(w.edges.len(), 6);
        let k4 = complete(4);
        let w = contains_regular_min(&k4, 3, &mut b).unwrap().unwrap();
        assert_eq!(w.vertices, k4.all_vertices());
        w.validate(&k4).unwrap();
        // C(3) - N[1] keeps the triangle 5-6-7 but no 3-regular subgraph
        let g = gadget_c(3).unwrap();
        let rest = g
            .delete_closed_neighborhood(&VertexSet::singleton(1))
            .unwrap();
        let tri = contains_regular_min(&rest.graph, 2, &mut b)
            .unwrap()
            .unwrap();
        assert_eq!(rest.to_parent(&tri.vertices), VertexSet::from([5, 6, 7]));
        assert!(contains_regular_min(&rest.graph, 3, &mut b)
            .unwrap()
            .is_none());
    }

    #[test]
    fn regular_graph_minus_closed_neighbourhood_has_no_regular_subgraph_of_same_degree() {
        // a connected d-regular graph that is not complete loses every
        // d-regular subgraph once N[v] is deleted
        let mut b = budget();
        for n in 3..=7 {
            for g in enumerate_connected(n).unwrap() {
                let Some(d) = g.is_regular() else { continue };
                if d == 0 || g.is_complete() {
                    continue;
                }
                for v in g.vertices() {
                    let rest = g
                        .delete_closed_neighborhood(&VertexSet::singleton(v))
                        .unwrap();
                    assert!(contains_regular_min(&rest.graph, d, &mut b)
                        .unwrap()
                        .is_none());
                }
            }
        }
    }

    #[test]
    fn regular_search_finds_non_induced_subgraphs() {
        // the triangular prism plus one chord: the prism itself is a
        // 3-regular subgraph that is not induced
        let prism = Graph::from_edges(
            6,
            [
                (1, 2),
                (2, 3),
                (1, 3),
                (4, 5),
                (5, 6),
                (4, 6),
                (1, 4),
                (2, 5),
                (3, 6),
                (1, 5),
            ],
        )
        .unwrap();
        let mut b = budget();
        let w = find_regular_subgraph(&prism, 3, &mut b).unwrap().unwrap();
        w.validate(&prism).unwrap();
        assert!(find_regular_subgraph(&prism, 4, &mut b).unwrap().is_none());
    }

    #[test]
    fn chromatic_examples() {
        let mut b = budget();
        let c5 = cycle(5).unwrap();
        let w = contains_chromatic_min(&c5, 3, &mut b).unwrap().unwrap();
        w.validate(&c5).unwrap();
        assert!(contains_chromatic_min(&c5, 4, &mut b).unwrap().is_none());
        assert!(contains_chromatic_min(&cycle(6).unwrap(), 3, &mut b)
            .unwrap()
            .is_none());
    }

    #[test]
    fn family_examples() {
        let mut b = budget();
        let c5 = cycle(5).unwrap();
        let w = contains_family(&c5, &FamilySpec::f01(2), &mut b)
            .unwrap()
            .unwrap();
        assert_eq!(w.kind, WitnessKind::Star { k: 2 });
        for k in 3..=6 {
            let kk = complete(k);
            let w = contains_family(&kk, &FamilySpec::f01(k), &mut b)
                .unwrap()
                .unwrap();
            assert_eq!(w.kind, WitnessKind::Regular { degree: k - 1 });
            assert_eq!(w.vertices, kk.all_vertices());
        }
        let p4 = path(4).unwrap();
        assert!(contains_family(&p4, &FamilySpec::f01(3), &mut b)
            .unwrap()
            .is_none());
    }

    #[test]
    fn star_detection_agrees_with_max_degree() {
        let mut b = budget();
        for n in 1..=6 {
            for g in enumerate_connected(n).unwrap() {
                for k in 1..=6 {
                    let found = contains_family(&g, &FamilySpec::Star(k), &mut b).unwrap();
                    assert_eq!(found.is_some(), max_degree(&g) >= k);
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = complete(8);
        assert!(contains_regular_min(&g, 7, &mut Budget::new(2)).is_err());
    }
}
