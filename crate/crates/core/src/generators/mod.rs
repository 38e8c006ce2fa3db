//! Named graphs and the extremal constructions.

mod enumerate;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use enumerate::{enumerate_all, enumerate_connected, ENUM_GUARD};

/// K_n.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
        .expect("labels in range")
}

/// K_{1,n}: n + 1 vertices with centre 1.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n + 1, (2..=n + 1).map(|i| (1, i))).expect("labels in range")
}

/// P_n: the path 1 - 2 - ... - n.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
}

/// C_n, with C_1 = K_1 and C_2 = K_2.
pub fn cycle(n: usize) -> Result<Graph> {
    match n {
        0 => Err(Error::InvalidParameter("cycle needs n >= 1".into())),
        1 | 2 => Ok(complete(n)),
        _ => Graph::from_edges(n, (1..=n).map(|i| (i, mod_star(i + 1, n).unwrap()))),
    }
}

/// Modulo into `[a]`: multiples of `a` map to `a` rather than 0.
pub fn mod_star(x: usize, a: usize) -> Result<usize> {
    if a == 0 {
        return Err(Error::InvalidParameter("mod* needs a >= 1".into()));
    }
    Ok(match x % a {
        0 => a,
        rem => rem,
    })
}

/// C_n^r: vertices at cycle distance at most `r` are adjacent. `r = 1`
/// gives C_n itself.
pub fn cycle_power(n: usize, r: usize) -> Result<Graph> {
    if r == 0 || r >= n {
        return Err(Error::InvalidParameter(format!(
            "cycle power needs 1 <= r < n, got n = {n}, r = {r}"
        )));
    }
    if r == 1 {
        return cycle(n);
    }
    let edges = (1..=n).flat_map(|i| (1..=r).map(move |j| (i, mod_star(i + j, n).unwrap())));
    Graph::from_edges(n, edges)
}

/// The k-regular gadget C(k) on 2k + 2 vertices.
pub fn gadget_c(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "gadget C(k) needs k >= 2, got {k}"
        )));
    }
    let s = 2 * k + 2;
    if k % 2 == 0 {
        return cycle_power(s, k / 2);
    }
    let h = (k + 1) / 2;
    let base = cycle_power(s, (k - 1) / 2)?;
    let chords = chord_index_set(k).into_iter().map(|i| (i, i + h));
    debug_assert!(h < s);
    base.with_edges(chords)
}

/// [(k+1)/2] ∪ ([k+1+(k+1)/2] \ [k+1]), the chord starts of C(k) for odd k.
pub fn chord_index_set(k: usize) -> Vec<usize> {
    let h = (k + 1) / 2;
    (1..=h).chain(k + 2..=k + 1 + h).collect()
}

/// j_i = (i + k + 1) mod* (2k + 2), the partner of `i` in the dominating
/// pairs of C(k).
pub fn gadget_partner(k: usize, i: usize) -> usize {
    mod_star(i + k + 1, 2 * k + 2).expect("2k + 2 > 0")
}

/// n and k of a block construction with the derived quotient and remainder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub n: usize,
    pub k: usize,
    period: usize,
}

impl ConstructionParams {
    /// Blocks of size k + 1 (the clique chain B_{n,k}).
    pub fn clique_chain(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidParameter(format!(
                "B_{{n,k}} needs n, k >= 1, got n = {n}, k = {k}"
            )));
        }
        Ok(ConstructionParams {
            n,
            k,
            period: k + 1,
        })
    }

    /// Blocks of size 2k + 3 (one path vertex plus a copy of C(k)).
    pub fn gadget_chain(n: usize, k: usize) -> Result<Self> {
        if k < 2 || n < 2 * k + 3 {
            return Err(Error::InvalidParameter(format!(
                "B_{{n,C(k)}} needs k >= 2 and n >= 2k + 3, got n = {n}, k = {k}"
            )));
        }
        Ok(ConstructionParams {
            n,
            k,
            period: 2 * k + 3,
        })
    }

    pub fn q(&self) -> usize {
        self.n / self.period
    }

    pub fn r(&self) -> usize {
        self.n % self.period
    }

    /// min{1, r}
    pub fn t(&self) -> usize {
        self.r().min(1)
    }

    /// q' = q + 1 if there is a non-empty remainder block.
    pub fn q_prime(&self) -> usize {
        self.q() + self.t()
    }
}

/// A constructed graph with its named vertices and vertex groups.
#[derive(Clone, Debug, Serialize)]
pub struct LabeledConstruction {
    #[serde(skip)]
    pub graph: Graph,
    pub params: Option<ConstructionParams>,
    pub roles: BTreeMap<String, Vec<usize>>,
}

impl LabeledConstruction {
    fn plain(graph: Graph) -> Self {
        LabeledConstruction {
            graph,
            params: None,
            roles: BTreeMap::new(),
        }
    }

    pub fn role(&self, name: &str) -> Option<&[usize]> {
        self.roles.get(name).map(Vec::as_slice)
    }

    /// The single vertex playing role `name`.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        match self.role(name)? {
            [v] => Some(*v),
            _ => None,
        }
    }
}

/// B_{n,k}: q disjoint (k+1)-cliques plus an r-clique, the marked vertices
/// b_1, ..., b_{q'} joined into a path. Block i occupies consecutive labels
/// and b_i is its first vertex.
pub fn construction_b(n: usize, k: usize) -> Result<LabeledConstruction> {
    let params = ConstructionParams::clique_chain(n, k)?;
    let (q, r) = (params.q(), params.r());
    let mut roles = BTreeMap::new();
    if q == 0 {
        let graph = complete(r);
        roles.insert("B_1".to_string(), graph.vertices().collect());
        return Ok(LabeledConstruction {
            graph,
            params: Some(params),
            roles,
        });
    }
    let mut edges = Vec::new();
    let mut marks = Vec::new();
    let mut start = 1;
    for i in 1..=params.q_prime() {
        let size = if i <= q { k + 1 } else { r };
        let block: Vec<usize> = (start..start + size).collect();
        for (a, &u) in block.iter().enumerate() {
            for &w in &block[a + 1..] {
                edges.push((u, w));
            }
        }
        marks.push(start);
        roles.insert(format!("b_{i}"), vec![start]);
        roles.insert(format!("B_{i}"), block);
        start += size;
    }
    edges.extend(marks.windows(2).map(|w| (w[0], w[1])));
    roles.insert("b".to_string(), marks);
    Ok(LabeledConstruction {
        graph: Graph::from_edges(n, edges)?,
        params: Some(params),
        roles,
    })
}

/// B_{n,C(k)}. Labels: u_1..u_{q+r} are 1..q+r, then the copies G_1..G_q
/// of C(k) follow in order, v_{i,j} = q + r + (i-1)(2k+2) + j.
pub fn construction_bnck(n: usize, k: usize) -> Result<LabeledConstruction> {
    let params = ConstructionParams::gadget_chain(n, k)?;
    let (q, r, t) = (params.q(), params.r(), params.t());
    let s = 2 * k + 2;
    let gadget = gadget_c(k)?;
    let u = |i: usize| i;
    let v = |i: usize, j: usize| q + r + (i - 1) * s + j;

    let mut edges = Vec::new();
    let mut roles = BTreeMap::new();
    for i in 1..=q {
        edges.push((u(i), v(i, 1)));
        edges.extend(gadget.edges().map(|(a, b)| (v(i, a), v(i, b))));
        roles.insert(format!("G_{i}"), (1..=s).map(|j| v(i, j)).collect());
        for j in 1..=s {
            roles.insert(format!("v_{{{i},{j}}}"), vec![v(i, j)]);
        }
    }
    // E(P_{q+t})
    edges.extend((1..q + t).map(|i| (u(i), u(i + 1))));
    // R is the star on u_{q+1}..u_{q+r} centred at u_{q+r}
    if r >= 2 {
        edges.extend((1..r).map(|j| (u(q + r), u(q + j))));
        roles.insert("R".to_string(), (1..=r).map(|j| u(q + j)).collect());
    }
    for i in 1..=q + r {
        roles.insert(format!("u_{i}"), vec![u(i)]);
    }
    roles.insert("u".to_string(), (1..=q + r).collect());
    Ok(LabeledConstruction {
        graph: Graph::from_edges(n, edges)?,
        params: Some(params),
        roles,
    })
}

/// B'_{n,C(k)}: B_{n,C(k)} with V(R) completed to a clique.
pub fn construction_bnck_prime(n: usize, k: usize) -> Result<LabeledConstruction> {
    let mut base = construction_bnck(n, k)?;
    if let Some(rv) = base.role("R").map(<[usize]>::to_vec) {
        let extra = rv
            .iter()
            .enumerate()
            .flat_map(|(a, &x)| rv[a + 1..].iter().map(move |&y| (x, y)));
        base.graph = base.graph.with_edges(extra)?;
    }
    Ok(base)
}

/// The gadget C(k) as a labelled construction (roles map each vertex i to
/// its dominating partner j_i).
pub fn construction_gadget(k: usize) -> Result<LabeledConstruction> {
    let mut c = LabeledConstruction::plain(gadget_c(k)?);
    for i in c.graph.vertices() {
        c.roles.insert(format!("j_{i}"), vec![gadget_partner(k, i)]);
    }
    Ok(c)
}

/// The disjoint union of `copies` stars K_{1,k}.
pub fn star_forest(copies: usize, k: usize) -> Graph {
    (0..copies).fold(Graph::empty(0), |acc, _| acc.disjoint_union(&star(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, VertexSet};
    use std::collections::BTreeSet;

    fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn basic_families() {
        assert_eq!(complete(3).edge_count(), 3);
        let s = star(3);
        assert_eq!(s.n(), 4);
        assert_eq!(edge_set(&s), BTreeSet::from([(1, 2), (1, 3), (1, 4)]));
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.n(), c5.edge_count(), c5.is_regular()), (5, 5, Some(2)));
        assert_eq!(cycle(1).unwrap(), complete(1));
        assert_eq!(cycle(2).unwrap(), complete(2));
        assert!(cycle(0).is_err());
        assert!(path(0).is_err());
        assert_eq!(path(1).unwrap().n(), 1);
    }

    #[test]
    fn mod_star_values() {
        assert_eq!(mod_star(8, 4).unwrap(), 4);
        assert_eq!(mod_star(9, 4).unwrap(), 1);
        assert_eq!(mod_star(3, 4).unwrap(), 3);
        assert!(mod_star(3, 0).is_err());
    }

    #[test]
    fn cycle_powers() {
        assert_eq!(cycle_power(6, 1).unwrap(), cycle(6).unwrap());
        let g = cycle_power(10, 2).unwrap();
        assert_eq!(g.is_regular(), Some(4));
        assert_eq!(g.edge_count(), 20);
        // oracle: all pairs at cyclic distance <= 2
        let expected: BTreeSet<(usize, usize)> = (1..=10)
            .flat_map(|i| (i + 1..=10).map(move |j| (i, j)))
            .filter(|&(i, j)| (j - i).min(10 - (j - i)) <= 2)
            .collect();
        assert_eq!(edge_set(&g), expected);
        assert_eq!(cycle_power(7, 3).unwrap(), complete(7));
        assert!(cycle_power(5, 5).is_err());
        assert!(cycle_power(5, 0).is_err());
    }

    #[test]
    fn gadget_examples() {
        assert!(is_isomorphic(&gadget_c(2).unwrap(), &cycle(6).unwrap()).unwrap());
        let c3 = gadget_c(3).unwrap();
        assert_eq!(chord_index_set(3), vec![1, 2, 5, 6]);
        let mut expected = edge_set(&cycle(8).unwrap());
        expected.extend([(1, 3), (2, 4), (5, 7), (6, 8)]);
        assert_eq!(edge_set(&c3), expected);
        assert_eq!(c3.is_regular(), Some(3));
        assert_eq!(gadget_c(4).unwrap(), cycle_power(10, 2).unwrap());
        assert!(gadget_c(1).is_err());
    }

    #[test]
    fn gadget_is_k_regular_and_pairs_dominate() {
        for k in 2..=8 {
            let g = gadget_c(k).unwrap();
            assert_eq!(g.n(), 2 * k + 2);
            assert_eq!(g.is_regular(), Some(k), "C({k})");
            for i in g.vertices() {
                let pair = VertexSet::from([i, gadget_partner(k, i)]);
                assert_eq!(g.closed_neighborhood(&pair).unwrap(), g.all_vertices());
            }
        }
    }

    #[test]
    fn clique_chain_examples() {
        assert_eq!(construction_b(3, 3).unwrap().graph, complete(3));

        let b = construction_b(8, 3).unwrap();
        assert_eq!((b.graph.n(), b.graph.edge_count()), (8, 2 * 6 + 1));
        assert_eq!(b.role("b").unwrap(), &[1, 5]);
        assert!(b.graph.has_edge(1, 5));

        let b = construction_b(9, 3).unwrap();
        assert_eq!(b.graph.n(), 9);
        assert_eq!(b.role("b").unwrap(), &[1, 5, 9]);
        assert!(b.graph.has_edge(1, 5) && b.graph.has_edge(5, 9));
        assert_eq!(b.graph.degree(9), 1);
        assert_eq!(b.graph.edge_count(), 12 + 2);
    }

    #[test]
    fn clique_chain_blocks_minus_mark_are_cliques() {
        for k in 1..=5 {
            for n in 1..=4 * (k + 1) {
                let b = construction_b(n, k).unwrap();
                assert_eq!(b.graph.n(), n);
                assert!(b.graph.is_connected());
                let q = n / (k + 1);
                for i in 1..=q {
                    let block = VertexSet::from(b.role(&format!("B_{i}")).unwrap().to_vec());
                    let mark = b.vertex(&format!("b_{i}")).unwrap();
                    let rest = block.difference(&VertexSet::singleton(mark));
                    let h = b.graph.induced_subgraph(&rest).unwrap().graph;
                    assert_eq!(h, complete(k));
                }
            }
        }
    }

    #[test]
    fn gadget_chain_examples() {
        let g = construction_bnck(7, 2).unwrap();
        assert_eq!((g.graph.n(), g.graph.edge_count()), (7, 7));
        assert!(g
            .graph
            .has_edge(g.vertex("u_1").unwrap(), g.vertex("v_{1,1}").unwrap()));

        let g = construction_bnck(14, 2).unwrap();
        assert_eq!((g.graph.n(), g.graph.edge_count()), (14, 2 * 7 + 1));
        assert!(g.graph.has_edge(1, 2));

        let g = construction_bnck(16, 2).unwrap();
        let (u3, u4) = (g.vertex("u_3").unwrap(), g.vertex("u_4").unwrap());
        assert_eq!(g.role("R").unwrap(), &[u3, u4]);
        assert!(g.graph.has_edge(2, u3) && g.graph.has_edge(u3, u4));
        assert_eq!(g.graph.neighbors(u4), &[u3]);
        assert!(g.graph.is_connected());

        assert!(construction_bnck(6, 2).is_err());
        assert!(construction_bnck(10, 1).is_err());
    }

    #[test]
    fn gadget_chain_vertex_count() {
        for k in 2..=5 {
            for n in 2 * k + 3..=3 * (2 * k + 3) + 2 {
                let g = construction_bnck(n, k).unwrap();
                let p = g.params.unwrap();
                assert_eq!(p.q() * (2 * k + 2) + p.q() + p.r(), n);
                assert_eq!(g.graph.n(), n);
                assert!(g.graph.is_connected());
            }
        }
    }

    #[test]
    fn gadget_chain_prime() {
        let a = construction_bnck(15, 2).unwrap();
        let b = construction_bnck_prime(15, 2).unwrap();
        assert_eq!(a.params.unwrap().r(), 1);
        assert_eq!(a.graph, b.graph);

        let a = construction_bnck(16, 2).unwrap();
        let b = construction_bnck_prime(16, 2).unwrap();
        assert_eq!(a.graph, b.graph);

        let a = construction_bnck(25, 4).unwrap();
        let b = construction_bnck_prime(25, 4).unwrap();
        assert_eq!(a.params.unwrap().r(), 3);
        let diff: Vec<_> = edge_set(&b.graph)
            .difference(&edge_set(&a.graph))
            .copied()
            .collect();
        assert_eq!(diff, vec![(3, 4)]);
        assert_eq!(a.role("R").unwrap(), &[3, 4, 5]);
    }

    #[test]
    fn star_forest_shape() {
        let g = star_forest(3, 2);
        assert_eq!((g.n(), g.edge_count(), g.components().len()), (9, 6, 3));
    }
}
