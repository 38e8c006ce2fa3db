use isolation::bound::{construct_isolating_set, is_special_pair};
use isolation::detectors::contains_family;
use isolation::generators::{enumerate_all, enumerate_connected};
use isolation::graph::{canonical_form, from_graph6, is_isomorphic};
use isolation::solver::{iota, iota_exact, is_isolating_set, SearchMode, SolverOptions};
use isolation::{Budget, FamilySpec, Graph, VertexSet};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 2..=n {
        for u in 1..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.4), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// A random graph made connected by a random spanning tree.
fn arb_connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let tree = (2..=n).map(|v| 1..v).collect::<Vec<_>>();
        (
            tree,
            prop::collection::vec(prop::bool::weighted(0.25), n * n.saturating_sub(1) / 2),
        )
            .prop_map(move |(parents, bits)| {
                let base = graph_from_bits(n, &bits);
                base.with_edges(parents.into_iter().zip(2..=n)).unwrap()
            })
    })
}

fn with_perm(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.n();
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |p| (g.clone(), p))
}

fn arb_family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        Just(FamilySpec::f01(3)),
        Just(FamilySpec::Star(2)),
        Just(FamilySpec::AllCycles),
        Just(FamilySpec::SingleVertex),
        Just(FamilySpec::Clique(3)),
        Just(FamilySpec::f3(3)),
        Just(FamilySpec::CycleLen(4)),
        Just(FamilySpec::PathOrder(3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_is_label_invariant((g, p) in arb_graph(1, 10).prop_flat_map(with_perm)) {
        let h = g.permute(&p).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(0, 70)) {
        prop_assert_eq!(from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn removing_an_edge_breaks_isomorphism(g in arb_graph(2, 9)) {
        if let Some((a, b)) = g.edges().next() {
            let h = Graph::from_edges(g.n(), g.edges().filter(|&e| e != (a, b))).unwrap();
            prop_assert!(!is_isomorphic(&g, &h).unwrap());
        }
    }

    #[test]
    fn witnesses_validate(g in arb_graph(1, 10), spec in arb_family()) {
        if let Some(w) = contains_family(&g, &spec, &mut Budget::default()).unwrap() {
            prop_assert!(w.validate(&g).is_ok(), "{:?}", w);
        }
    }

    #[test]
    fn residual_witness_avoids_closed_neighbourhood(
        g in arb_graph(1, 10),
        spec in arb_family(),
        pick in prop::collection::vec(any::<bool>(), 10),
    ) {
        let d: VertexSet = g.vertices().filter(|&v| pick[v - 1]).collect();
        if let isolation::solver::Verdict::Residual(w) =
            is_isolating_set(&g, &spec, &d, &mut Budget::default()).unwrap()
        {
            let closed = g.closed_neighborhood(&d).unwrap();
            prop_assert!(w.vertices.iter().all(|v| !closed.contains(v)));
            prop_assert!(w.validate(&g).is_ok());
        }
    }

    #[test]
    fn adding_a_vertex_keeps_a_set_isolating(g in arb_graph(1, 9), spec in arb_family(), extra in 1usize..=9) {
        let cert = iota_exact(&g, &spec, &SolverOptions::default()).unwrap();
        let mut d = cert.set.clone();
        d.insert((extra - 1) % g.n() + 1);
        prop_assert!(is_isolating_set(&g, &spec, &d, &mut Budget::default()).unwrap().is_isolating());
    }

    #[test]
    fn dominance_mode_agrees(g in arb_graph(1, 10), spec in arb_family()) {
        let fast = SolverOptions { mode: SearchMode::Dominance, ..SolverOptions::default() };
        prop_assert_eq!(iota_exact(&g, &spec, &fast).unwrap().size, iota(&g, &spec).unwrap());
    }

    #[test]
    fn constructive_bound_on_random_connected_graphs(g in arb_connected(3, 13), k in 3usize..=5) {
        prop_assume!(!is_special_pair(&g, k).special);
        let r = construct_isolating_set(&g, k).unwrap();
        prop_assert!(r.size <= g.n() / (k + 1));
    }
}

fn subadditivity_case() -> impl Strategy<Value = (Graph, VertexSet, Vec<bool>, FamilySpec)> {
    (arb_connected(2, 10), arb_family()).prop_flat_map(|(g, spec)| {
        let n = g.n();
        (
            Just(g),
            subsequence((1..=n).collect::<Vec<_>>(), 0..=n).prop_map(VertexSet::from),
            prop::collection::vec(any::<bool>(), n),
            Just(spec),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// ι(G) <= |X| + ι(G - Y) for Y ⊆ N[X].
    #[test]
    fn subadditivity((g, x, keep, spec) in subadditivity_case()) {
        let y: VertexSet = g.closed_neighborhood(&x).unwrap().iter().filter(|&v| keep[v - 1]).collect();
        let rest = g.delete_vertices(&y).unwrap();
        prop_assert!(iota(&g, &spec).unwrap() <= x.len() + iota(&rest.graph, &spec).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// ι of a disjoint union is the sum over the parts.
    #[test]
    fn additivity(parts in prop::collection::vec(arb_graph(1, 5), 2..=3), spec in arb_family()) {
        let union = parts.iter().fold(Graph::empty(0), |acc, h| acc.disjoint_union(h));
        let sum: usize = parts.iter().map(|h| iota(h, &spec).unwrap()).sum();
        prop_assert_eq!(iota(&union, &spec).unwrap(), sum);
    }
}

#[test]
fn graph6_round_trip_on_enumerated_graphs() {
    for n in 0..=7 {
        for g in enumerate_all(n).unwrap() {
            assert_eq!(from_graph6(&g.to_graph6()).unwrap(), g);
        }
    }
}

#[test]
fn f3_needs_no_more_than_f01() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            for k in 2..=4 {
                assert!(
                    iota(&g, &FamilySpec::f3(k)).unwrap() <= iota(&g, &FamilySpec::f01(k)).unwrap()
                );
            }
        }
    }
}
