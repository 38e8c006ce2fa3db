use std::collections::BTreeSet;

use isolation::bound::{construct_for_family, construct_isolating_set, is_special_pair, CaseTag};
use isolation::detectors::contains_family;
use isolation::generators::{complete, construction_b, enumerate_connected};
use isolation::solver::{iota, is_isolating_set};
use isolation::{Budget, FamilySpec, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A few cliques of order about k hung off one to three hub vertices,
/// plus stray edges. Graphs like these reach the case-1 branch.
fn clique_heavy(rng: &mut ChaCha8Rng, k: usize) -> Graph {
    let blocks = rng.gen_range(2..=4);
    let mut g = Graph::empty(0);
    let mut spans = Vec::new();
    for _ in 0..blocks {
        let size = if rng.gen_bool(0.7) {
            k
        } else {
            rng.gen_range(1..=k + 1)
        };
        let start = g.n() + 1;
        g = g.disjoint_union(&complete(size));
        spans.push(start..=g.n());
    }
    let hubs = rng.gen_range(1..=3);
    let base = g.n();
    g = g.disjoint_union(&Graph::empty(hubs));
    let mut extra: Vec<(usize, usize)> = (base + 2..=base + hubs).map(|h| (base + 1, h)).collect();
    for s in &spans {
        let h = rng.gen_range(base + 1..=base + hubs);
        for _ in 0..rng.gen_range(1..=2) {
            extra.push((h, rng.gen_range(s.clone())));
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let (a, b) = (rng.gen_range(1..=g.n()), rng.gen_range(1..=g.n()));
        if a != b {
            extra.push((a, b));
        }
    }
    g.with_edges(extra).unwrap()
}

/// v = 1 with clique {1,3,4}, x = 2, H = {5,6,7} attached at y = 5, and a
/// perfect matching 3-6, 4-7 between the cliques; `tail` hangs off x.
fn case_two_gadget(tail: &[(usize, usize)]) -> Graph {
    let mut edges = vec![
        (1, 3),
        (1, 4),
        (3, 4),
        (1, 2),
        (2, 5),
        (5, 6),
        (5, 7),
        (6, 7),
        (3, 6),
        (4, 7),
    ];
    edges.extend_from_slice(tail);
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn exhaustive_small_graphs() {
    for n in 3..=7 {
        for g in enumerate_connected(n).unwrap() {
            for k in 3..=5 {
                if is_special_pair(&g, k).special {
                    continue;
                }
                let r = construct_isolating_set(&g, k).unwrap();
                assert!(r.size <= n / (k + 1), "{} k={k}", g.to_graph6());
                assert!(iota(&g, &FamilySpec::f01(k)).unwrap() <= r.size);
            }
        }
    }
}

#[test]
fn low_degree_graphs_with_an_f_graph_are_regular() {
    let mut budget = Budget::default();
    let mut seen = 0;
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            for k in 1..=6 {
                if g.max_degree() < k
                    && contains_family(&g, &FamilySpec::f01(k), &mut budget)
                        .unwrap()
                        .is_some()
                {
                    assert_eq!(g.is_regular(), Some(k - 1), "{}", g.to_graph6());
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn clique_chains_are_tight() {
    for k in [3, 4] {
        for n in k + 2..=5 * (k + 1) {
            let b = construction_b(n, k).unwrap().graph;
            let r = construct_isolating_set(&b, k).unwrap();
            assert_eq!(r.size, n / (k + 1), "B_({n},{k})");
            assert_eq!(
                iota(&b, &FamilySpec::f01(k)).unwrap(),
                n / (k + 1),
                "B_({n},{k})"
            );
        }
    }
}

#[test]
fn case_two_instances() {
    let r = construct_isolating_set(&case_two_gadget(&[]), 3).unwrap();
    assert_eq!(r.trace.case, CaseTag::Case2_2Z);
    assert_eq!(
        (r.trace.v, r.trace.x, r.trace.y, r.trace.z),
        (Some(1), Some(2), Some(5), Some(3))
    );
    assert_eq!(r.trace.j, Some(1));
    assert_eq!(r.size, 1);

    for tail in [&[(2, 8)][..], &[(2, 8), (8, 9)], &[(2, 8), (8, 9), (9, 10)]] {
        let g = case_two_gadget(tail);
        let r = construct_isolating_set(&g, 3).unwrap();
        assert_eq!(r.trace.case, CaseTag::Case2_1, "{}", g.to_graph6());
        assert!(r.trace.big_z.as_ref().unwrap().len() >= 4);
        assert!(r.size <= g.n() / 4);
    }

    let g = case_two_gadget(&[(2, 8), (8, 9), (9, 10), (8, 10)]);
    assert_eq!(
        construct_isolating_set(&g, 3).unwrap().trace.case,
        CaseTag::Case1
    );
}

#[test]
fn random_clique_heavy_graphs_and_case_coverage() {
    let mut tags = BTreeSet::new();
    let mut checked = 0;
    for seed in 0..3000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(3..=4);
        let g = clique_heavy(&mut rng, k);
        if !g.is_connected() || is_special_pair(&g, k).special {
            continue;
        }
        let r = construct_isolating_set(&g, k).unwrap();
        assert!(r.size <= g.n() / (k + 1));
        if seed % 10 == 0 && g.n() <= 16 {
            assert!(
                iota(&g, &FamilySpec::f01(k)).unwrap() <= r.size,
                "{}",
                g.to_graph6()
            );
        }
        tags.extend(r.trace.cases());
        checked += 1;
    }
    for tail in [&[][..], &[(2, 8)]] {
        tags.extend(
            construct_isolating_set(&case_two_gadget(tail), 3)
                .unwrap()
                .trace
                .cases(),
        );
    }
    for n in 3..=7 {
        for g in enumerate_connected(n).unwrap() {
            if !is_special_pair(&g, 3).special {
                tags.extend(construct_isolating_set(&g, 3).unwrap().trace.cases());
            }
        }
    }
    assert!(checked > 1000);
    for tag in [
        CaseTag::NoFGraph,
        CaseTag::LowDegreeRegular,
        CaseTag::DominatingVertex,
        CaseTag::NoCliqueComponents,
        CaseTag::Case1,
        CaseTag::Case2Recurse,
        CaseTag::Case2NoFGraphInY,
        CaseTag::Case2_1,
        CaseTag::Case2_2Z,
    ] {
        assert!(tags.contains(&tag), "{tag:?} never reached");
    }
    assert!(!tags.contains(&CaseTag::Case2_2W));
}

#[test]
fn family_wrapper_on_small_graphs() {
    let mut budget = Budget::default();
    for n in 3..=7 {
        for g in enumerate_connected(n).unwrap() {
            for k in [3, 4] {
                if is_special_pair(&g, k).special {
                    continue;
                }
                for i in 0..=3 {
                    let r = construct_for_family(&g, i, k).unwrap();
                    let spec = FamilySpec::indexed(i, k).unwrap();
                    assert!(is_isolating_set(&g, &spec, &r.set, &mut budget)
                        .unwrap()
                        .is_isolating());
                }
            }
        }
    }
}

#[test]
fn trace_serialises_with_case_names() {
    let r = construct_isolating_set(&case_two_gadget(&[(2, 8)]), 3).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["trace"]["case"], "case2.1");
    assert_eq!(json["trace"]["Z"], serde_json::json!([1, 3, 4, 6]));
    assert_eq!(json["bound"], 2);
}

#[test]
fn small_k_fallbacks() {
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            for k in [1, 2] {
                if is_special_pair(&g, k).special {
                    continue;
                }
                let r = construct_isolating_set(&g, k).unwrap();
                assert!(r.size <= n / (k + 1));
                assert_eq!(r.trace.case, CaseTag::ExactFallback);
            }
        }
    }
}
