//! Constructive ⌊n/(k+1)⌋ bound for F_{0,k} ∪ F_{1,k}.
//!
//! [`construct_isolating_set`] follows the inductive argument case by case:
//! it takes a vertex v of maximum degree, deletes N[v], and treats the
//! components of what is left according to how the k-clique components
//! attach to N(v). Every recursion level re-checks that its set isolates
//! its subgraph and respects the bound; a failure is reported as an
//! internal inconsistency with the trace so far.
//!
//! For k <= 2 the set comes from the exact solver instead (and, for k = 1
//! beyond the solver guard, from the parity classes of a BFS tree).

use std::collections::VecDeque;

use serde::Serialize;

use crate::budget::Budget;
use crate::detectors::{contains_family, FamilySpec};
use crate::error::{Error, Result};
use crate::generators::{complete, cycle};
use crate::graph::{is_isomorphic, Graph, Subgraph, VertexSet};
use crate::solver::{iota_exact, is_isolating_set, SolverOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialReason {
    KClique,
    FiveCycleK2,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialPairVerdict {
    pub special: bool,
    pub reason: SpecialReason,
}

/// (G, k) is special when G is a k-clique, or k = 2 and G is a 5-cycle.
pub fn is_special_pair(g: &Graph, k: usize) -> SpecialPairVerdict {
    let iso = |h: &Graph| g.n() == h.n() && is_isomorphic(g, h).unwrap_or(false);
    let reason = if k >= 1 && iso(&complete(k)) {
        SpecialReason::KClique
    } else if k == 2 && iso(&cycle(5).expect("C_5")) {
        SpecialReason::FiveCycleK2
    } else {
        SpecialReason::None
    };
    SpecialPairVerdict {
        special: reason != SpecialReason::None,
        reason,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseTag {
    #[serde(rename = "no-F-graph")]
    NoFGraph,
    #[serde(rename = "low-degree-regular")]
    LowDegreeRegular,
    #[serde(rename = "dominating-vertex")]
    DominatingVertex,
    #[serde(rename = "no-Kk-components")]
    NoCliqueComponents,
    #[serde(rename = "case1")]
    Case1,
    /// G*_v is not a k-clique: recurse on it and add y.
    #[serde(rename = "case2-recurse")]
    Case2Recurse,
    #[serde(rename = "case2-noFgraph-in-Y")]
    Case2NoFGraphInY,
    #[serde(rename = "case2.1")]
    Case2_1,
    #[serde(rename = "case2.2-z")]
    Case2_2Z,
    #[serde(rename = "case2.2-w")]
    Case2_2W,
    #[serde(rename = "exact-fallback")]
    ExactFallback,
    #[serde(rename = "parity-fallback")]
    ParityFallback,
}

/// One level of the recursion. All labels are labels of the input graph.
#[derive(Clone, Debug, Serialize)]
pub struct TraceNode {
    pub case: CaseTag,
    pub vertices: VertexSet,
    pub n: usize,
    pub bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<usize>,
    #[serde(rename = "H", skip_serializing_if = "Option::is_none")]
    pub h: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(rename = "W", skip_serializing_if = "Option::is_none")]
    pub big_w: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(rename = "Z", skip_serializing_if = "Option::is_none")]
    pub big_z: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    pub set: VertexSet,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    fn new(case: CaseTag, labels: &[usize], bound: usize) -> Self {
        TraceNode {
            case,
            vertices: labels.iter().copied().collect(),
            n: labels.len(),
            bound,
            v: None,
            x: None,
            y: None,
            h: None,
            z: None,
            big_w: None,
            j: None,
            big_z: None,
            w: None,
            set: VertexSet::new(),
            children: Vec::new(),
        }
    }

    /// Case tags of this node and its descendants, depth first.
    pub fn cases(&self) -> Vec<CaseTag> {
        let mut out = vec![self.case];
        for c in &self.children {
            out.extend(c.cases());
        }
        out
    }
}

pub type BoundTrace = TraceNode;

#[derive(Clone, Debug, Serialize)]
pub struct BoundResult {
    pub set: VertexSet,
    pub size: usize,
    pub bound: usize,
    pub trace: BoundTrace,
}

struct Builder {
    k: usize,
    spec: FamilySpec,
    budget: Budget,
}

fn root_labels(labels: &[usize], set: &VertexSet) -> VertexSet {
    set.iter().map(|v| labels[v - 1]).collect()
}

fn is_k_clique(g: &Graph, k: usize) -> bool {
    g.n() == k && g.is_complete()
}

fn linked(g: &Graph, x: usize, part: &Subgraph) -> bool {
    part.labels.iter().any(|&u| g.has_edge(x, u))
}

impl Builder {
    fn inconsistent(&self, message: String, node: &TraceNode) -> Error {
        Error::InternalInconsistency {
            message,
            trace: serde_json::to_string(node).unwrap_or_default(),
        }
    }

    fn has_f_graph(&mut self, g: &Graph) -> Result<bool> {
        Ok(contains_family(g, &self.spec, &mut self.budget)?.is_some())
    }

    /// Recurses on `part` (a subgraph of `g`), returning its set in the
    /// labels of `g`.
    fn recurse(
        &mut self,
        part: &Subgraph,
        labels: &[usize],
        node: &mut TraceNode,
    ) -> Result<VertexSet> {
        let child_labels: Vec<usize> = part.labels.iter().map(|&l| labels[l - 1]).collect();
        let (set, trace) = self.build(&part.graph, &child_labels)?;
        node.children.push(trace);
        Ok(part.to_parent(&set))
    }

    fn build(&mut self, g: &Graph, labels: &[usize]) -> Result<(VertexSet, TraceNode)> {
        let k = self.k;
        let n = g.n();
        let bound = n / (k + 1);
        let mut node = TraceNode::new(CaseTag::NoFGraph, labels, bound);
        let set = self.step(g, labels, &mut node)?;

        node.set = root_labels(labels, &set);
        if set.len() > bound {
            return Err(self.inconsistent(
                format!(
                    "set of size {} exceeds bound {bound} on {}",
                    set.len(),
                    g.to_graph6()
                ),
                &node,
            ));
        }
        if !is_isolating_set(g, &self.spec, &set, &mut self.budget)?.is_isolating() {
            return Err(self.inconsistent(
                format!("set {} does not isolate {}", node.set, g.to_graph6()),
                &node,
            ));
        }
        Ok((set, node))
    }

    fn step(&mut self, g: &Graph, labels: &[usize], node: &mut TraceNode) -> Result<VertexSet> {
        let k = self.k;
        let n = g.n();
        let root = |v: usize| labels[v - 1];

        if !self.has_f_graph(g)? {
            node.case = CaseTag::NoFGraph;
            return Ok(VertexSet::new());
        }

        let delta = g.max_degree();
        if delta < k {
            // no k-star, so the F-graph is (k-1)-regular and, G being
            // connected, equal to G
            if g.is_regular() != Some(k - 1) {
                return Err(self.inconsistent(
                    format!("Δ <= k-1 but {} is not (k-1)-regular", g.to_graph6()),
                    node,
                ));
            }
            node.case = CaseTag::LowDegreeRegular;
            node.v = Some(root(1));
            return Ok(VertexSet::singleton(1));
        }

        let v = g.vertices().find(|&u| g.degree(u) == delta).unwrap();
        node.v = Some(root(v));
        let closed_v = g.closed_neighborhood(&VertexSet::singleton(v))?;
        if closed_v.len() == n {
            node.case = CaseTag::DominatingVertex;
            return Ok(VertexSet::singleton(v));
        }

        let rest = g.delete_vertices(&closed_v)?;
        let comps: Vec<Subgraph> = rest
            .graph
            .components()
            .into_iter()
            .map(|c| c.compose(&rest.labels))
            .collect();
        let (cliques, others): (Vec<&Subgraph>, Vec<&Subgraph>) =
            comps.iter().partition(|c| is_k_clique(&c.graph, k));

        if cliques.is_empty() {
            node.case = CaseTag::NoCliqueComponents;
            let mut set = VertexSet::singleton(v);
            for h in &others {
                set = set.union(&self.recurse(h, labels, node)?);
            }
            return Ok(set);
        }

        let nv = g.neighbors(v);
        let cliques_at = |x: usize| -> Vec<usize> {
            (0..cliques.len())
                .filter(|&i| linked(g, x, cliques[i]))
                .collect()
        };

        // Case 1: some neighbour of v is linked to two or more k-cliques
        if let Some(&x) = nv.iter().find(|&&x| cliques_at(x).len() >= 2) {
            node.case = CaseTag::Case1;
            node.x = Some(root(x));
            let at_x = cliques_at(x);
            let mut set = VertexSet::from([v, x]);
            for (i, h) in cliques.iter().enumerate() {
                if at_x.contains(&i) {
                    continue;
                }
                let Some(&xh) = nv.iter().find(|&&y| linked(g, y, h)) else {
                    return Err(
                        self.inconsistent("k-clique component not linked to N(v)".into(), node)
                    );
                };
                set.insert(xh);
            }
            for h in &others {
                set = set.union(&self.recurse(h, labels, node)?);
            }
            return Ok(set);
        }

        // Case 2: every neighbour of v is linked to at most one k-clique
        let h = cliques[0];
        let Some(&x) = nv.iter().find(|&&y| linked(g, y, h)) else {
            return Err(self.inconsistent("k-clique component not linked to N(v)".into(), node));
        };
        let y = *h.labels.iter().find(|&&u| g.has_edge(x, u)).unwrap();
        let h_set = h.parent_vertices();
        node.x = Some(root(x));
        node.y = Some(root(y));
        node.h = Some(root_labels(labels, &h_set));

        // members of H \ H' linked to x only
        let only_x: Vec<&Subgraph> = others
            .iter()
            .copied()
            .filter(|c| nv.iter().all(|&u| (u == x) == linked(g, u, c)))
            .collect();

        let mut x_plus_h = h_set.clone();
        x_plus_h.insert(x);
        let g_star = g.delete_vertices(&x_plus_h)?;
        let star_comps: Vec<Subgraph> = g_star
            .graph
            .components()
            .into_iter()
            .map(|c| c.compose(&g_star.labels))
            .collect();
        let Some(gv) = star_comps.iter().find(|c| c.labels.contains(&v)) else {
            return Err(self.inconsistent("v missing from G*".into(), node));
        };
        let mut expected: Vec<VertexSet> = only_x.iter().map(|c| c.parent_vertices()).collect();
        let mut found: Vec<VertexSet> = star_comps
            .iter()
            .filter(|c| !c.labels.contains(&v))
            .map(Subgraph::parent_vertices)
            .collect();
        expected.sort();
        found.sort();
        if expected != found {
            return Err(self.inconsistent(
                "components of G* other than G*_v differ from those linked to x only".into(),
                node,
            ));
        }

        if !is_k_clique(&gv.graph, k) {
            node.case = CaseTag::Case2Recurse;
            let mut set = self.recurse(gv, labels, node)?;
            set.insert(y);
            for c in &only_x {
                set = set.union(&self.recurse(c, labels, node)?);
            }
            return Ok(set);
        }

        let gv_set = gv.parent_vertices();
        if gv_set != closed_v.difference(&VertexSet::singleton(x)) {
            return Err(self.inconsistent("V(G*_v) differs from N[v] \\ {x}".into(), node));
        }
        let y_set = x_plus_h
            .union(&gv_set)
            .difference(&VertexSet::from([v, x, y]));
        let gy = g.induced_subgraph(&y_set)?;

        if !self.has_f_graph(&gy.graph)? {
            node.case = CaseTag::Case2NoFGraphInY;
            let mut set = VertexSet::singleton(x);
            for c in &only_x {
                set = set.union(&self.recurse(c, labels, node)?);
            }
            return Ok(set);
        }

        let Some(z_local) = gy.graph.vertices().find(|&u| gy.graph.degree(u) + 1 >= k) else {
            return Err(self.inconsistent(
                "G[Y] has an F-graph but no vertex with |N[z]| >= k".into(),
                node,
            ));
        };
        let z = gy.parent_label(z_local);
        let big_w: VertexSet = std::iter::once(z_local)
            .chain(gy.graph.neighbors(z_local)[..k - 1].iter().copied())
            .map(|u| gy.parent_label(u))
            .collect();
        node.z = Some(root(z));
        node.big_w = Some(root_labels(labels, &big_w));

        // G_1 = G*_v with v_1 = v, G_2 = H with v_2 = y
        let (j, gj) = if gv_set.contains(z) && z != v {
            (1, &gv_set)
        } else if h_set.contains(z) && z != y {
            (2, &h_set)
        } else {
            return Err(self.inconsistent("z lies in neither G_1' nor G_2'".into(), node));
        };
        let big_z = gj.union(&big_w);
        node.j = Some(j);
        node.big_z = Some(root_labels(labels, &big_z));
        let closed_z = g.closed_neighborhood(&VertexSet::singleton(z))?;
        if big_z.len() < k + 1 || !big_z.is_subset(&closed_z) {
            return Err(
                self.inconsistent("Z must have k+1 or more vertices inside N[z]".into(), node)
            );
        }

        if !only_x.is_empty() {
            node.case = CaseTag::Case2_1;
            let gz = Subgraph::identity(g);
            let gz = g.delete_vertices(&big_z)?.compose(&gz.labels);
            if !gz.graph.is_connected() || is_k_clique(&gz.graph, k) {
                return Err(
                    self.inconsistent("G_Z must be connected and not a k-clique".into(), node)
                );
            }
            let mut set = self.recurse(&gz, labels, node)?;
            set.insert(z);
            return Ok(set);
        }

        if n != 2 * k + 1 {
            return Err(self.inconsistent(format!("subcase 2.2 expects n = 2k+1, got {n}"), node));
        }
        let after_z = g.delete_closed_neighborhood(&VertexSet::singleton(z))?;
        if !self.has_f_graph(&after_z.graph)? {
            node.case = CaseTag::Case2_2Z;
            return Ok(VertexSet::singleton(z));
        }
        let outside = big_z.difference(gj);
        let [w] = outside.as_slice() else {
            return Err(self.inconsistent("Z \\ V(G_j) must be a single vertex".into(), node));
        };
        node.case = CaseTag::Case2_2W;
        node.w = Some(root(*w));
        Ok(VertexSet::singleton(*w))
    }
}

/// A dominating set of size at most n/2 for connected G with n >= 2: the
/// smaller parity class of BFS levels from vertex 1.
pub fn parity_dominating_set(g: &Graph) -> Result<VertexSet> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::InvalidInput(
            "parity dominating set needs a connected graph with n >= 2".into(),
        ));
    }
    let mut level = vec![usize::MAX; g.n()];
    level[0] = 0;
    let mut queue = VecDeque::from([1usize]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if level[w - 1] == usize::MAX {
                level[w - 1] = level[u - 1] + 1;
                queue.push_back(w);
            }
        }
    }
    let even: VertexSet = g.vertices().filter(|&v| level[v - 1] % 2 == 0).collect();
    let odd = g.all_vertices().difference(&even);
    Ok(if odd.len() < even.len() { odd } else { even })
}

/// An F_{0,k} ∪ F_{1,k}-isolating set of size at most ⌊n/(k+1)⌋ for a
/// connected graph G with (G, k) not special.
pub fn construct_isolating_set(g: &Graph, k: usize) -> Result<BoundResult> {
    construct_with(g, k, &SolverOptions::default())
}

/// As [`construct_isolating_set`], with explicit solver options for the
/// k <= 2 fallback and the node budget.
pub fn construct_with(g: &Graph, k: usize, opts: &SolverOptions) -> Result<BoundResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput("graph is not connected".into()));
    }
    let verdict = is_special_pair(g, k);
    if verdict.special {
        return Err(Error::InvalidInput(format!(
            "(G, {k}) is a special pair ({:?})",
            verdict.reason
        )));
    }
    let n = g.n();
    let bound = n / (k + 1);
    let labels: Vec<usize> = g.vertices().collect();

    if k <= 2 {
        let (set, case) = if n <= opts.guard {
            (
                iota_exact(g, &FamilySpec::f01(k), opts)?.set,
                CaseTag::ExactFallback,
            )
        } else if k == 1 {
            (parity_dominating_set(g)?, CaseTag::ParityFallback)
        } else {
            return Err(Error::Guard {
                context: "k = 2 fallback (exact solver)",
                n,
                guard: opts.guard,
            });
        };
        let mut trace = TraceNode::new(case, &labels, bound);
        trace.set = set.clone();
        return Ok(BoundResult {
            size: set.len(),
            set,
            bound,
            trace,
        });
    }

    let mut builder = Builder {
        k,
        spec: FamilySpec::f01(k),
        budget: Budget::new(opts.budget),
    };
    let (set, trace) = builder.build(g, &labels)?;
    Ok(BoundResult {
        size: set.len(),
        set,
        bound,
        trace,
    })
}

/// The F_{0,k} ∪ F_{1,k} construction reused for F_{i,k}, checked against
/// F_{i,k} directly. A residual with no k-star and no (k-1)-regular
/// subgraph has χ <= k - 1 on every component, so the set carries over.
pub fn construct_for_family(g: &Graph, i: usize, k: usize) -> Result<BoundResult> {
    let spec = FamilySpec::indexed(i, k)?;
    let result = construct_isolating_set(g, k)?;
    let mut budget = Budget::default();
    if !is_isolating_set(g, &spec, &result.set, &mut budget)?.is_isolating() {
        return Err(Error::InternalInconsistency {
            message: format!("set {} is not {spec}-isolating", result.set),
            trace: serde_json::to_string(&result.trace).unwrap_or_default(),
        });
    }
    Ok(result)
}
