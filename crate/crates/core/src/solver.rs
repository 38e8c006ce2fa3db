//! Exact minimum F-isolating sets by exhaustive search.
//!
//! Sizes t = 0, 1, 2, ... are tried in turn; at each size the t-subsets of
//! the candidate vertices are visited in lexicographic order and the first
//! isolating one is returned. The answer is therefore the lexicographically
//! least isolating set of minimum size.

use serde::Serialize;

use crate::budget::Budget;
use crate::detectors::{contains_family, FamilySpec, Witness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default limit on the order of graphs handed to the exact solver.
pub const SOLVER_GUARD: usize = 26;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Every vertex is a candidate.
    #[default]
    Exact,
    /// Candidates restricted to vertices whose closed neighbourhood is
    /// maximal under inclusion. If N[u] ⊆ N[w], swapping u for w in an
    /// isolating set keeps it isolating, so the minimum is unchanged.
    Dominance,
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub guard: usize,
    pub budget: u64,
    pub mode: SearchMode,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            guard: SOLVER_GUARD,
            budget: Budget::DEFAULT_LIMIT,
            mode: SearchMode::Exact,
        }
    }
}

/// Outcome of testing one candidate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Isolating,
    /// A forbidden graph left in G − N[D], in the labels of G.
    Residual(Witness),
}

impl Verdict {
    pub fn is_isolating(&self) -> bool {
        matches!(self, Verdict::Isolating)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsolationCertificate {
    pub graph6: String,
    pub family: FamilySpec,
    pub set: VertexSet,
    pub size: usize,
    /// No smaller set is isolating (every smaller size was exhausted).
    pub optimal: bool,
    pub search_budget_used: u64,
    pub residual_witness: Option<Witness>,
}

/// Decides whether `d` is `spec`-isolating in `g`.
pub fn is_isolating_set(
    g: &Graph,
    spec: &FamilySpec,
    d: &VertexSet,
    budget: &mut Budget,
) -> Result<Verdict> {
    let rest = g.delete_closed_neighborhood(d)?;
    Ok(match contains_family(&rest.graph, spec, budget)? {
        None => Verdict::Isolating,
        Some(w) => Verdict::Residual(w.to_parent(&rest)),
    })
}

/// Vertices whose closed neighbourhood is not strictly contained in
/// another's; among equal neighbourhoods only the least label is kept.
pub fn dominance_candidates(g: &Graph) -> Vec<usize> {
    let closed: Vec<VertexSet> = g
        .vertices()
        .map(|v| g.closed_neighborhood(&VertexSet::singleton(v)).unwrap())
        .collect();
    g.vertices()
        .filter(|&u| {
            !g.vertices().any(|w| {
                w != u
                    && closed[u - 1].is_subset(&closed[w - 1])
                    && (closed[u - 1] != closed[w - 1] || w < u)
            })
        })
        .collect()
}

fn next_combination(idx: &mut [usize], pool: usize) -> bool {
    let t = idx.len();
    for i in (0..t).rev() {
        if idx[i] < pool - t + i {
            idx[i] += 1;
            for j in i + 1..t {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// ι(G, F) with a minimum isolating set.
pub fn iota_exact(
    g: &Graph,
    spec: &FamilySpec,
    opts: &SolverOptions,
) -> Result<IsolationCertificate> {
    if g.n() > opts.guard {
        return Err(Error::Guard {
            context: "exact solver",
            n: g.n(),
            guard: opts.guard,
        });
    }
    let spec = spec.normalize()?;
    let mut budget = Budget::new(opts.budget);
    let candidates: Vec<usize> = match opts.mode {
        SearchMode::Exact => g.vertices().collect(),
        SearchMode::Dominance => dominance_candidates(g),
    };
    let finish = |set: VertexSet, budget: &Budget| IsolationCertificate {
        graph6: g.to_graph6(),
        family: spec.clone(),
        size: set.len(),
        set,
        optimal: true,
        search_budget_used: budget.used(),
        residual_witness: None,
    };
    for t in 0..=candidates.len() {
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            let set: VertexSet = idx.iter().map(|&i| candidates[i]).collect();
            if is_isolating_set(g, &spec, &set, &mut budget)?.is_isolating() {
                return Ok(finish(set, &budget));
            }
            if !next_combination(&mut idx, candidates.len()) {
                break;
            }
        }
    }
    // V(G) is always isolating; only reachable if candidates were empty
    // while G still holds a forbidden graph, which cannot happen for n >= 1.
    Err(Error::InternalInconsistency {
        message: "no isolating set found among candidates".into(),
        trace: g.to_graph6(),
    })
}

/// Convenience wrapper returning only ι(G, F).
pub fn iota(g: &Graph, spec: &FamilySpec) -> Result<usize> {
    iota_exact(g, spec, &SolverOptions::default()).map(|c| c.size)
}

/// Checks one given set, reporting the residual witness when it fails.
pub fn check_set(
    g: &Graph,
    spec: &FamilySpec,
    d: &VertexSet,
    opts: &SolverOptions,
) -> Result<IsolationCertificate> {
    let spec = spec.normalize()?;
    let mut budget = Budget::new(opts.budget);
    let verdict = is_isolating_set(g, &spec, d, &mut budget)?;
    Ok(IsolationCertificate {
        graph6: g.to_graph6(),
        family: spec,
        set: d.clone(),
        size: d.len(),
        optimal: false,
        search_budget_used: budget.used(),
        residual_witness: match verdict {
            Verdict::Isolating => None,
            Verdict::Residual(w) => Some(w),
        },
    })
}

/// γ(G) = ι(G, K_1).
pub fn domination_number(g: &Graph) -> Result<usize> {
    iota(g, &FamilySpec::SingleVertex)
}
