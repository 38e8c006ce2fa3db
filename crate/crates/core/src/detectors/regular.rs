//! Exact search for a (not necessarily induced) d-regular subgraph.
//!
//! For each start vertex s the search looks for a d-regular subgraph whose
//! least vertex is s, using only vertices >= s that survive in the d-core.
//! Vertices enter the subgraph as endpoints of chosen edges. The search
//! repeatedly takes the most constrained unsaturated member, picks exactly
//! its missing number of edges among those still available, and marks it
//! finished. Any member whose deficit exceeds its available edges prunes
//! the branch.

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

use super::witness::{Witness, WitnessKind};

struct Search<'a> {
    g: &'a Graph,
    d: usize,
    allowed: Vec<bool>,
    member: Vec<bool>,
    done: Vec<bool>,
    deg: Vec<usize>,
    chosen: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn is_chosen(&self, a: usize, b: usize) -> bool {
        self.chosen
            .iter()
            .any(|&(x, y)| (x == a && y == b) || (x == b && y == a))
    }

    fn available(&self, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| {
                self.allowed[w - 1]
                    && !self.done[w - 1]
                    && self.deg[w - 1] < self.d
                    && !self.is_chosen(v, w)
            })
            .collect()
    }

    /// The open member with the least slack, or `Err(())` if some member
    /// cannot be completed.
    fn next_vertex(&self) -> std::result::Result<Option<(usize, Vec<usize>)>, ()> {
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        for v in self.g.vertices() {
            if !self.member[v - 1] || self.done[v - 1] {
                continue;
            }
            let avail = self.available(v);
            let need = self.d - self.deg[v - 1];
            if avail.len() < need {
                return Err(());
            }
            let slack = avail.len() - need;
            if best.as_ref().is_none_or(|(s, _, _)| slack < *s) {
                best = Some((slack, v, avail));
            }
        }
        Ok(best.map(|(_, v, avail)| (v, avail)))
    }

    fn run(&mut self, budget: &mut Budget) -> Result<bool> {
        budget.tick("regular subgraph search")?;
        let (v, avail) = match self.next_vertex() {
            Err(()) => return Ok(false),
            Ok(None) => return Ok(true),
            Ok(Some(x)) => x,
        };
        let need = self.d - self.deg[v - 1];
        self.done[v - 1] = true;
        let mut pick = Vec::with_capacity(need);
        if self.choose(v, &avail, 0, need, &mut pick, budget)? {
            return Ok(true);
        }
        self.done[v - 1] = false;
        Ok(false)
    }

    fn choose(
        &mut self,
        v: usize,
        avail: &[usize],
        from: usize,
        need: usize,
        pick: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if pick.len() == need {
            let saved: Vec<bool> = pick.iter().map(|&w| self.member[w - 1]).collect();
            for &w in pick.iter() {
                self.chosen.push((v, w));
                self.deg[v - 1] += 1;
                self.deg[w - 1] += 1;
                self.member[w - 1] = true;
            }
            if self.run(budget)? {
                return Ok(true);
            }
            for (&w, &was) in pick.iter().zip(&saved) {
                self.chosen.pop();
                self.deg[v - 1] -= 1;
                self.deg[w - 1] -= 1;
                self.member[w - 1] = was;
            }
            return Ok(false);
        }
        if avail.len() - from < need - pick.len() {
            return Ok(false);
        }
        for i in from..avail.len() {
            pick.push(avail[i]);
            let found = self.choose(v, avail, i + 1, need, pick, budget)?;
            pick.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Vertices of the d-core of G restricted to `allowed`.
fn core(g: &Graph, d: usize, allowed: &mut [bool]) {
    loop {
        let mut changed = false;
        for v in g.vertices() {
            if allowed[v - 1] {
                let deg = g.neighbors(v).iter().filter(|&&w| allowed[w - 1]).count();
                if deg < d {
                    allowed[v - 1] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// A d-regular subgraph of `g` with at least one vertex, for `d >= 1`.
pub fn find_regular_subgraph(g: &Graph, d: usize, budget: &mut Budget) -> Result<Option<Witness>> {
    debug_assert!(d >= 1);
    for s in g.vertices() {
        let mut allowed: Vec<bool> = g.vertices().map(|v| v >= s).collect();
        core(g, d, &mut allowed);
        if !allowed[s - 1] {
            continue;
        }
        let mut search = Search {
            g,
            d,
            allowed,
            member: vec![false; g.n()],
            done: vec![false; g.n()],
            deg: vec![0; g.n()],
            chosen: Vec::new(),
        };
        search.member[s - 1] = true;
        if search.run(budget)? {
            let vertices: VertexSet = g.vertices().filter(|&v| search.member[v - 1]).collect();
            return Ok(Some(Witness::new(
                WitnessKind::Regular { degree: d },
                vertices,
                search.chosen,
            )));
        }
    }
    Ok(None)
}
