use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bound::{construct_with, is_special_pair};
use crate::budget::Budget;
use crate::detectors::{chromatic_number, FamilySpec};
use crate::error::{Error, Result};
use crate::generators::{
    construction_b, construction_bnck, construction_bnck_prime, enumerate_all, enumerate_connected,
    gadget_c,
};
use crate::graph::{Graph, VertexSet};
use crate::solver::{iota_exact, SolverOptions, SOLVER_GUARD};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    T1,
    T2,
    T3,
    T4,
    /// T4 through the constructive algorithm rather than the solver.
    T4C,
    T5,
    L5,
    L6,
    L7,
    L9,
    ECkStar,
    ECkCycle,
    Brooks,
    P8,
    P10,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::T1,
        ClaimId::T2,
        ClaimId::T3,
        ClaimId::T4,
        ClaimId::T4C,
        ClaimId::T5,
        ClaimId::L5,
        ClaimId::L6,
        ClaimId::L7,
        ClaimId::L9,
        ClaimId::ECkStar,
        ClaimId::ECkCycle,
        ClaimId::Brooks,
        ClaimId::P8,
        ClaimId::P10,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::T1 => "T1",
            ClaimId::T2 => "T2",
            ClaimId::T3 => "T3",
            ClaimId::T4 => "T4",
            ClaimId::T4C => "T4C",
            ClaimId::T5 => "T5",
            ClaimId::L5 => "L5",
            ClaimId::L6 => "L6",
            ClaimId::L7 => "L7",
            ClaimId::L9 => "L9",
            ClaimId::ECkStar => "E-Ck-star",
            ClaimId::ECkCycle => "E-Ck-cycle",
            ClaimId::Brooks => "Brooks",
            ClaimId::P8 => "P8",
            ClaimId::P10 => "P10",
        }
    }

    /// Parameters used when the caller does not override them.
    pub fn default_params(self) -> CampaignParams {
        let base = CampaignParams::default();
        match self {
            ClaimId::T1 => CampaignParams {
                ks: vec![1, 2, 3, 4],
                ..base
            },
            ClaimId::T2 | ClaimId::Brooks => base,
            ClaimId::T3 => CampaignParams {
                n_max: 6,
                ks: vec![1, 2, 3, 4],
                ..base
            },
            ClaimId::T4 | ClaimId::T4C | ClaimId::T5 => base,
            ClaimId::L5 | ClaimId::L6 => CampaignParams {
                samples: if self == ClaimId::L5 { 500 } else { 200 },
                ..base
            },
            ClaimId::L7 => CampaignParams {
                ks: vec![2, 3],
                eq_n_max: 18,
                ..base
            },
            ClaimId::L9 => CampaignParams {
                ks: vec![4],
                ns: vec![11, 12, 13, 22],
                ..base
            },
            ClaimId::ECkStar => CampaignParams {
                ks: vec![2, 3, 4, 5, 6],
                ..base
            },
            ClaimId::ECkCycle => CampaignParams {
                ks: vec![4, 5],
                ..base
            },
            ClaimId::P8 => CampaignParams {
                ks: vec![2, 3],
                eq_n_max: 21,
                ..base
            },
            ClaimId::P10 => CampaignParams {
                ks: vec![5],
                eq_n_max: 22,
                ..base
            },
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// value <= bound, unless the row is special
    Le,
    /// value == bound
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "le",
            Relation::Eq => "eq",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub claim: ClaimId,
    pub relation: Relation,
    pub graph6: String,
    pub n: usize,
    pub k: Option<usize>,
    pub family: String,
    /// ι, a constructed set size, or χ for Brooks rows. None on error or
    /// when a special row is skipped.
    pub value: Option<usize>,
    pub bound: Option<usize>,
    pub holds: bool,
    pub special: bool,
    /// Only filled when timing is requested, so default reports are
    /// reproducible byte for byte.
    pub runtime_ms: Option<u64>,
    pub error: Option<String>,
}

impl VerificationRecord {
    fn sort_key(&self) -> impl Ord + '_ {
        (
            self.claim,
            self.n,
            self.k,
            &self.graph6,
            &self.family,
            self.relation,
            self.value,
            self.bound,
        )
    }

    /// True when the value exceeds the bound (le rows) or misses it (eq rows),
    /// regardless of whether the row is special.
    pub fn violates(&self) -> bool {
        match (self.value, self.bound) {
            (Some(v), Some(b)) => match self.relation {
                Relation::Le => v > b,
                Relation::Eq => v != b,
            },
            _ => false,
        }
    }
}

/// Deterministic report order: claim, n, k, graph6, family.
pub fn sort_records(records: &mut [VerificationRecord]) {
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignParams {
    /// Order range for claims checked over every enumerated graph.
    pub n_min: usize,
    pub n_max: usize,
    pub ks: Vec<usize>,
    /// Family indices i for T5.
    pub families: Vec<usize>,
    /// Explicit orders for constructed families; when empty the orders run
    /// up to `eq_n_max`.
    pub ns: Vec<usize>,
    pub eq_n_max: usize,
    /// Random instances for L5 and L6.
    pub samples: usize,
    pub seed: u64,
    pub budget: u64,
    pub guard: usize,
    pub timing: bool,
}

impl Default for CampaignParams {
    fn default() -> Self {
        CampaignParams {
            n_min: 1,
            n_max: 7,
            ks: vec![3, 4, 5],
            families: vec![0, 1, 2, 3],
            ns: Vec::new(),
            eq_n_max: 12,
            samples: 0,
            seed: 1,
            budget: Budget::DEFAULT_LIMIT,
            guard: SOLVER_GUARD,
            timing: false,
        }
    }
}

impl CampaignParams {
    fn solver(&self) -> SolverOptions {
        SolverOptions {
            guard: self.guard,
            budget: self.budget,
            ..SolverOptions::default()
        }
    }

    fn orders(&self, lo: usize) -> Vec<usize> {
        if self.ns.is_empty() {
            (lo..=self.eq_n_max).collect()
        } else {
            self.ns.iter().copied().filter(|&n| n >= lo).collect()
        }
    }

    fn connected(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for n in self.n_min.max(1)..=self.n_max {
            out.extend(enumerate_connected(n)?);
        }
        Ok(out)
    }

    fn all_graphs(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for n in self.n_min.max(1)..=self.n_max {
            out.extend(enumerate_all(n)?);
        }
        Ok(out)
    }
}

type Outcome = Result<(Option<usize>, usize)>;
type Job = Box<dyn FnOnce() -> VerificationRecord + Send>;

struct Row {
    claim: ClaimId,
    relation: Relation,
    graph: Graph,
    k: Option<usize>,
    family: String,
    special: bool,
}

impl Row {
    fn job<F>(self, timing: bool, f: F) -> Job
    where
        F: FnOnce(&Graph) -> Outcome + Send + 'static,
    {
        Box::new(move || {
            let start = Instant::now();
            let outcome = f(&self.graph);
            let runtime_ms = timing.then(|| start.elapsed().as_millis() as u64);
            let (value, bound, holds, error) = match outcome {
                Ok((value, bound)) => {
                    let holds = match (self.relation, value) {
                        (Relation::Le, Some(v)) => self.special || v <= bound,
                        (Relation::Eq, Some(v)) => v == bound,
                        (_, None) => self.special,
                    };
                    (value, Some(bound), holds, None)
                }
                Err(e) => (None, None, false, Some(e.to_string())),
            };
            VerificationRecord {
                claim: self.claim,
                relation: self.relation,
                graph6: self.graph.to_graph6(),
                n: self.graph.n(),
                k: self.k,
                family: self.family,
                value,
                bound,
                holds,
                special: self.special,
                runtime_ms,
                error,
            }
        })
    }
}

fn iota_job(row: Row, spec: FamilySpec, bound: usize, p: &CampaignParams) -> Job {
    let opts = p.solver();
    row.job(p.timing, move |g| {
        Ok((Some(iota_exact(g, &spec, &opts)?.size), bound))
    })
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, connected: bool) -> Graph {
    let mut edges = Vec::new();
    for v in 2..=n {
        if connected {
            edges.push((rng.gen_range(1..v), v));
        }
        for u in 1..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("labels in range")
}

fn sample_family(i: usize) -> FamilySpec {
    match i % 3 {
        0 => FamilySpec::f01(3),
        1 => FamilySpec::Star(2),
        _ => FamilySpec::AllCycles,
    }
}

fn require(ok: bool, claim: ClaimId, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{claim}: {what}")))
    }
}

fn jobs(claim: ClaimId, p: &CampaignParams) -> Result<Vec<Job>> {
    let mut out: Vec<Job> = Vec::new();
    let row = |relation, graph: Graph, k, family: &FamilySpec, special| Row {
        claim,
        relation,
        graph,
        k,
        family: family.to_string(),
        special,
    };
    let opts = p.solver();
    match claim {
        ClaimId::T1 | ClaimId::T4 | ClaimId::T5 => {
            require(p.ks.iter().all(|&k| k >= 1), claim, "k must be >= 1")?;
            let specs = |k: usize| -> Result<Vec<(usize, FamilySpec)>> {
                Ok(match claim {
                    ClaimId::T1 => vec![(1, FamilySpec::Clique(k))],
                    ClaimId::T4 => vec![(1, FamilySpec::f01(k))],
                    _ => p
                        .families
                        .iter()
                        .map(|&i| Ok((i, FamilySpec::indexed(i, k)?.normalize()?)))
                        .collect::<Result<_>>()?,
                })
            };
            for g in p.connected()? {
                for &k in &p.ks {
                    let special = is_special_pair(&g, k).special;
                    let bound = g.n() / (k + 1);
                    for (_, spec) in specs(k)? {
                        out.push(iota_job(
                            row(Relation::Le, g.clone(), Some(k), &spec, special),
                            spec,
                            bound,
                            p,
                        ));
                    }
                }
            }
            for &k in &p.ks {
                for n in p.orders(k + 1) {
                    let b = construction_b(n, k)?.graph;
                    for (i, spec) in specs(k)? {
                        // F_{0,k} is not tight on B_{n,k}
                        if claim == ClaimId::T5 && i == 0 {
                            continue;
                        }
                        out.push(iota_job(
                            row(Relation::Eq, b.clone(), Some(k), &spec, false),
                            spec,
                            n / (k + 1),
                            p,
                        ));
                    }
                }
            }
        }
        ClaimId::T2 => {
            let spec = FamilySpec::AllCycles;
            for g in p.connected()? {
                let special = g.n() == 3 && g.is_complete();
                let bound = g.n() / 4;
                out.push(iota_job(
                    row(Relation::Le, g, None, &spec, special),
                    spec.clone(),
                    bound,
                    p,
                ));
            }
            for n in p.orders(4) {
                let b = construction_b(n, 3)?.graph;
                out.push(iota_job(
                    row(Relation::Eq, b, Some(3), &spec, false),
                    spec.clone(),
                    n / 4,
                    p,
                ));
            }
        }
        ClaimId::T3 => {
            require(p.ks.iter().all(|&k| k >= 1), claim, "k must be >= 1")?;
            for g in p.all_graphs()? {
                for &k in &p.ks {
                    let spec = FamilySpec::Star(k);
                    let bound = g.n() / (k + 1);
                    out.push(iota_job(
                        row(Relation::Le, g.clone(), Some(k), &spec, false),
                        spec,
                        bound,
                        p,
                    ));
                }
            }
        }
        ClaimId::T4C => {
            require(p.ks.iter().all(|&k| k >= 1), claim, "k must be >= 1")?;
            let construct = |r: Row, k: usize, bound: usize| {
                let opts = opts.clone();
                let special = r.special;
                r.job(p.timing, move |g| {
                    if special {
                        return Ok((None, bound));
                    }
                    Ok((Some(construct_with(g, k, &opts)?.size), bound))
                })
            };
            for g in p.connected()? {
                for &k in &p.ks {
                    let special = is_special_pair(&g, k).special;
                    let bound = g.n() / (k + 1);
                    let r = row(
                        Relation::Le,
                        g.clone(),
                        Some(k),
                        &FamilySpec::f01(k),
                        special,
                    );
                    out.push(construct(r, k, bound));
                }
            }
            for &k in &p.ks {
                for n in p.orders(k + 1) {
                    let b = construction_b(n, k)?.graph;
                    let r = row(Relation::Eq, b, Some(k), &FamilySpec::f01(k), false);
                    out.push(construct(r, k, n / (k + 1)));
                }
            }
        }
        ClaimId::L5 => {
            for i in 0..p.samples {
                let mut rng = ChaCha8Rng::seed_from_u64(p.seed.wrapping_add(i as u64));
                let n = rng.gen_range(2..=10);
                let g = random_graph(&mut rng, n, 0.35, true);
                let x: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.3)).collect();
                let y: VertexSet = g
                    .closed_neighborhood(&x)?
                    .iter()
                    .filter(|_| rng.gen_bool(0.5))
                    .collect();
                let spec = sample_family(i);
                let opts = opts.clone();
                let r = row(Relation::Le, g, None, &spec, false);
                out.push(r.job(p.timing, move |g| {
                    let whole = iota_exact(g, &spec, &opts)?.size;
                    let rest = g.delete_vertices(&y)?;
                    let part = iota_exact(&rest.graph, &spec, &opts)?.size;
                    Ok((Some(whole), x.len() + part))
                }));
            }
        }
        ClaimId::L6 => {
            for i in 0..p.samples {
                let mut rng = ChaCha8Rng::seed_from_u64(p.seed.wrapping_add(i as u64));
                let count = rng.gen_range(2..=3);
                let parts: Vec<Graph> = (0..count)
                    .map(|_| {
                        let n = rng.gen_range(1..=5);
                        random_graph(&mut rng, n, 0.5, false)
                    })
                    .collect();
                let union = parts
                    .iter()
                    .fold(Graph::empty(0), |acc, h| acc.disjoint_union(h));
                let spec = sample_family(i);
                let opts = opts.clone();
                let r = row(Relation::Eq, union, None, &spec, false);
                out.push(r.job(p.timing, move |g| {
                    let whole = iota_exact(g, &spec, &opts)?.size;
                    let mut sum = 0;
                    for h in &parts {
                        sum += iota_exact(h, &spec, &opts)?.size;
                    }
                    Ok((Some(whole), sum))
                }));
            }
        }
        ClaimId::L7 | ClaimId::L9 => {
            let min_k = if claim == ClaimId::L7 { 2 } else { 4 };
            require(
                p.ks.iter().all(|&k| k >= min_k),
                claim,
                &format!("k must be >= {min_k}"),
            )?;
            for &k in &p.ks {
                let spec = if claim == ClaimId::L7 {
                    FamilySpec::Star(k)
                } else {
                    FamilySpec::CycleLen(k + 1)
                };
                for n in p.orders(2 * k + 3) {
                    let g = if claim == ClaimId::L7 {
                        construction_bnck(n, k)?.graph
                    } else {
                        construction_bnck_prime(n, k)?.graph
                    };
                    let bound = 2 * n / (2 * k + 3);
                    out.push(iota_job(
                        row(Relation::Eq, g, Some(k), &spec, false),
                        spec.clone(),
                        bound,
                        p,
                    ));
                }
            }
        }
        ClaimId::ECkStar | ClaimId::ECkCycle => {
            let min_k = if claim == ClaimId::ECkStar { 2 } else { 4 };
            require(
                p.ks.iter().all(|&k| k >= min_k),
                claim,
                &format!("k must be >= {min_k}"),
            )?;
            for &k in &p.ks {
                let spec = if claim == ClaimId::ECkStar {
                    FamilySpec::Star(k)
                } else {
                    FamilySpec::CycleLen(k + 1)
                };
                let g = gadget_c(k)?;
                out.push(iota_job(
                    row(Relation::Eq, g, Some(k), &spec, false),
                    spec,
                    2,
                    p,
                ));
            }
        }
        ClaimId::Brooks => {
            for g in p.connected()? {
                let n = g.n();
                let special = g.is_complete() || (n % 2 == 1 && g.is_regular() == Some(2));
                let budget = p.budget;
                let r = Row {
                    claim,
                    relation: Relation::Le,
                    graph: g,
                    k: None,
                    family: "chromatic".into(),
                    special,
                };
                out.push(r.job(p.timing, move |g| {
                    let chi = chromatic_number(g, &mut Budget::new(budget))?;
                    Ok((Some(chi), g.max_degree()))
                }));
            }
        }
        ClaimId::P8 | ClaimId::P10 => {
            let min_k = if claim == ClaimId::P8 { 2 } else { 5 };
            require(
                p.ks.iter().all(|&k| k >= min_k),
                claim,
                &format!("k must be >= {min_k}"),
            )?;
            for &k in &p.ks {
                let period = if claim == ClaimId::P8 {
                    2 * k + 3
                } else {
                    2 * k + 1
                };
                for n in p.orders(period).into_iter().filter(|n| n % period == 0) {
                    let (g, spec) = if claim == ClaimId::P8 {
                        (construction_bnck(n, k)?.graph, FamilySpec::Star(k))
                    } else {
                        (
                            construction_bnck_prime(n, k - 1)?.graph,
                            FamilySpec::CycleLen(k),
                        )
                    };
                    let bound = 2 * (n / period);
                    out.push(iota_job(
                        row(Relation::Eq, g, Some(k), &spec, false),
                        spec,
                        bound,
                        p,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Runs one claim campaign. Rows are computed in parallel and returned in
/// deterministic order. Per-row failures (budget, guard) become rows with
/// `holds = false` and an error message; only malformed parameters fail
/// the whole campaign.
pub fn verify_claim(claim: ClaimId, params: &CampaignParams) -> Result<Vec<VerificationRecord>> {
    let work = jobs(claim, params)?;
    let mut records: Vec<VerificationRecord> = work.into_par_iter().map(|job| job()).collect();
    sort_records(&mut records);
    Ok(records)
}
