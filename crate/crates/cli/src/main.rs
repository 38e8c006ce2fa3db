use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use isolation::bound::{construct_for_family, construct_with};
use isolation::generators::{
    construction_b, construction_bnck, construction_bnck_prime, construction_gadget, enumerate_all,
    enumerate_connected,
};
use isolation::harness::{
    read_graph, report_write, survey, verify_claim, write_text, CampaignParams, ClaimId, Config,
    ReportFormat,
};
use isolation::solver::{check_set, iota_exact, SearchMode, SolverOptions};
use isolation::{FamilySpec, VertexSet};

#[derive(Parser)]
#[command(name = "isowb", version, about = "F-isolation number workbench")]
struct Cli {
    /// key = value file setting guard, budget, n_min, n_max, eq_n_max, seed,
    /// samples, timing. Flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    #[value(name = "B")]
    B,
    #[value(name = "Ck")]
    Ck,
    #[value(name = "BnCk")]
    BnCk,
    #[value(name = "BnCk-prime")]
    BnCkPrime,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundFamily {
    F0,
    F1,
    F2,
    F3,
    F01,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Dominance,
}

#[derive(Subcommand)]
enum Command {
    /// Print every graph of order n, one graph6 per line.
    Enum {
        #[arg(long)]
        n: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
    },
    /// Build a named construction; prints JSON with graph6 and role map.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Exact minimum isolating set, or check a given set with --set.
    Solve {
        /// graph6 string or file containing one
        #[arg(long)]
        graph: String,
        #[arg(long)]
        family: FamilySpec,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Comma-separated vertices to check instead of solving.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        #[arg(long)]
        guard: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Constructive isolating set of size at most floor(n/(k+1)).
    Bound {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "f01", ignore_case = true)]
        family: BoundFamily,
        /// Also write the recursion trace to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check a claim over its graph range and write a report.
    Verify {
        #[arg(long)]
        claim: ClaimId,
        #[arg(long)]
        nmin: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Orders of constructed families go up to this value.
        #[arg(long)]
        eq_nmax: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
        /// Explicit orders for constructed families.
        #[arg(long = "n", value_delimiter = ',')]
        ns: Option<Vec<usize>>,
        /// Family indices i for T5.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<usize>>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        guard: Option<usize>,
        /// Record per-row runtimes (reports are then no longer reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: PathBuf,
        /// csv or json; by default taken from the extension of --out.
        #[arg(long)]
        format: Option<ReportFormat>,
    },
    /// Largest ι(G, F)/n over connected graphs of each order.
    Survey {
        #[arg(long)]
        family: FamilySpec,
        /// Single order; use --nmin/--nmax for a range.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        nmin: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        format: Option<ReportFormat>,
    },
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let mut solver = SolverOptions::default();
    if let Some(g) = config.guard {
        solver.guard = g;
    }
    if let Some(b) = config.budget {
        solver.budget = b;
    }

    match cli.command {
        Command::Enum { n, all } => {
            let graphs = if all {
                enumerate_all(n)?
            } else {
                enumerate_connected(n)?
            };
            let mut out = std::io::stdout().lock();
            for g in graphs {
                writeln!(out, "{}", g.to_graph6())?;
            }
        }
        Command::Gen { family, n, k } => {
            let need_n = || n.context("--n is required for this family");
            let c = match family {
                GenFamily::B => construction_b(need_n()?, k)?,
                GenFamily::Ck => construction_gadget(k)?,
                GenFamily::BnCk => construction_bnck(need_n()?, k)?,
                GenFamily::BnCkPrime => construction_bnck_prime(need_n()?, k)?,
            };
            print_json(&json!({
                "graph6": c.graph.to_graph6(),
                "n": c.graph.n(),
                "params": c.params,
                "roles": c.roles,
            }))?;
        }
        Command::Solve {
            graph,
            family,
            mode,
            set,
            guard,
            budget,
        } => {
            let g = read_graph(&graph)?;
            let opts = SolverOptions {
                guard: guard.unwrap_or(solver.guard),
                budget: budget.unwrap_or(solver.budget),
                mode: match mode {
                    Mode::Exact => SearchMode::Exact,
                    Mode::Dominance => SearchMode::Dominance,
                },
            };
            let cert = match set {
                Some(vs) => {
                    let d: VertexSet = vs.into();
                    d.validate(g.n())?;
                    check_set(&g, &family, &d, &opts)?
                }
                None => iota_exact(&g, &family, &opts)?,
            };
            print_json(&cert)?;
        }
        Command::Bound {
            graph,
            k,
            family,
            trace,
        } => {
            let g = read_graph(&graph)?;
            let result = match family {
                BoundFamily::F01 => construct_with(&g, k, &solver)?,
                BoundFamily::F0 => construct_for_family(&g, 0, k)?,
                BoundFamily::F1 => construct_for_family(&g, 1, k)?,
                BoundFamily::F2 => construct_for_family(&g, 2, k)?,
                BoundFamily::F3 => construct_for_family(&g, 3, k)?,
            };
            if let Some(path) = trace {
                write_text(
                    &path,
                    &(serde_json::to_string_pretty(&result.trace)? + "\n"),
                )?;
            }
            print_json(&result)?;
        }
        Command::Verify {
            claim,
            nmin,
            nmax,
            eq_nmax,
            k,
            ns,
            families,
            samples,
            seed,
            budget,
            guard,
            timing,
            out,
            format,
        } => {
            let mut p: CampaignParams = claim.default_params();
            config.apply(&mut p);
            p.n_min = nmin.unwrap_or(p.n_min);
            p.n_max = nmax.unwrap_or(p.n_max);
            p.eq_n_max = eq_nmax.unwrap_or(p.eq_n_max);
            p.ks = k.unwrap_or(p.ks);
            p.ns = ns.unwrap_or(p.ns);
            p.families = families.unwrap_or(p.families);
            p.samples = samples.unwrap_or(p.samples);
            p.seed = seed.unwrap_or(p.seed);
            p.budget = budget.unwrap_or(p.budget);
            p.guard = guard.unwrap_or(p.guard);
            p.timing |= timing;

            let records = verify_claim(claim, &p)?;
            let format = format.unwrap_or_else(|| ReportFormat::from_path(&out));
            report_write(&records, format, &out)?;
            let failed = records.iter().filter(|r| !r.holds).count();
            let special = records.iter().filter(|r| r.special).count();
            eprintln!(
                "{claim}: {} rows, {failed} failed, {special} special; report in {}",
                records.len(),
                out.display()
            );
            if failed > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Survey {
            family,
            n,
            nmin,
            nmax,
            budget,
            out,
            format,
        } => {
            let orders: Vec<usize> = match (n, nmin, nmax) {
                (Some(n), None, None) => vec![n],
                (None, lo, Some(hi)) => (lo.unwrap_or(1)..=hi).collect(),
                _ => bail!("give either --n or --nmax (with optional --nmin)"),
            };
            let opts = SolverOptions {
                budget: budget.unwrap_or(solver.budget),
                ..solver
            };
            let rows = survey(&family, orders, &opts)?;
            let format = format.unwrap_or_else(|| ReportFormat::from_path(&out));
            report_write(&rows, format, &out)?;
            for r in &rows {
                eprintln!(
                    "{} n={}: max ι = {}, ratio {}/{}",
                    r.family,
                    r.n,
                    r.max_iota,
                    r.ratio.numer(),
                    r.ratio.denom()
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
