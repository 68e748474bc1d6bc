use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use clutter_cli::{
    parse_clutter, parse_semi_matching, semi_matching_line, serialize_clutter,
    serialize_semi_matching, CommandOracle,
};
use clutter_core::blocker::DEFAULT_BLOCKER_BUDGET;
use clutter_core::bounds::{bound_report, BoundReport};
use clutter_core::generate::{kk2, random, staircase};
use clutter_core::laws::check_algebraic_laws;
use clutter_core::matching::{
    count_semi_matchings, enumerate_semi_matchings_with_budget, extract_minor_matching,
    find_kk2_minor_with_budget, DEFAULT_ENUMERATION_BUDGET, DEFAULT_MINOR_BUDGET,
};
use clutter_core::reductions::{
    solve_sat, solve_setcover, spot_check_monotone, CnfFormula, Objective, SetCoverInstance,
};
use clutter_core::{
    blocker_with_budget, class_membership, maximal_independent_sets_with_budget, verify_bound,
    BoundParams, Clutter, Error,
};
use serde_json::json;

/// Exact computations on clutters (Sperner families).
///
/// Clutters are read in `.clt` format from FILE, or from stdin when FILE
/// is omitted.
#[derive(Parser)]
#[command(name = "clutter", version)]
struct Cli {
    /// Seed for commands that sample.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Work limit for the exponential searches (blocker, indep, minor,
    /// semimatchings). Each uses its own default when omitted.
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Machine-readable output for `bound`, `membership` and `minor`.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimal transversals.
    Blocker { file: Option<PathBuf> },
    /// Maximal independent sets within the vertex set.
    Indep { file: Option<PathBuf> },
    /// Search for a minor isomorphic to k disjoint pairs. Exit 1 if absent.
    Minor {
        #[arg(long)]
        k: usize,
        /// Print the deletion and contraction sets.
        #[arg(long)]
        witness: bool,
        file: Option<PathBuf>,
    },
    /// Count (default) or list the semi-matchings.
    #[command(group(ArgGroup::new("mode").args(["count", "list"])))]
    Semimatchings {
        #[arg(long)]
        count: bool,
        #[arg(long)]
        list: bool,
        file: Option<PathBuf>,
    },
    /// Extract an expanded minor matching from a semi-matching.
    Extract {
        #[arg(long)]
        matching: PathBuf,
        file: Option<PathBuf>,
    },
    /// Blocker-size bound for clutters without a (k+1)K2 minor.
    Bound {
        #[arg(long)]
        k: u32,
        /// Also compute the blocker and check it against the bound.
        #[arg(long, conflicts_with_all = ["edges", "rank"])]
        verify: bool,
        /// Evaluate for this many edges instead of reading a clutter.
        #[arg(long, requires = "rank")]
        edges: Option<usize>,
        #[arg(long, requires = "edges")]
        rank: Option<u32>,
        file: Option<PathBuf>,
    },
    /// Rank at most r and no kK2 minor. Exit 1 if not a member.
    Membership {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        file: Option<PathBuf>,
    },
    /// Optimal set cover read from the minimal covers.
    #[command(name = "solve-setcover")]
    SolveSetcover {
        #[arg(long, conflicts_with = "oracle_cmd")]
        weighted: bool,
        /// Shell command giving the cost of the set names on its stdin.
        #[arg(long)]
        oracle_cmd: Option<String>,
        /// Random monotonicity checks to run against the oracle first.
        #[arg(long, default_value_t = 0, requires = "oracle_cmd")]
        spot_checks: usize,
        file: Option<PathBuf>,
    },
    /// Satisfiability of a DIMACS CNF. Exit 1 if unsatisfiable.
    #[command(name = "solve-sat")]
    SolveSat { file: Option<PathBuf> },
    /// Generate a clutter.
    Gen {
        #[arg(long)]
        family: Family,
        /// Number of pairs for kk2.
        #[arg(long)]
        k: Option<u32>,
        /// Size for staircase, vertex count for random.
        #[arg(long)]
        n: Option<u32>,
        /// Edge count for random.
        #[arg(long)]
        m: Option<usize>,
        /// Maximum edge size for random.
        #[arg(long)]
        r: Option<u32>,
    },
    /// Check the lattice, minor and duality identities on random samples.
    Laws {
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Kk2,
    Staircase,
    Random,
}

fn read_input(file: Option<&PathBuf>) -> anyhow::Result<String> {
    match file {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            Ok(s)
        }
    }
}

fn read_clutter(file: Option<&PathBuf>) -> anyhow::Result<Clutter> {
    let text = read_input(file)?;
    let what = file.map_or("stdin".to_string(), |p| p.display().to_string());
    parse_clutter(&text).with_context(|| format!("parsing {what}"))
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_report(out: &mut String, rep: &BoundReport, as_json: bool) -> anyhow::Result<()> {
    if as_json {
        writeln!(out, "{}", serde_json::to_string_pretty(rep)?)?;
        return Ok(());
    }
    let p = &rep.params;
    writeln!(out, "edges: {}", p.edge_count())?;
    writeln!(out, "rank: {}", p.r())?;
    writeln!(out, "k: {}", p.k())?;
    writeln!(out, "bound: {}", rep.bound)?;
    if let (Some(obs), Some(within)) = (rep.observed_blocker_size, rep.within_bound) {
        writeln!(out, "blocker size: {obs}")?;
        writeln!(out, "within bound: {within}")?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut String) -> anyhow::Result<ExitCode> {
    let budget = cli.budget;
    match cli.command {
        Cmd::Blocker { file } => {
            let h = read_clutter(file.as_ref())?;
            let b = blocker_with_budget(&h, budget.unwrap_or(DEFAULT_BLOCKER_BUDGET))?;
            write!(out, "{}", serialize_clutter(&b))?;
        }
        Cmd::Indep { file } => {
            let h = read_clutter(file.as_ref())?;
            let i =
                maximal_independent_sets_with_budget(&h, budget.unwrap_or(DEFAULT_BLOCKER_BUDGET))?;
            write!(out, "{}", serialize_clutter(&i))?;
        }
        Cmd::Minor { k, witness, file } => {
            let h = read_clutter(file.as_ref())?;
            let found = find_kk2_minor_with_budget(&h, k, budget.unwrap_or(DEFAULT_MINOR_BUDGET))?;
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&json!({ "k": k, "witness": found }))?
                )?;
            } else if let Some(w) = &found {
                writeln!(out, "found")?;
                if witness {
                    writeln!(out, "delete: {}", w.delete)?;
                    writeln!(out, "contract: {}", w.contract)?;
                    write!(out, "{}", serialize_clutter(&w.matching_clutter()))?;
                }
            } else {
                writeln!(out, "none")?;
            }
            return Ok(verdict(found.is_some()));
        }
        Cmd::Semimatchings { list, file, .. } => {
            let h = read_clutter(file.as_ref())?;
            let budget = budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
            if list {
                for m in enumerate_semi_matchings_with_budget(&h, budget)? {
                    writeln!(out, "{}", semi_matching_line(&m))?;
                }
            } else {
                writeln!(out, "{}", count_semi_matchings(&h, budget)?)?;
            }
        }
        Cmd::Extract { matching, file } => {
            let h = read_clutter(file.as_ref())?;
            let text = read_input(Some(&matching))?;
            let m = parse_semi_matching(&text)
                .with_context(|| format!("parsing {}", matching.display()))?;
            write!(
                out,
                "{}",
                serialize_semi_matching(&extract_minor_matching(&h, &m)?)
            )?;
        }
        Cmd::Bound {
            k,
            verify,
            edges,
            rank,
            file,
        } => {
            if let (Some(m), Some(r)) = (edges, rank) {
                print_report(out, &bound_report(BoundParams::new(m, r, k)?), cli.json)?;
                return Ok(ExitCode::SUCCESS);
            }
            let h = read_clutter(file.as_ref())?;
            if verify {
                let rep = match verify_bound(&h, k as usize) {
                    Err(Error::NotInClass { k }) => {
                        eprintln!("not applicable: the clutter has a {k}K2 minor");
                        return Ok(ExitCode::from(1));
                    }
                    other => other?,
                };
                print_report(out, &rep, cli.json)?;
                return Ok(verdict(rep.within_bound == Some(true)));
            }
            if h.is_zero() {
                bail!("the bound is undefined for the empty clutter");
            }
            let r = u32::try_from(h.rank()?.max(2))?;
            print_report(
                out,
                &bound_report(BoundParams::new(h.len(), r, k)?),
                cli.json,
            )?;
        }
        Cmd::Membership { r, k, file } => {
            let h = read_clutter(file.as_ref())?;
            let member = class_membership(&h, r, k)?;
            if cli.json {
                writeln!(out, "{}", json!({ "r": r, "k": k, "member": member }))?;
            } else {
                writeln!(out, "{member}")?;
            }
            return Ok(verdict(member));
        }
        Cmd::SolveSetcover {
            weighted,
            oracle_cmd,
            spot_checks,
            file,
        } => {
            let inst = SetCoverInstance::parse(&read_input(file.as_ref())?)?;
            let mut oracle = oracle_cmd.map(CommandOracle::new);
            let objective = match oracle.as_mut() {
                Some(o) => {
                    if spot_checks > 0 {
                        let bad = spot_check_monotone(&inst, o, spot_checks, cli.seed)?;
                        if !bad.is_empty() {
                            log::warn!("{} monotonicity violation(s) observed", bad.len());
                        }
                    }
                    Objective::Oracle(o)
                }
                None if weighted => Objective::Weighted,
                None => Objective::Cardinality,
            };
            match solve_setcover(&inst, objective) {
                Err(Error::Infeasible { element }) => {
                    writeln!(out, "infeasible: element {element} is not covered")?;
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.into()),
                Ok(cover) => {
                    writeln!(out, "cost: {}", cover.cost)?;
                    writeln!(out, "sets: {}", cover.names.join(" "))?;
                }
            }
        }
        Cmd::SolveSat { file } => {
            let f = CnfFormula::parse_dimacs(&read_input(file.as_ref())?)?;
            match solve_sat(&f)? {
                Some(a) => {
                    writeln!(out, "s SATISFIABLE")?;
                    let lits: Vec<String> = a.literals().iter().map(|l| l.to_string()).collect();
                    if lits.is_empty() {
                        writeln!(out, "v 0")?;
                    } else {
                        writeln!(out, "v {} 0", lits.join(" "))?;
                    }
                }
                None => {
                    writeln!(out, "s UNSATISFIABLE")?;
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Cmd::Gen { family, k, n, m, r } => {
            let need = |v: Option<u32>, name: &str| {
                v.with_context(|| format!("--{name} is required for this family"))
            };
            let h = match family {
                Family::Kk2 => kk2(need(k, "k")?),
                Family::Staircase => staircase(need(n, "n")?)?,
                Family::Random => {
                    let m = m.context("--m is required for this family")?;
                    random(need(n, "n")?, m, need(r, "r")?, cli.seed)?
                }
            };
            write!(out, "{}", serialize_clutter(&h))?;
        }
        Cmd::Laws { samples } => {
            let rep = check_algebraic_laws(samples, cli.seed)?;
            for o in &rep.outcomes {
                writeln!(
                    out,
                    "{}: {} checked, {} failed",
                    o.name,
                    o.checked,
                    o.failures.len()
                )?;
                for f in o.failures.iter().take(3) {
                    writeln!(out, "  {f}")?;
                }
            }
            return Ok(verdict(rep.passed()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // A closed pipe (e.g. `| head`) is not an error.
    if let Err(e) = io::stdout().write_all(out.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let resource = err
                .downcast_ref::<Error>()
                .is_some_and(Error::is_resource_limit);
            ExitCode::from(if resource { 3 } else { 2 })
        }
    }
}
