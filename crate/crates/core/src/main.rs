use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mvis::bounds::bound_report;
use mvis::graph::{profile, Graph, GraphSpec, VertexSet};
use mvis::reproduce::{run_checks, Family};
use mvis::solver::{
    build_ip_model, count_dissociation_sets_of_size, count_induced_k_matchings, export_lp,
    max_induced_matching, mu_exact, Limits, SolveOptions, SolveResult,
};
use mvis::visibility::{analyze_set, count_mv_sets_of_size, is_mv_set, visibility_polynomial};
use mvis::Error;

/// Exact mutual-visibility analysis of small graphs.
#[derive(Parser)]
#[command(name = "mvis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// petersen, hoffman-singleton, cycle:<n>, complete:<n> or file:<path>
    #[arg(long, value_parser = parse_spec)]
    graph: GraphSpec,
}

fn parse_spec(s: &str) -> Result<GraphSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args)]
struct SolveArgs {
    /// Report the lexicographically smallest optimal set.
    #[arg(long)]
    canonical: bool,
    /// Wall-clock budget in milliseconds.
    #[arg(long, value_name = "MS")]
    limit_ms: Option<u64>,
    /// Search-node budget.
    #[arg(long, value_name = "N")]
    max_nodes: Option<u64>,
    /// Count the sets of size `k` instead of maximising.
    #[arg(long, value_name = "K")]
    count: Option<usize>,
}

impl SolveArgs {
    fn limits(&self) -> Limits {
        Limits::new(self.max_nodes, self.limit_ms.map(Duration::from_millis))
    }

    fn options(&self) -> SolveOptions {
        SolveOptions {
            canonical: self.canonical,
            limits: self.limits(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structural profile of a graph.
    Profile(GraphArg),
    /// Decide whether a vertex set is a mutual-visibility set.
    Check {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertex list, e.g. 0,2,7 (empty for the empty set).
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Visibility polynomial by exhaustive enumeration.
    Polynomial {
        #[command(flatten)]
        graph: GraphArg,
        /// Enumerate even above 30 vertices.
        #[arg(long)]
        force: bool,
        /// Only count the sets of this size.
        #[arg(long, value_name = "K")]
        count: Option<usize>,
    },
    /// Mutual-visibility number with a certificate.
    Mu {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        solve: SolveArgs,
        /// Allow exhaustive counting above 30 vertices.
        #[arg(long)]
        force: bool,
    },
    /// Maximum induced matching, or the number of induced k-matchings.
    InducedMatching {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Closed-form upper bounds with their hypotheses.
    Bounds(GraphArg),
    /// Write the zero-one model in LP format.
    ExportLp {
        #[command(flatten)]
        graph: GraphArg,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the reference values for the Petersen and Hoffman–Singleton graphs.
    VerifyPaper {
        #[arg(long, value_enum)]
        only: Option<OnlyFamily>,
        /// Print the rows as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OnlyFamily {
    Petersen,
    HoffmanSingleton,
    Moore,
}

impl From<OnlyFamily> for Family {
    fn from(f: OnlyFamily) -> Self {
        match f {
            OnlyFamily::Petersen => Family::Petersen,
            OnlyFamily::HoffmanSingleton => Family::HoffmanSingleton,
            OnlyFamily::Moore => Family::Moore,
        }
    }
}

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => EXIT_FALSE,
        _ => EXIT_USAGE,
    }
}

/// Writes to standard output; a closed pipe is not an error.
fn out(text: std::fmt::Arguments<'_>) -> mvis::Result<()> {
    match std::io::stdout().lock().write_fmt(text) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(value: &Value) -> mvis::Result<()> {
    out(format_args!(
        "{}\n",
        serde_json::to_string_pretty(value).expect("JSON values serialise")
    ))
}

fn load(arg: &GraphArg) -> mvis::Result<Graph> {
    arg.graph.build()
}

fn solve_json(spec: &GraphSpec, r: &SolveResult) -> Value {
    json!({
        "problem": r.problem,
        "graph": spec.to_string(),
        "optimum": r.optimum,
        "certificate": r.certificate,
        "nodes": r.nodes_explored,
        "ms": r.elapsed.as_secs_f64() * 1e3,
        "method": r.method,
        "proven": r.proven,
    })
}

fn count_json(spec: &GraphSpec, problem: &str, k: usize, count: u64, proven: bool) -> Value {
    json!({ "problem": problem, "graph": spec.to_string(), "k": k, "count": count, "proven": proven })
}

fn status(proven: bool) -> u8 {
    if proven {
        0
    } else {
        EXIT_LIMIT
    }
}

fn run(command: Command) -> mvis::Result<u8> {
    match command {
        Command::Profile(arg) => {
            let g = load(&arg)?;
            emit(&serde_json::to_value(profile(&g)).expect("profile serialises"))?;
            Ok(0)
        }
        Command::Check { graph, set } => {
            let g = load(&graph)?;
            let set = VertexSet::parse_list(&set, g.n())?;
            let (is_mv, checker) = is_mv_set(&g, set)?;
            emit(&json!({
                "graph": graph.graph.to_string(),
                "set": set,
                "is_mv": is_mv,
                "checker": checker,
                "analysis": analyze_set(&g, set)?,
            }))?;
            Ok(if is_mv { 0 } else { EXIT_FALSE })
        }
        Command::Polynomial {
            graph,
            force,
            count,
        } => {
            let g = load(&graph)?;
            let spec = graph.graph.to_string();
            match count {
                Some(k) => {
                    let c = count_mv_sets_of_size(&g, k, force)?;
                    emit(&json!({ "graph": spec, "k": k, "count": c }))?;
                }
                None => {
                    let poly = visibility_polynomial(&g, force)?;
                    emit(&json!({
                        "graph": spec,
                        "coefficients": poly.trimmed(),
                        "polynomial": poly.to_string(),
                        "degree": poly.degree(),
                    }))?;
                }
            }
            Ok(0)
        }
        Command::Mu {
            graph,
            solve,
            force,
        } => {
            let g = load(&graph)?;
            if let Some(k) = solve.count {
                let p = profile(&g);
                let (count, proven) = if p.lemma4_class {
                    let c = count_dissociation_sets_of_size(&g, k, solve.limits());
                    (c.count, c.proven)
                } else {
                    (count_mv_sets_of_size(&g, k, force)?, true)
                };
                emit(&count_json(
                    &graph.graph,
                    "mutual-visibility",
                    k,
                    count,
                    proven,
                ))?;
                return Ok(status(proven));
            }
            let r = mu_exact(&g, solve.options())?;
            emit(&solve_json(&graph.graph, &r))?;
            Ok(status(r.proven))
        }
        Command::InducedMatching { graph, solve } => {
            let g = load(&graph)?;
            if let Some(k) = solve.count {
                let count = count_induced_k_matchings(&g, k);
                emit(&count_json(
                    &graph.graph,
                    "induced-matching",
                    k,
                    count,
                    true,
                ))?;
                return Ok(0);
            }
            let r = max_induced_matching(&g, solve.options());
            emit(&solve_json(&graph.graph, &r))?;
            Ok(status(r.proven))
        }
        Command::Bounds(arg) => {
            let g = load(&arg)?;
            let mut report = serde_json::to_value(bound_report(&g)).expect("report serialises");
            report["graph"] = json!(arg.graph.to_string());
            emit(&report)?;
            Ok(0)
        }
        Command::ExportLp { graph, out } => {
            let g = load(&graph)?;
            let model = build_ip_model(&g);
            match out {
                Some(path) => {
                    let file = std::fs::File::create(&path).map_err(|e| {
                        Error::Io(std::io::Error::new(
                            e.kind(),
                            format!("cannot create {}: {e}", path.display()),
                        ))
                    })?;
                    let mut sink = std::io::BufWriter::new(file);
                    export_lp(&model, &mut sink)?;
                    sink.flush()?;
                    emit(&json!({
                        "graph": graph.graph.to_string(),
                        "variables": model.variables,
                        "constraints": model.constraints.len(),
                        "out": path.display().to_string(),
                    }))?;
                }
                None => match export_lp(&model, std::io::stdout().lock()) {
                    Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                    other => other?,
                },
            }
            Ok(0)
        }
        Command::VerifyPaper { only, json } => {
            let rows = run_checks(only.map(Family::from));
            let all_passed = rows.iter().all(|r| r.passed);
            if json {
                emit(&json!({ "passed": all_passed, "rows": rows }))?;
            } else {
                print_table(&rows)?;
            }
            Ok(if all_passed { 0 } else { EXIT_FALSE })
        }
    }
}

fn print_table(rows: &[mvis::reproduce::CheckRow]) -> mvis::Result<()> {
    let label = |r: &mvis::reproduce::CheckRow| {
        let family = serde_json::to_value(r.family).expect("family serialises");
        format!("{} / {}", family.as_str().unwrap_or_default(), r.name)
    };
    let width = |f: &dyn Fn(&mvis::reproduce::CheckRow) -> usize, min: usize| {
        rows.iter().map(f).max().unwrap_or(0).max(min)
    };
    let wc = width(&|r| label(r).len(), 5);
    let we = width(&|r| r.expected.len(), 8);
    let wg = width(&|r| r.got.len(), 3);
    out(format_args!(
        "{:<6} {:<wc$}  {:<we$}  {:<wg$}  {:>10}\n",
        "", "check", "expected", "got", "elapsed"
    ))?;
    for r in rows {
        let mark = if r.passed { "pass" } else { "FAIL" };
        out(format_args!(
            "{mark:<6} {:<wc$}  {:<we$}  {:<wg$}  {:>8.1}ms\n",
            label(r),
            r.expected,
            r.got,
            r.elapsed.as_secs_f64() * 1e3
        ))?;
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    out(format_args!("{} checks, {failed} failed\n", rows.len()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("mvis: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
