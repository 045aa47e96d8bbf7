//! `diter` — stationary vectors and dominant eigenvectors of sparse
//! non-negative matrices, computed by selective residual diffusion, with a
//! power-iteration baseline and a benchmarking mode.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use diter_core::bench::{
    emit_report, emit_trace, run_bench, BenchConfig, GraphSource, ReportFormat, TargetRule,
};
use diter_core::diffusion::{SelectionPolicy, StoppingRule};
use diter_core::graph::{
    build_stochastic, complete_graph, compute_stats, load_edge_list_path, EdgeList, GraphStats,
};
use diter_core::pagerank::{
    build_full_operator, di_pagerank, di_plus_pagerank, DiffusionForm, PageRankProblem,
    RescalingCertificate,
};
use diter_core::power::power_solve;
use diter_core::{Method, SolverReport};

#[derive(Parser)]
#[command(
    name = "diter",
    version,
    about = "Sparse stationary-distribution and eigenvector solvers based on residual diffusion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the summary statistics of an edge-list graph.
    Stats(StatsArgs),
    /// Solve one (method, damping) instance and print the vector.
    Solve(SolveArgs),
    /// Run a method × damping comparison and emit the report table.
    Bench(BenchArgs),
}

#[derive(Args)]
struct StatsArgs {
    /// Edge-list file ("src dst" per line, '#' comments, optional "N <n>"
    /// header).
    graph: PathBuf,
    /// Apply random completion (one outgoing link for every dangling node,
    /// one incoming for every in-degree-0 node) before measuring.
    #[arg(long)]
    complete: bool,
    /// Seed for the completion draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SolveArgs {
    /// Edge-list file.
    graph: PathBuf,
    /// Solver: pi, di, or di+.
    #[arg(long)]
    method: Method,
    /// Damping factor in (0, 1].
    #[arg(long)]
    d: f64,
    /// Convergence target for the error estimate.
    #[arg(long, conflicts_with = "target_inv_n")]
    target: Option<f64>,
    /// Use 1/N as the convergence target.
    #[arg(long)]
    target_inv_n: bool,
    /// Selection threshold scale of cycle 0 (diffusion methods).
    #[arg(long, default_value_t = 1.0)]
    r0: f64,
    /// Selection threshold decay per cycle, in (0, 1).
    #[arg(long, default_value_t = 0.25)]
    decay: f64,
    /// Seed for completion draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Apply random completion before solving.
    #[arg(long)]
    complete: bool,
    /// Cycle budget (diffusion) or iteration budget (power iteration).
    #[arg(long, default_value_t = 10_000)]
    max_cycles: u64,
    /// Which system di+ diffuses on.
    #[arg(long, value_enum, default_value_t = FormArg::Raw)]
    diffusion_form: FormArg,
    /// Write the vector here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph", "synthetic"])))]
struct BenchArgs {
    /// Edge-list file.
    graph: Option<PathBuf>,
    /// Generate a power-law graph instead: "n,avg_degree,exponent".
    #[arg(long, value_parser = parse_synthetic)]
    synthetic: Option<SyntheticSpec>,
    /// Methods to compare.
    #[arg(long, value_delimiter = ',', default_value = "pi,di,di+")]
    methods: Vec<Method>,
    /// Damping factors to sweep.
    #[arg(long = "d-list", value_delimiter = ',', default_value = "0.85")]
    d_list: Vec<f64>,
    /// Convergence target; the default is the tables' 1/N rule.
    #[arg(long, conflicts_with = "target_inv_n")]
    target: Option<f64>,
    /// Use 1/N as the convergence target (the default).
    #[arg(long)]
    target_inv_n: bool,
    /// Report flavor.
    #[arg(long, value_enum, default_value_t = FormatArg::Markdown)]
    format: FormatArg,
    /// Write per-cycle convergence samples (method,d,cost,estimate) here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Selection threshold scale of cycle 0.
    #[arg(long, default_value_t = 1.0)]
    r0: f64,
    /// Selection threshold decay per cycle, in (0, 1).
    #[arg(long, default_value_t = 0.25)]
    decay: f64,
    /// Seed for synthesis and completion draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Apply random completion before solving.
    #[arg(long)]
    complete: bool,
    /// Cycle/iteration budget per cell.
    #[arg(long, default_value_t = 10_000)]
    max_cycles: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    /// Diffuse on the raw sub-stochastic matrix, normalize at the end.
    Raw,
    /// Diffuse on the dangling-completed matrix directly.
    Completed,
}

impl From<FormArg> for DiffusionForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Raw => DiffusionForm::Raw,
            FormArg::Completed => DiffusionForm::Completed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Markdown => ReportFormat::Markdown,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct SyntheticSpec {
    n: usize,
    avg_degree: f64,
    exponent: f64,
}

fn parse_synthetic(s: &str) -> Result<SyntheticSpec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected \"n,avg_degree,exponent\"".into());
    }
    let n = usize::from_str(parts[0].trim()).map_err(|e| format!("node count: {e}"))?;
    let avg_degree = f64::from_str(parts[1].trim()).map_err(|e| format!("avg degree: {e}"))?;
    let exponent = f64::from_str(parts[2].trim()).map_err(|e| format!("exponent: {e}"))?;
    Ok(SyntheticSpec {
        n,
        avg_degree,
        exponent,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage problems exit 1; --help/--version are successes.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> diter_core::Result<ExitCode> {
    match cli.command {
        Command::Stats(args) => run_stats(args),
        Command::Solve(args) => run_solve(args),
        Command::Bench(args) => run_bench_cmd(args),
    }
}

fn load_graph(path: &Path, complete: bool, seed: u64) -> diter_core::Result<EdgeList> {
    let edges = load_edge_list_path(path)?;
    if complete {
        complete_graph(&edges, seed)
    } else {
        Ok(edges)
    }
}

fn print_stats(stats: &GraphStats, out: &mut impl Write) -> std::io::Result<()> {
    let n = stats.n.max(1) as f64;
    writeln!(out, "N        {}", stats.n)?;
    writeln!(out, "L        {}", stats.links)?;
    writeln!(out, "L/N      {:.4}", stats.links as f64 / n)?;
    writeln!(out, "D/N      {:.6}", stats.dangling as f64 / n)?;
    writeln!(out, "E/N      {:.6}", stats.zero_in_recursive as f64 / n)?;
    writeln!(out, "O/N      {:.6}", stats.self_loops as f64 / n)?;
    writeln!(out, "max_in   {}", stats.max_in)?;
    writeln!(out, "max_out  {}", stats.max_out)?;
    Ok(())
}

fn run_stats(args: StatsArgs) -> diter_core::Result<ExitCode> {
    let edges = load_graph(&args.graph, args.complete, args.seed)?;
    let stats = compute_stats(&build_stochastic(&edges));
    print_stats(&stats, &mut std::io::stdout().lock())?;
    Ok(ExitCode::SUCCESS)
}

fn summarize(report: &SolverReport, n: usize, certificate: Option<&RescalingCertificate>) {
    let estimate_kind = if report.estimate_is_heuristic {
        "heuristic"
    } else {
        "bound"
    };
    eprintln!(
        "method={} d={} n={} iterations={:.3} diffusions={} estimate={:.3e} ({}) converged={} time={:.4}s",
        report.method,
        report.d,
        n,
        report.iterations,
        report.diffusions,
        report.estimate,
        estimate_kind,
        report.converged,
        report.wall_seconds,
    );
    if let Some(c) = certificate {
        eprintln!(
            "rescaling: f1={:.6e} f2={:.6e} f={:.6e} scale={:.10}",
            c.f1, c.f2, c.f, c.scale
        );
    }
}

fn run_solve(args: SolveArgs) -> diter_core::Result<ExitCode> {
    let edges = load_graph(&args.graph, args.complete, args.seed)?;
    let m = build_stochastic(&edges);
    let n = m.n();
    let target = if args.target_inv_n {
        1.0 / n as f64
    } else {
        args.target.unwrap_or(1e-8)
    };
    let policy = SelectionPolicy::new(args.r0, args.decay, true)?;
    let stop = StoppingRule::new(target, args.max_cycles);
    let prob = PageRankProblem::new(m, args.d, args.complete)?;

    let (report, certificate) = match args.method {
        Method::Pi => {
            let op = build_full_operator(&prob);
            (power_solve(&op, args.d, target, args.max_cycles)?, None)
        }
        Method::Di => (di_pagerank(&prob, &policy, &stop)?, None),
        Method::DiPlus => {
            let (report, cert) =
                di_plus_pagerank(&prob, &policy, &stop, args.diffusion_form.into())?;
            (report, Some(cert))
        }
    };

    let mut rendered = String::with_capacity(report.vector.len() * 20);
    for v in &report.vector {
        rendered.push_str(&format!("{v:?}\n"));
    }
    match &args.output {
        Some(path) => std::fs::write(path, rendered)?,
        None => {
            std::io::stdout().lock().write_all(rendered.as_bytes())?;
        }
    }
    summarize(&report, n, certificate.as_ref());
    Ok(if report.converged {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn run_bench_cmd(args: BenchArgs) -> diter_core::Result<ExitCode> {
    let source = match (&args.graph, &args.synthetic) {
        (Some(path), None) => GraphSource::Path(path.clone()),
        (None, Some(spec)) => GraphSource::Synthetic {
            n: spec.n,
            avg_degree: spec.avg_degree,
            exponent: spec.exponent,
        },
        // clap's ArgGroup guarantees exactly one.
        _ => unreachable!("argument group enforces one source"),
    };
    let target = match args.target {
        Some(t) => TargetRule::Fixed(t),
        None => TargetRule::InvN,
    };
    let cfg = BenchConfig {
        source,
        methods: args.methods.clone(),
        damping: args.d_list.clone(),
        target,
        seed: args.seed,
        max_cycles: args.max_cycles,
        r0: args.r0,
        decay: args.decay,
        complete: args.complete,
        format: args.format.into(),
    };
    let outcome = run_bench(&cfg)?;

    print!("{}", emit_report(&outcome.rows, &outcome.stats, cfg.format));
    if cfg.format == ReportFormat::Csv {
        // Keep machine output clean; the statistics go to stderr.
        let mut err = std::io::stderr().lock();
        print_stats(&outcome.stats, &mut err)?;
    }
    if let Some(path) = &args.trace {
        std::fs::write(path, emit_trace(&outcome.rows))?;
    }

    let all_converged = outcome
        .rows
        .iter()
        .filter_map(|row| row.report.as_ref())
        .all(|r| r.converged);
    Ok(if all_converged {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
