//! Benchmark harness: run the three solvers across damping factors on a
//! loaded or synthesized graph, cross-check their answers, and serialize the
//! comparison tables.

use std::path::PathBuf;

use crate::diffusion::{SelectionPolicy, StoppingRule};
use crate::error::{Error, Result};
use crate::graph::{
    build_stochastic, complete_graph, compute_stats, load_edge_list_path, EdgeList, GraphStats,
};
use crate::pagerank::{
    build_full_operator, di_pagerank, di_plus_pagerank, DiffusionForm, PageRankProblem,
};
use crate::power::power_solve;
use crate::report::{Method, SolverReport};
use crate::rng::SplitMix64;
use crate::vecops;

/// Where the benchmark graph comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    /// Edge-list text file.
    Path(PathBuf),
    /// Generated power-law graph (see [`generate_synthetic`]).
    Synthetic {
        /// Node count.
        n: usize,
        /// Average out-degree the generator aims for.
        avg_degree: f64,
        /// Pareto tail exponent, must exceed 2.
        exponent: f64,
    },
}

/// How the per-cell convergence target is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TargetRule {
    /// The same explicit target everywhere.
    Fixed(f64),
    /// `1/N` for an N-node graph (the tables' convention).
    InvN,
}

/// Output table flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// Machine-readable rows, full precision.
    Csv,
    /// Human-readable tables, one per damping factor.
    Markdown,
}

/// Full description of one benchmark batch. Identical configs (same seed)
/// produce identical vectors and iteration counts — only wall times vary.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// Graph to load or generate.
    pub source: GraphSource,
    /// Solvers to run, in output order.
    pub methods: Vec<Method>,
    /// Damping factors, each in (0, 1].
    pub damping: Vec<f64>,
    /// Convergence target per cell.
    pub target: TargetRule,
    /// Seed for synthesis and completion draws.
    pub seed: u64,
    /// Cycle budget for the diffusion solvers, iteration budget for the
    /// power baseline.
    pub max_cycles: u64,
    /// Selection threshold scale of cycle 0.
    pub r0: f64,
    /// Selection threshold decay per cycle.
    pub decay: f64,
    /// Apply random completion before solving.
    pub complete: bool,
    /// Serialization flavor for [`emit_report`].
    pub format: ReportFormat,
}

impl BenchConfig {
    fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return Err(Error::InvalidParameter {
                what: "benchmark needs at least one method".into(),
            });
        }
        for &d in &self.damping {
            if !(d > 0.0 && d <= 1.0) {
                return Err(Error::DampingOutOfRange { d });
            }
        }
        if let TargetRule::Fixed(t) = self.target {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidParameter {
                    what: format!("fixed target must be positive and finite, got {t}"),
                });
            }
        }
        if self.max_cycles == 0 {
            return Err(Error::InvalidParameter {
                what: "max_cycles must be at least 1".into(),
            });
        }
        // Policy construction re-validates r0/decay.
        SelectionPolicy::new(self.r0, self.decay, true).map(|_| ())
    }
}

/// One (method, damping) cell; `report` is `None` for combinations the
/// method does not define (the classic baseline at d = 1).
#[derive(Debug, Clone)]
pub struct BenchRow {
    /// Solver.
    pub method: Method,
    /// Damping factor.
    pub d: f64,
    /// The solve's report, or `None` for an undefined cell.
    pub report: Option<SolverReport>,
}

/// Everything a batch produced.
#[derive(Debug, Clone)]
pub struct BenchOutcome {
    /// One row per requested (method, d), in request order (d-major).
    pub rows: Vec<BenchRow>,
    /// Statistics of the solved graph (after completion, when applied).
    pub stats: GraphStats,
}

/// Run one benchmark batch sequentially.
///
/// Per damping factor, every requested method runs at the configured target;
/// converged vectors are then cross-checked pairwise within the sum of the
/// two cells' targets (relaxed 10× at d = 1, where both estimates are
/// heuristic) — disagreement aborts the batch, since it means a solver is
/// wrong, not slow. Gains are attached relative to the power baseline when
/// it is part of the batch. Timing covers solving only, never graph load or
/// completion.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchOutcome> {
    cfg.validate()?;
    let edges = match &cfg.source {
        GraphSource::Path(path) => load_edge_list_path(path)?,
        GraphSource::Synthetic {
            n,
            avg_degree,
            exponent,
        } => generate_synthetic(*n, *avg_degree, *exponent, cfg.seed)?,
    };
    let edges = if cfg.complete {
        complete_graph(&edges, cfg.seed)?
    } else {
        edges
    };
    let m = build_stochastic(&edges);
    let stats = compute_stats(&m);
    let policy = SelectionPolicy::new(cfg.r0, cfg.decay, true)?;

    let mut rows = Vec::new();
    for &d in &cfg.damping {
        let target = match cfg.target {
            TargetRule::Fixed(t) => t,
            TargetRule::InvN => 1.0 / m.n() as f64,
        };
        let stop = StoppingRule::new(target, cfg.max_cycles);
        let prob = PageRankProblem::new(m.clone(), d, cfg.complete)?;

        let mut batch: Vec<BenchRow> = Vec::new();
        for &method in &cfg.methods {
            let report = match method {
                Method::Pi => Some(power_solve(
                    &build_full_operator(&prob),
                    d,
                    target,
                    cfg.max_cycles,
                )?),
                Method::Di => {
                    if d >= 1.0 {
                        None
                    } else {
                        Some(di_pagerank(&prob, &policy, &stop)?)
                    }
                }
                Method::DiPlus => {
                    Some(di_plus_pagerank(&prob, &policy, &stop, DiffusionForm::Raw)?.0)
                }
            };
            batch.push(BenchRow { method, d, report });
        }

        cross_check(&batch, d, target)?;
        attach_gains(&mut batch);
        rows.extend(batch);
    }
    Ok(BenchOutcome { rows, stats })
}

/// Converged cells must agree: any two methods that both claim estimate ≤
/// target must sit within the sum of those targets of each other (both
/// vectors are normalized to σ = 1). At d = 1 the estimates are heuristics,
/// so the allowance is widened tenfold.
fn cross_check(batch: &[BenchRow], d: f64, target: f64) -> Result<()> {
    let slack = if d >= 1.0 { 10.0 } else { 1.0 };
    let allowed = slack * 2.0 * target;
    let converged: Vec<(&Method, &SolverReport)> = batch
        .iter()
        .filter_map(|row| row.report.as_ref().map(|r| (&row.method, r)))
        .filter(|(_, r)| r.converged)
        .collect();
    for (i, (ma, ra)) in converged.iter().enumerate() {
        for (mb, rb) in converged.iter().skip(i + 1) {
            let distance = vecops::l1_dist(&ra.vector, &rb.vector);
            if distance > allowed {
                return Err(Error::CrossCheckFailed {
                    method_a: ma.name(),
                    method_b: mb.name(),
                    d,
                    distance,
                    allowed,
                });
            }
        }
    }
    Ok(())
}

/// Fill the gain fields relative to the power baseline, when present.
fn attach_gains(batch: &mut [BenchRow]) {
    let pi = batch.iter().find_map(|row| {
        (row.method == Method::Pi)
            .then_some(row.report.as_ref())
            .flatten()
            .map(|r| (r.iterations, r.wall_seconds))
    });
    let Some((pi_iterations, pi_seconds)) = pi else {
        return;
    };
    for row in batch.iter_mut() {
        if let Some(report) = row.report.as_mut() {
            report.gain_iterations = Some(if report.iterations > 0.0 {
                pi_iterations / report.iterations
            } else {
                f64::INFINITY
            });
            report.gain_time = Some(if report.wall_seconds > 0.0 {
                pi_seconds / report.wall_seconds
            } else {
                f64::INFINITY
            });
        }
    }
}

/// CSV float formatting: shortest round-trip representation that keeps a
/// decimal point (so a whole 20.0 prints as "20.0", not "20").
fn csv_float(x: f64) -> String {
    format!("{x:?}")
}

/// Serialize a batch.
///
/// CSV: `method,d,iterations,time_s,error,gain_iter,gain_time`, full
/// precision, "undefined" in the value columns of an undefined cell, empty
/// gain columns when the baseline was absent. Markdown: a graph-statistics
/// block (per-node link, dangling, recursive-zero-in, self-loop rates plus
/// degree maxima), then one table per damping factor with gains rounded to
/// one decimal and the baseline marked "x".
pub fn emit_report(rows: &[BenchRow], stats: &GraphStats, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => emit_csv(rows),
        ReportFormat::Markdown => emit_markdown(rows, stats),
    }
}

fn emit_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("method,d,iterations,time_s,error,gain_iter,gain_time\n");
    for row in rows {
        match &row.report {
            Some(r) => {
                let gain_iter = r.gain_iterations.map(csv_float).unwrap_or_default();
                let gain_time = r.gain_time.map(csv_float).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    row.method,
                    csv_float(row.d),
                    csv_float(r.iterations),
                    csv_float(r.wall_seconds),
                    csv_float(r.estimate),
                    gain_iter,
                    gain_time,
                ));
            }
            None => {
                out.push_str(&format!(
                    "{},{},undefined,undefined,undefined,,\n",
                    row.method,
                    csv_float(row.d)
                ));
            }
        }
    }
    out
}

fn md_iterations(r: &SolverReport) -> String {
    let text = if (r.iterations - r.iterations.round()).abs() < 1e-9 {
        format!("{}", r.iterations.round() as i64)
    } else {
        format!("{:.1}", r.iterations)
    };
    if r.converged {
        text
    } else {
        format!("{text} (not converged)")
    }
}

fn md_gain(gain: Option<f64>, is_baseline: bool) -> String {
    if is_baseline {
        return "x".to_string();
    }
    match gain {
        Some(g) => format!("×{g:.1}"),
        None => String::new(),
    }
}

fn emit_markdown(rows: &[BenchRow], stats: &GraphStats) -> String {
    let n = stats.n.max(1) as f64;
    let mut out = String::from("## Graph\n\n");
    out.push_str("| N | L | L/N | D/N | E/N | O/N | max_in | max_out |\n");
    out.push_str("|---|---|-----|-----|-----|-----|--------|--------|\n");
    out.push_str(&format!(
        "| {} | {} | {:.3} | {:.5} | {:.5} | {:.5} | {} | {} |\n",
        stats.n,
        stats.links,
        stats.links as f64 / n,
        stats.dangling as f64 / n,
        stats.zero_in_recursive as f64 / n,
        stats.self_loops as f64 / n,
        stats.max_in,
        stats.max_out,
    ));

    // One table per damping factor, in first-appearance order.
    let mut seen: Vec<f64> = Vec::new();
    for row in rows {
        if !seen.iter().any(|d| d == &row.d) {
            seen.push(row.d);
        }
    }
    for d in seen {
        out.push_str(&format!("\n## d = {d}\n\n"));
        out.push_str("| method | nb iter | gain | time (s) | gain |\n");
        out.push_str("|--------|---------|------|----------|------|\n");
        for row in rows.iter().filter(|row| row.d == d) {
            match &row.report {
                Some(r) => {
                    let baseline = row.method == Method::Pi;
                    out.push_str(&format!(
                        "| {} | {} | {} | {:.4} | {} |\n",
                        row.method,
                        md_iterations(r),
                        md_gain(r.gain_iterations, baseline),
                        r.wall_seconds,
                        md_gain(r.gain_time, baseline),
                    ));
                }
                None => {
                    out.push_str(&format!("| {} | undefined | | | |\n", row.method));
                }
            }
        }
    }
    out
}

/// Serialize every cell's per-cycle convergence trace:
/// `method,d,cost,estimate`, one line per sample, full precision. Costs are
/// fractional iterations (links traversed over L for the diffusion methods,
/// whole products for the baseline).
pub fn emit_trace(rows: &[BenchRow]) -> String {
    let mut out = String::from("method,d,cost,estimate\n");
    for row in rows {
        if let Some(r) = &row.report {
            for point in &r.trace {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    row.method,
                    csv_float(row.d),
                    csv_float(point.cost),
                    csv_float(point.estimate),
                ));
            }
        }
    }
    out
}

/// Generate a power-law out-degree graph with web-crawl texture.
///
/// Degrees are Pareto draws (tail exponent `exponent`, scaled so the total
/// edge budget is `n·avg_degree`, clamped to [1, n−1]). Most destinations
/// land in a locality window around the source — crawl orderings keep the
/// bulk of links near the diagonal, which is exactly what makes real link
/// matrices slow-mixing — while the rest are drawn from a
/// preferential-attachment pool seeded with every node once (chosen
/// destinations re-enter, so early picks grow into global hubs). No
/// self-loops; destinations are distinct per source. Deterministic per seed.
pub fn generate_synthetic(n: usize, avg_degree: f64, exponent: f64, seed: u64) -> Result<EdgeList> {
    if n < 2 {
        return Err(Error::GraphTooSmall { n });
    }
    if !(avg_degree >= 1.0 && avg_degree.is_finite()) {
        return Err(Error::InvalidParameter {
            what: format!("average degree must be at least 1, got {avg_degree}"),
        });
    }
    if !(exponent > 2.0 && exponent.is_finite()) {
        return Err(Error::InvalidParameter {
            what: format!("degree exponent must exceed 2, got {exponent}"),
        });
    }
    let mut rng = SplitMix64::new(seed);

    // Continuous Pareto with mean avg_degree: x_min·u^(−1/(α−1)).
    let x_min = avg_degree * (exponent - 2.0) / (exponent - 1.0);
    let raw: Vec<f64> = (0..n)
        .map(|_| x_min * rng.next_unit_open().powf(-1.0 / (exponent - 1.0)))
        .collect();
    // Rescale to the exact edge budget before rounding; clamping keeps every
    // node alive and no degree above n−1.
    let budget = n as f64 * avg_degree;
    let total: f64 = raw.iter().sum();
    let degrees: Vec<usize> = raw
        .iter()
        .map(|x| ((x * budget / total).round() as usize).clamp(1, n - 1))
        .collect();

    // Locality share of the destination draws; the remainder goes to the
    // global preferential-attachment pool. High locality is what produces a
    // subdominant eigenvalue near 1 (slow global mixing), the regime the
    // iteration comparison is about: each global link is a long-range mixing
    // shortcut, so even a few percent of them collapse the spectral gap the
    // band structure builds up.
    const LOCAL_SHARE: f64 = 0.99;
    // Base radius of the locality window; wide-fan sources get a window at
    // least as wide as their degree so their links stay drawable.
    const BASE_WINDOW: usize = 16;

    // Preferential attachment: every node enters the pool once so anyone can
    // be drawn; every chosen destination re-enters, skewing later draws
    // toward already-popular nodes.
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(degrees.iter().sum());
    let mut chosen: Vec<u32> = Vec::new();
    for (src, &degree) in degrees.iter().enumerate() {
        let window = BASE_WINDOW.max(degree).min(n - 1);
        let s = src as i64;
        let src = src as u32;
        chosen.clear();
        let mut attempts = 0usize;
        while chosen.len() < degree {
            let candidate = if rng.next_unit_open() <= LOCAL_SHARE {
                // Local link: jump 1..=window from the source, direction at
                // random, reflected off the index ends (wrapped in the rare
                // case the jump clears both ends).
                let k = 1 + rng.next_index(window) as i64;
                let raw = if rng.next_u64() & 1 == 0 {
                    s + k
                } else {
                    s - k
                };
                let reflected = if raw < 0 {
                    s + k
                } else if raw >= n as i64 {
                    s - k
                } else {
                    raw
                };
                let dst = if (0..n as i64).contains(&reflected) {
                    reflected
                } else {
                    (s + k).rem_euclid(n as i64)
                };
                dst as u32
            } else {
                pool[rng.next_index(pool.len())]
            };
            if candidate != src && !chosen.contains(&candidate) {
                chosen.push(candidate);
            } else {
                attempts += 1;
                if attempts > 4 * degree + 32 {
                    // Dense corner (degree close to n−1 with a saturated
                    // window): fall back to the first eligible ids in order.
                    for id in 0..n as u32 {
                        if chosen.len() == degree {
                            break;
                        }
                        if id != src && !chosen.contains(&id) {
                            chosen.push(id);
                        }
                    }
                }
            }
        }
        for &dst in &chosen {
            edges.push((src, dst));
            pool.push(dst);
        }
    }
    EdgeList::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> BenchConfig {
        BenchConfig {
            source: GraphSource::Synthetic {
                n: 30,
                avg_degree: 3.0,
                exponent: 2.5,
            },
            methods: vec![Method::Pi, Method::Di, Method::DiPlus],
            damping: vec![0.5],
            target: TargetRule::Fixed(1e-9),
            seed: 42,
            max_cycles: 10_000,
            r0: 1.0,
            decay: 0.25,
            complete: true,
            format: ReportFormat::Csv,
        }
    }

    #[test]
    fn synthetic_generator_contract() {
        let edges = generate_synthetic(10, 2.0, 2.5, 1).unwrap();
        assert_eq!(edges.n, 10);
        assert!(edges.edges.iter().all(|&(s, d)| s < 10 && d < 10 && s != d));
        let count = edges.edges.len() as f64;
        assert!((count - 20.0).abs() <= 6.0, "edge count {count}");
        // Per-source destinations are distinct.
        let mut sorted = edges.edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), edges.edges.len());
    }

    #[test]
    fn synthetic_generator_is_deterministic() {
        let a = generate_synthetic(50, 4.0, 2.3, 9).unwrap();
        let b = generate_synthetic(50, 4.0, 2.3, 9).unwrap();
        let c = generate_synthetic(50, 4.0, 2.3, 10).unwrap();
        assert_eq!(a.edges, b.edges);
        assert_ne!(a.edges, c.edges);
    }

    #[test]
    fn synthetic_generator_has_a_heavy_tail() {
        let edges = generate_synthetic(5000, 4.0, 2.1, 5).unwrap();
        let mut out = vec![0usize; 5000];
        for &(s, _) in &edges.edges {
            out[s as usize] += 1;
        }
        let max = out.iter().max().copied().unwrap();
        assert!(max > 40, "max out-degree {max} not ≫ the average 4");
    }

    #[test]
    fn synthetic_generator_validation() {
        assert!(generate_synthetic(1, 2.0, 2.5, 0).is_err());
        assert!(generate_synthetic(10, 0.5, 2.5, 0).is_err());
        assert!(generate_synthetic(10, 2.0, 2.0, 0).is_err());
        assert!(generate_synthetic(10, 2.0, f64::NAN, 0).is_err());
    }

    #[test]
    fn batch_runs_all_methods_and_attaches_gains() {
        let outcome = run_bench(&small_cfg()).unwrap();
        assert_eq!(outcome.rows.len(), 3);
        assert!(outcome.stats.dangling == 0, "completed graph");
        for row in &outcome.rows {
            let report = row.report.as_ref().expect("all defined at d = 0.5");
            assert!(report.converged, "{} did not converge", row.method);
            assert!(report.estimate <= 1e-9);
            assert!(report.gain_iterations.is_some());
            assert!(report.gain_time.is_some());
            if row.method == Method::Pi {
                assert_eq!(report.gain_iterations, Some(1.0));
            }
        }
    }

    #[test]
    fn undamped_baseline_cell_is_undefined() {
        let mut cfg = small_cfg();
        cfg.damping = vec![1.0];
        cfg.methods = vec![Method::Di, Method::DiPlus];
        let outcome = run_bench(&cfg).unwrap();
        assert!(outcome.rows[0].report.is_none());
        let di_plus = outcome.rows[1].report.as_ref().unwrap();
        assert!(di_plus.converged);
    }

    #[test]
    fn inv_n_target_rule_is_applied() {
        let mut cfg = small_cfg();
        cfg.target = TargetRule::InvN;
        let outcome = run_bench(&cfg).unwrap();
        for row in &outcome.rows {
            let report = row.report.as_ref().unwrap();
            assert!(report.estimate <= 1.0 / 30.0);
        }
    }

    #[test]
    fn identical_configs_reproduce_identical_solves() {
        let a = run_bench(&small_cfg()).unwrap();
        let b = run_bench(&small_cfg()).unwrap();
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            let (ra, rb) = (ra.report.as_ref().unwrap(), rb.report.as_ref().unwrap());
            assert_eq!(ra.vector, rb.vector);
            assert_eq!(ra.iterations, rb.iterations);
            assert_eq!(ra.diffusions, rb.diffusions);
        }
    }

    #[test]
    fn config_validation() {
        let mut cfg = small_cfg();
        cfg.methods.clear();
        assert!(run_bench(&cfg).is_err());
        let mut cfg = small_cfg();
        cfg.damping = vec![1.5];
        assert!(matches!(
            run_bench(&cfg).unwrap_err(),
            Error::DampingOutOfRange { .. }
        ));
        let mut cfg = small_cfg();
        cfg.target = TargetRule::Fixed(0.0);
        assert!(run_bench(&cfg).is_err());
        let mut cfg = small_cfg();
        cfg.max_cycles = 0;
        assert!(run_bench(&cfg).is_err());
    }

    #[test]
    fn empty_row_list_serializes_to_the_header() {
        let stats = GraphStats {
            n: 0,
            links: 0,
            dangling: 0,
            zero_in_recursive: 0,
            self_loops: 0,
            max_in: 0,
            max_out: 0,
        };
        assert_eq!(
            emit_report(&[], &stats, ReportFormat::Csv),
            "method,d,iterations,time_s,error,gain_iter,gain_time\n"
        );
    }

    #[test]
    fn csv_report_keeps_full_precision_and_marks_undefined_cells() {
        let mut cfg = small_cfg();
        cfg.damping = vec![0.85, 1.0];
        let outcome = run_bench(&cfg).unwrap();
        let csv = emit_report(&outcome.rows, &outcome.stats, ReportFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "method,d,iterations,time_s,error,gain_iter,gain_time"
        );
        assert_eq!(lines.len(), 1 + outcome.rows.len());
        assert!(lines[1].starts_with("pi,0.85,"));
        assert!(
            lines[1].ends_with(",1.0,1.0"),
            "baseline gains: {}",
            lines[1]
        );
        let di_undamped = lines
            .iter()
            .find(|l| l.starts_with("di,1.0,"))
            .expect("undefined row present");
        assert_eq!(*di_undamped, "di,1.0,undefined,undefined,undefined,,");
    }

    #[test]
    fn markdown_report_mirrors_the_table_layout() {
        let mut cfg = small_cfg();
        cfg.damping = vec![0.85, 1.0];
        let outcome = run_bench(&cfg).unwrap();
        let md = emit_report(&outcome.rows, &outcome.stats, ReportFormat::Markdown);
        assert!(md.contains("| N | L | L/N | D/N | E/N | O/N | max_in | max_out |"));
        assert!(md.contains("## d = 0.85"));
        assert!(md.contains("## d = 1"));
        assert!(md.contains("| method | nb iter | gain | time (s) | gain |"));
        assert!(md.contains("| pi |"));
        assert!(md.contains(" x |"));
        assert!(md.contains("| di | undefined | | | |"));
        assert!(md.contains("×"));
    }

    #[test]
    fn trace_serialization_covers_every_cell_sample() {
        let outcome = run_bench(&small_cfg()).unwrap();
        let trace = emit_trace(&outcome.rows);
        let lines: Vec<&str> = trace.lines().collect();
        assert_eq!(lines[0], "method,d,cost,estimate");
        let expected: usize = outcome
            .rows
            .iter()
            .filter_map(|r| r.report.as_ref())
            .map(|r| r.trace.len())
            .sum();
        assert_eq!(lines.len(), 1 + expected);
        assert!(lines[1].starts_with("pi,0.5,1.0,"));
    }
}
