//! The diffusion engine: fluid/history state, single-node diffusion, and the
//! threshold-swept cycle driver.
//!
//! The equation being solved is `X = P·X + B`. The state splits into a
//! history vector `H` (fluid already retired) and a fluid vector `F` (still
//! moving); one *diffusion* of node `i` retires its fluid `f = F_i` into
//! `H_i` and re-emits `f·p_ji` along every stored entry of column `i`. The
//! fundamental identity `H + F = P·H + B` holds after any diffusion sequence,
//! and for a column-stochastic matrix the fluid sum σ(F) is conserved
//! exactly, which is what makes the sign-balanced start `F₀ = P·e − e`
//! (σ(F₀) = 0) converge: positive and negative fluid can only cancel.
//!
//! Note the *history* sum is not conserved — each diffusion moves `f` into it
//! — so at d = 1, where solutions of `H = P·H + F₀` are only unique modulo
//! the stationary direction, different sweep orders converge to different
//! representatives. The normalized `H + e` is the same for all of them.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::SparseColumnMatrix;
use crate::report::{Method, SolverReport, TracePoint};
use crate::vecops;

/// The uniform probability vector `e`: all entries `1/n`, so σ(e) = 1 by
/// construction. Stored implicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformVector {
    n: usize,
}

impl UniformVector {
    /// Uniform vector of dimension `n >= 1`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "uniform vector needs n >= 1");
        Self { n }
    }

    /// Dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The common entry value `1/n`.
    pub fn value(&self) -> f64 {
        1.0 / self.n as f64
    }

    /// Materialize as a dense vector.
    pub fn materialize(&self) -> Vec<f64> {
        vec![self.value(); self.n]
    }
}

/// What a diffusion does with fluid on an empty column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DanglingMode {
    /// Fluid leaves the system (the raw sub-stochastic operator).
    Absorb,
    /// Fluid spreads uniformly over all nodes, i.e. the empty column acts as
    /// `e` (the completed operator).
    Redistribute,
}

/// The linear operator a diffusion runs against: `scale · m`, with empty
/// columns either absorbing or acting as `scale · e`.
///
/// Keeping the scalar outside the matrix avoids per-damping copies of the
/// link structure.
#[derive(Debug, Clone, Copy)]
pub struct DiffusionOperator<'a> {
    matrix: &'a SparseColumnMatrix,
    scale: f64,
    dangling: DanglingMode,
}

impl<'a> DiffusionOperator<'a> {
    /// The plain operator: the matrix itself, dangling columns absorbing.
    pub fn plain(matrix: &'a SparseColumnMatrix) -> Self {
        Self {
            matrix,
            scale: 1.0,
            dangling: DanglingMode::Absorb,
        }
    }

    /// `scale · matrix` with the chosen dangling behavior.
    pub fn scaled(matrix: &'a SparseColumnMatrix, scale: f64, dangling: DanglingMode) -> Self {
        Self {
            matrix,
            scale,
            dangling,
        }
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &SparseColumnMatrix {
        self.matrix
    }

    /// Scalar factor applied to every matrix action.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Dimension.
    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    /// Stored links `L`, the denominator of fractional iteration counts.
    pub fn links(&self) -> usize {
        self.matrix.nnz()
    }

    /// Apply the operator to a dense vector (used by identity checks, not by
    /// the diffusion hot path).
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = self.matrix.mul_vec(x);
        for v in &mut y {
            *v *= self.scale;
        }
        if self.dangling == DanglingMode::Redistribute {
            let n = self.n();
            let dangling_mass: f64 = (0..n)
                .filter(|&j| self.matrix.out_degree(j) == 0)
                .map(|j| x[j])
                .sum();
            let add = self.scale * dangling_mass / n as f64;
            if add != 0.0 {
                for v in &mut y {
                    *v += add;
                }
            }
        }
        y
    }
}

/// Mutable diffusion state: history, fluid, and the work counters the cost
/// model is built on.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionState {
    h: Vec<f64>,
    f: Vec<f64>,
    links_processed: u64,
    diffusions: u64,
}

impl DiffusionState {
    /// Start from `H = 0` with the given initial fluid.
    pub fn with_initial_fluid(f0: Vec<f64>) -> Self {
        let n = f0.len();
        Self {
            h: vec![0.0; n],
            f: f0,
            links_processed: 0,
            diffusions: 0,
        }
    }

    /// Dimension.
    pub fn n(&self) -> usize {
        self.h.len()
    }

    /// History vector `H`.
    pub fn history(&self) -> &[f64] {
        &self.h
    }

    /// Fluid vector `F`.
    pub fn fluid(&self) -> &[f64] {
        &self.f
    }

    /// Total links traversed by diffusions so far.
    pub fn links_processed(&self) -> u64 {
        self.links_processed
    }

    /// Number of single-node diffusions performed.
    pub fn diffusions(&self) -> u64 {
        self.diffusions
    }

    /// L1 norm of the fluid.
    pub fn fluid_l1(&self) -> f64 {
        vecops::l1_norm(&self.f)
    }

    /// σ(F), conserved exactly for column-stochastic operators.
    pub fn fluid_sum(&self) -> f64 {
        vecops::sum(&self.f)
    }

    /// σ(H); grows by the diffused fluid, *not* a conserved quantity.
    pub fn history_sum(&self) -> f64 {
        vecops::sum(&self.h)
    }

    /// Diffuse node `i`: retire `f = F_i` into `H_i`, zero `F_i`, re-emit
    /// `f · scale · p_ji` along column `i`. A self-loop entry re-adds its
    /// share to `F_i` after the zeroing. Counters: `links_processed` grows by
    /// the column's stored entries (or `n` for a redistributed dangling
    /// column, 0 for an absorbed one), `diffusions` by one.
    pub fn diffuse(&mut self, op: &DiffusionOperator<'_>, i: usize) -> Result<()> {
        let n = self.n();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let f = self.f[i];
        self.h[i] += f;
        self.f[i] = 0.0;
        let (rows, vals) = op.matrix.col(i);
        if rows.is_empty() {
            if op.dangling == DanglingMode::Redistribute {
                let share = f * op.scale / n as f64;
                for fj in self.f.iter_mut() {
                    *fj += share;
                }
                self.links_processed += n as u64;
            }
        } else {
            let outgoing = f * op.scale;
            for (&r, &v) in rows.iter().zip(vals) {
                self.f[r as usize] += outgoing * v;
            }
            self.links_processed += rows.len() as u64;
        }
        self.diffusions += 1;
        Ok(())
    }
}

/// Residual of the fundamental identity: `|H + F − op(H) − f0|₁`. Zero in
/// exact arithmetic after any diffusion sequence.
pub fn check_identity(state: &DiffusionState, op: &DiffusionOperator<'_>, f0: &[f64]) -> f64 {
    let ph = op.apply(state.history());
    state
        .history()
        .iter()
        .zip(state.fluid())
        .zip(ph.iter().zip(f0))
        .map(|((h, f), (p, b))| (h + f - p - b).abs())
        .sum()
}

/// Sign-balanced start for the stationary problem: `F₀ = P·e − e`, which has
/// σ(F₀) = 0 when `m` is column-stochastic (callers passing a sub-stochastic
/// matrix accept a non-zero fluid sum).
pub fn init_di_plus(m: &SparseColumnMatrix) -> DiffusionState {
    let e = UniformVector::new(m.n());
    let mut f0 = m.mul_vec(&e.materialize());
    let ev = e.value();
    for v in &mut f0 {
        *v -= ev;
    }
    DiffusionState::with_initial_fluid(f0)
}

/// Which nodes a cycle sweeps: node `i` is diffused when its fluid clears
/// `r(cycle) · max(out_degree(i), 1) / L`, with `r(cycle) = r0 · decay^cycle`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectionPolicy {
    /// Threshold scale of cycle 0.
    pub r0: f64,
    /// Multiplicative threshold decay per cycle, in (0, 1).
    pub decay: f64,
    /// Compare `|F_i|` (sign-balanced fluids) instead of `F_i` (non-negative
    /// fluids) against the threshold.
    pub use_absolute_value: bool,
}

impl SelectionPolicy {
    /// Validated policy.
    pub fn new(r0: f64, decay: f64, use_absolute_value: bool) -> Result<Self> {
        if !(r0 > 0.0 && r0.is_finite()) {
            return Err(Error::InvalidParameter {
                what: format!("selection r0 must be positive and finite, got {r0}"),
            });
        }
        if !(decay > 0.0 && decay < 1.0) {
            return Err(Error::InvalidParameter {
                what: format!("selection decay must lie in (0, 1), got {decay}"),
            });
        }
        Ok(Self {
            r0,
            decay,
            use_absolute_value,
        })
    }

    /// Threshold scale for a cycle index.
    pub fn threshold(&self, cycle: u64) -> f64 {
        self.r0 * self.decay.powi(cycle.min(i32::MAX as u64) as i32)
    }
}

impl Default for SelectionPolicy {
    /// `r0 = 1`, `decay = 0.25`, absolute-value rule.
    fn default() -> Self {
        Self {
            r0: 1.0,
            decay: 0.25,
            use_absolute_value: true,
        }
    }
}

/// Convergence target and cycle budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StoppingRule {
    /// Stop once the error estimate is at or below this.
    pub target: f64,
    /// Give up (reporting non-convergence) after this many cycles.
    pub max_cycles: u64,
}

impl StoppingRule {
    /// Plain constructor.
    pub fn new(target: f64, max_cycles: u64) -> Self {
        Self { target, max_cycles }
    }
}

/// How a cycle's error estimate is computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Estimator {
    /// `scale · |F|₁`. With `scale = 1/(1−d)` this is the exact remaining
    /// error for non-negative fluids and an upper bound for sign-balanced
    /// ones (d < 1).
    FluidNorm {
        /// Multiplier applied to the fluid norm.
        scale: f64,
    },
    /// `max(scale · |F|₁, |ΔH|₁ of the cycle)`: the d = 1 heuristic. Taking
    /// the max with the fluid norm stops a sparse early cycle (tiny |ΔH|
    /// because almost nothing was selected) from faking convergence.
    FluidAndDelta {
        /// Multiplier applied to the fluid-norm half.
        scale: f64,
    },
}

/// Everything an observer sees at the end of one cycle.
#[derive(Debug)]
pub struct CycleEvent<'a> {
    /// Cycle index, from 0.
    pub cycle: u64,
    /// Threshold scale `r` used this cycle.
    pub threshold: f64,
    /// Diffusions performed within this cycle.
    pub cycle_diffusions: u64,
    /// State after the cycle.
    pub state: &'a DiffusionState,
    /// Error estimate after the cycle.
    pub estimate: f64,
}

/// Outcome of [`drive_cycles`]: counters and convergence, with the state
/// itself left in the caller's `&mut DiffusionState`.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleOutcome {
    /// Whether the estimate reached the target.
    pub converged: bool,
    /// True when the fluid norm blew past the divergence limit (only with a
    /// `fluid_limit`).
    pub diverged: bool,
    /// Cycles executed.
    pub cycles: u64,
    /// Final error estimate.
    pub estimate: f64,
    /// One `(cost, estimate)` sample per cycle.
    pub trace: Vec<TracePoint>,
}

/// Run threshold-swept cycles until the estimate meets the stopping rule.
///
/// Each cycle sweeps nodes in ascending order once, diffusing those whose
/// fluid clears the policy threshold, then evaluates the estimator. An
/// optional `fluid_limit` aborts the run when `|F|₁` exceeds it (spectral
/// solves with an underestimated radius diverge this way). The observer runs
/// once per cycle; pass `|_| {}` when not needed.
pub fn drive_cycles(
    state: &mut DiffusionState,
    op: &DiffusionOperator<'_>,
    policy: &SelectionPolicy,
    estimator: Estimator,
    stop: &StoppingRule,
    fluid_limit: Option<f64>,
    mut observer: impl FnMut(&CycleEvent<'_>),
) -> CycleOutcome {
    let n = state.n();
    let links = op.links().max(1) as f64;
    let mut trace = Vec::new();

    // Degenerate and already-converged starts return without any cycle.
    let initial_fluid = state.fluid_l1();
    let initial_estimate = match estimator {
        Estimator::FluidNorm { scale } => scale * initial_fluid,
        // The delta half has no evidence yet; only exact zero fluid counts.
        Estimator::FluidAndDelta { .. } => {
            if initial_fluid == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        }
    };
    if initial_estimate <= stop.target {
        return CycleOutcome {
            converged: true,
            diverged: false,
            cycles: 0,
            estimate: initial_estimate,
            trace,
        };
    }

    let mut estimate = initial_estimate;
    let mut cycles = 0u64;
    while cycles < stop.max_cycles {
        let cycle = cycles;
        let r = policy.threshold(cycle);
        let mut cycle_diffusions = 0u64;
        let mut delta_h = 0.0;
        for i in 0..n {
            let fi = state.f[i];
            let magnitude = if policy.use_absolute_value {
                fi.abs()
            } else {
                fi
            };
            let degree = op.matrix.out_degree(i).max(1) as f64;
            if magnitude > r * degree / links {
                delta_h += fi.abs();
                state
                    .diffuse(op, i)
                    .expect("sweep index is always in range");
                cycle_diffusions += 1;
            }
        }
        cycles += 1;

        let fluid_l1 = state.fluid_l1();
        estimate = match estimator {
            Estimator::FluidNorm { scale } => scale * fluid_l1,
            Estimator::FluidAndDelta { scale } => (scale * fluid_l1).max(delta_h),
        };
        trace.push(TracePoint {
            cost: state.links_processed as f64 / links,
            estimate,
        });
        observer(&CycleEvent {
            cycle,
            threshold: r,
            cycle_diffusions,
            state,
            estimate,
        });

        if let Some(limit) = fluid_limit {
            if fluid_l1 > limit {
                return CycleOutcome {
                    converged: false,
                    diverged: true,
                    cycles,
                    estimate,
                    trace,
                };
            }
        }
        if estimate <= stop.target {
            return CycleOutcome {
                converged: true,
                diverged: false,
                cycles,
                estimate,
                trace,
            };
        }
    }
    CycleOutcome {
        converged: false,
        diverged: false,
        cycles,
        estimate,
        trace,
    }
}

/// Solve the stationary problem `X = m·X` by cycled diffusion from the
/// sign-balanced start, returning the normalized `H + e`.
///
/// `m` should be column-stochastic (complete the graph first); the error
/// estimate at d = 1 is heuristic (`max(|F|₁, cycle |ΔH|₁)`). Non-convergence
/// within the cycle budget is reported, not an error.
pub fn run_cycles(
    state: &mut DiffusionState,
    m: &SparseColumnMatrix,
    policy: &SelectionPolicy,
    stop: &StoppingRule,
) -> Result<SolverReport> {
    let started = Instant::now();
    let op = DiffusionOperator::plain(m);
    let outcome = drive_cycles(
        state,
        &op,
        policy,
        Estimator::FluidAndDelta { scale: 1.0 },
        stop,
        None,
        |_| {},
    );
    let wall_seconds = started.elapsed().as_secs_f64();

    let e = UniformVector::new(m.n()).value();
    let mut vector: Vec<f64> = state.history().iter().map(|h| h + e).collect();
    vecops::normalize_sum_to_one(&mut vector)?;

    Ok(SolverReport {
        method: if policy.use_absolute_value {
            Method::DiPlus
        } else {
            Method::Di
        },
        d: 1.0,
        vector,
        iterations: state.links_processed as f64 / m.nnz().max(1) as f64,
        diffusions: state.diffusions,
        wall_seconds,
        estimate: outcome.estimate,
        estimate_is_heuristic: true,
        converged: outcome.converged,
        trace: outcome.trace,
        gain_iterations: None,
        gain_time: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Columns (0, 1) and (0.5, 0.5): the worked 2-state chain with
    /// stationary vector (1/3, 2/3).
    fn two_state_chain() -> SparseColumnMatrix {
        SparseColumnMatrix::from_triplets(2, &[(1, 0, 1.0), (0, 1, 0.5), (1, 1, 0.5)]).unwrap()
    }

    #[test]
    fn init_is_sign_balanced() {
        let m = two_state_chain();
        let state = init_di_plus(&m);
        assert!((state.fluid()[0] + 0.25).abs() < 1e-15);
        assert!((state.fluid()[1] - 0.25).abs() < 1e-15);
        assert!(state.fluid_sum().abs() < 1e-15);
    }

    #[test]
    fn init_on_doubly_stochastic_is_zero() {
        // 2-cycle permutation: P·e = e exactly.
        let m = SparseColumnMatrix::from_triplets(2, &[(1, 0, 1.0), (0, 1, 1.0)]).unwrap();
        let state = init_di_plus(&m);
        assert_eq!(state.fluid(), &[0.0, 0.0]);
    }

    #[test]
    fn diffusing_one_node_matches_the_worked_example() {
        let m = two_state_chain();
        let mut state = init_di_plus(&m);
        let op = DiffusionOperator::plain(&m);
        let before = state.fluid_l1();
        state.diffuse(&op, 1).unwrap();
        assert_eq!(state.history(), &[0.0, 0.25]);
        assert!((state.fluid()[0] + 0.125).abs() < 1e-15);
        assert!((state.fluid()[1] - 0.125).abs() < 1e-15);
        assert!((before - 0.5).abs() < 1e-15);
        assert!((state.fluid_l1() - 0.25).abs() < 1e-15);
        assert_eq!(state.diffusions(), 1);
        assert_eq!(state.links_processed(), 2);
    }

    #[test]
    fn diffuse_rejects_out_of_range() {
        let m = two_state_chain();
        let mut state = init_di_plus(&m);
        let op = DiffusionOperator::plain(&m);
        assert!(matches!(
            state.diffuse(&op, 2).unwrap_err(),
            Error::IndexOutOfRange { index: 2, n: 2 }
        ));
    }

    #[test]
    fn self_loop_returns_fluid_share() {
        // Column 0 = {0: 0.5, 1: 0.5}: half the diffused fluid comes back.
        let m =
            SparseColumnMatrix::from_triplets(2, &[(0, 0, 0.5), (1, 0, 0.5), (0, 1, 1.0)]).unwrap();
        let mut state = DiffusionState::with_initial_fluid(vec![0.4, 0.0]);
        let op = DiffusionOperator::plain(&m);
        state.diffuse(&op, 0).unwrap();
        assert!((state.fluid()[0] - 0.2).abs() < 1e-15);
        assert!((state.fluid()[1] - 0.2).abs() < 1e-15);
        assert!((state.history()[0] - 0.4).abs() < 1e-15);
    }

    #[test]
    fn dangling_column_absorbs_or_redistributes() {
        // Single edge 0 -> 1: column 1 is empty.
        let m = SparseColumnMatrix::from_triplets(2, &[(1, 0, 1.0)]).unwrap();

        let mut absorb = DiffusionState::with_initial_fluid(vec![0.0, 0.5]);
        absorb.diffuse(&DiffusionOperator::plain(&m), 1).unwrap();
        assert_eq!(absorb.fluid(), &[0.0, 0.0]);
        assert_eq!(absorb.links_processed(), 0);

        let mut spread = DiffusionState::with_initial_fluid(vec![0.0, 0.5]);
        let op = DiffusionOperator::scaled(&m, 0.5, DanglingMode::Redistribute);
        spread.diffuse(&op, 1).unwrap();
        // 0.5 fluid scaled by d = 0.5 and split over 2 nodes: 0.125 each.
        assert!((spread.fluid()[0] - 0.125).abs() < 1e-15);
        assert!((spread.fluid()[1] - 0.125).abs() < 1e-15);
        assert_eq!(spread.links_processed(), 2);
    }

    #[test]
    fn fluid_sum_is_conserved_on_stochastic_matrices() {
        let m = two_state_chain();
        let mut state = init_di_plus(&m);
        let op = DiffusionOperator::plain(&m);
        for i in [1, 0, 0, 1, 1, 0, 1, 1] {
            state.diffuse(&op, i).unwrap();
            assert!(state.fluid_sum().abs() < 1e-15);
        }
    }

    #[test]
    fn identity_holds_after_arbitrary_diffusions() {
        let m = two_state_chain();
        let mut state = init_di_plus(&m);
        let f0 = state.fluid().to_vec();
        let op = DiffusionOperator::plain(&m);
        for i in [0, 1, 1, 0, 1] {
            state.diffuse(&op, i).unwrap();
        }
        assert!(check_identity(&state, &op, &f0) < 1e-14);
    }

    #[test]
    fn run_cycles_solves_the_two_state_chain() {
        let m = two_state_chain();
        let mut state = init_di_plus(&m);
        let report = run_cycles(
            &mut state,
            &m,
            &SelectionPolicy::default(),
            &StoppingRule::new(1e-10, 1000),
        )
        .unwrap();
        assert!(report.converged);
        assert_eq!(report.method, Method::DiPlus);
        assert!((report.vector[0] - 1.0 / 3.0).abs() < 1e-10);
        assert!((report.vector[1] - 2.0 / 3.0).abs() < 1e-10);
        // Fractional iterations: links processed over L.
        assert!(
            (report.iterations - state.links_processed() as f64 / m.nnz() as f64).abs() < 1e-15
        );
    }

    #[test]
    fn zero_fluid_returns_immediately() {
        let m = SparseColumnMatrix::from_triplets(2, &[(1, 0, 1.0), (0, 1, 1.0)]).unwrap();
        let mut state = init_di_plus(&m);
        let report = run_cycles(
            &mut state,
            &m,
            &SelectionPolicy::default(),
            &StoppingRule::new(1e-10, 1000),
        )
        .unwrap();
        assert!(report.converged);
        assert_eq!(report.diffusions, 0);
        assert_eq!(report.iterations, 0.0);
        assert_eq!(report.estimate, 0.0);
        assert!((report.vector[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn oversized_threshold_reports_non_convergence() {
        let m = two_state_chain();
        let mut state = init_di_plus(&m);
        let policy = SelectionPolicy::new(1e30, 0.25, true).unwrap();
        let report = run_cycles(&mut state, &m, &policy, &StoppingRule::new(1e-10, 50)).unwrap();
        assert!(!report.converged);
        assert_eq!(report.diffusions, 0);
        assert!(report.estimate > 1e-10);
    }

    #[test]
    fn policy_validation() {
        assert!(SelectionPolicy::new(0.0, 0.25, true).is_err());
        assert!(SelectionPolicy::new(1.0, 1.0, true).is_err());
        assert!(SelectionPolicy::new(1.0, 0.0, true).is_err());
        assert!(SelectionPolicy::new(-1.0, 0.5, true).is_err());
        assert!(SelectionPolicy::new(2.0, 0.99, false).is_ok());
    }

    #[test]
    fn threshold_decays_geometrically() {
        let p = SelectionPolicy::new(2.0, 0.5, true).unwrap();
        assert_eq!(p.threshold(0), 2.0);
        assert_eq!(p.threshold(1), 1.0);
        assert_eq!(p.threshold(3), 0.25);
    }

    #[test]
    fn different_sweep_orders_agree_after_normalization() {
        // Same matrix, two very different schedules: the raw H vectors
        // differ (d = 1 solutions are unique only modulo the stationary
        // direction) but the normalized results must match.
        let m = two_state_chain();
        let stop = StoppingRule::new(1e-12, 10_000);

        let mut a = init_di_plus(&m);
        let fast = SelectionPolicy::new(1.0, 0.25, true).unwrap();
        let ra = run_cycles(&mut a, &m, &fast, &stop).unwrap();

        let mut b = init_di_plus(&m);
        let slow = SelectionPolicy::new(0.001, 0.9, true).unwrap();
        let rb = run_cycles(&mut b, &m, &slow, &stop).unwrap();

        assert!(ra.converged && rb.converged);
        assert!(vecops::l1_dist(&ra.vector, &rb.vector) < 1e-9);
    }

    #[test]
    fn operator_apply_matches_manual_product() {
        let m =
            SparseColumnMatrix::from_triplets(3, &[(1, 0, 1.0), (0, 2, 0.5), (2, 2, 0.5)]).unwrap();
        let op = DiffusionOperator::scaled(&m, 0.5, DanglingMode::Redistribute);
        let x = [0.3, 0.6, 0.1];
        let y = op.apply(&x);
        // Column 1 is empty: 0.6 redistributes as 0.5 * 0.6 / 3 = 0.1 each.
        assert!((y[0] - (0.5 * 0.05 + 0.1)).abs() < 1e-15);
        assert!((y[1] - (0.5 * 0.3 + 0.1)).abs() < 1e-15);
        assert!((y[2] - (0.5 * 0.05 + 0.1)).abs() < 1e-15);
    }
}
