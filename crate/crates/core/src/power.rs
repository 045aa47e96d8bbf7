//! Baseline power iteration (Jacobi-style full products) with relaxation for
//! the undamped case.
//!
//! Each step costs one full matrix-vector product, so its iteration count is
//! the unit the diffusion solvers' fractional `links_processed / L` counts
//! are compared against.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{SparseColumnMatrix, SparseRowMatrix};
use crate::report::{Method, SolverReport, TracePoint};

/// A linear action `x ↦ A·x` the power iteration can drive. Implemented by
/// the row-compressed matrix and by composite actions (sparse part plus
/// rank-one corrections) that are never materialized.
pub trait Operator {
    /// Dimension of the (square) action.
    fn dim(&self) -> usize;

    /// Compute `A·x` into `out` (`x.len() == out.len() == dim()`).
    fn apply_into(&self, x: &[f64], out: &mut [f64]);

    /// Allocating convenience wrapper around [`Operator::apply_into`].
    fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim()];
        self.apply_into(x, &mut out);
        out
    }
}

impl Operator for SparseRowMatrix {
    fn dim(&self) -> usize {
        self.n()
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) {
        self.mul_vec_into(x, out);
    }
}

impl Operator for SparseColumnMatrix {
    fn dim(&self) -> usize {
        self.n()
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) {
        out.copy_from_slice(&self.mul_vec(x));
    }
}

/// Power-iteration state: the current iterate and the blending weight.
///
/// A step computes `X ← (1−ω)·X + ω·(P·X)`; with ω = 1 this is the plain
/// iteration, with ω = 0.5 the lazy variant that converges on periodic
/// chains where the plain one oscillates. On a column-stochastic action the
/// mass σ(X) is preserved for any ω.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerState {
    x: Vec<f64>,
    relaxation: f64,
    iterations: u64,
}

impl PowerState {
    /// State starting from an explicit vector.
    pub fn new(x: Vec<f64>, relaxation: f64) -> Result<Self> {
        if !(relaxation > 0.0 && relaxation <= 1.0) {
            return Err(Error::InvalidParameter {
                what: format!("relaxation must lie in (0, 1], got {relaxation}"),
            });
        }
        if x.is_empty() {
            return Err(Error::InvalidParameter {
                what: "power iterate must be non-empty".into(),
            });
        }
        Ok(Self {
            x,
            relaxation,
            iterations: 0,
        })
    }

    /// The default start `X = e` (uniform, σ(X) = 1).
    pub fn uniform(n: usize, relaxation: f64) -> Result<Self> {
        Self::new(vec![1.0 / n as f64; n.max(1)], relaxation)
    }

    /// Current iterate.
    pub fn x(&self) -> &[f64] {
        &self.x
    }

    /// Blending weight ω.
    pub fn relaxation(&self) -> f64 {
        self.relaxation
    }

    /// Full products performed.
    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    /// One relaxed product against a generic action; returns the L1 step
    /// delta `|X_new − X_old|₁`.
    pub fn step(&mut self, op: &impl Operator) -> f64 {
        debug_assert_eq!(op.dim(), self.x.len());
        let mut product = vec![0.0; self.x.len()];
        op.apply_into(&self.x, &mut product);
        let w = self.relaxation;
        let mut delta = 0.0;
        for (xi, pi) in self.x.iter_mut().zip(&product) {
            let next = (1.0 - w) * *xi + w * pi;
            delta += (next - *xi).abs();
            *xi = next;
        }
        self.iterations += 1;
        delta
    }
}

/// One power step against the row-compressed matrix (the production access
/// pattern: `(P·X)_i` accumulates along row `i`). Returns the L1 step delta.
pub fn power_step(state: &mut PowerState, m: &SparseRowMatrix) -> f64 {
    state.step(m)
}

/// Solve `X = op(X)` by relaxed power iteration from `X = e`.
///
/// `op` must be mass-preserving (a column-stochastic matrix or the full
/// damped operator); the result is reported unnormalized. ω is 1 for d < 1
/// and 0.5 at d = 1 (periodicity damping). The per-step error estimate is
/// the bound `|ΔX|·d/(1−d)` for d < 1 and the heuristic `|ΔX|` at d = 1;
/// iteration `k`'s trace point has cost `k` (full products). Exhausting
/// `max_iter` reports `converged = false` rather than failing.
pub fn power_solve(op: &impl Operator, d: f64, target: f64, max_iter: u64) -> Result<SolverReport> {
    if !(d > 0.0 && d <= 1.0) {
        return Err(Error::DampingOutOfRange { d });
    }
    if max_iter == 0 {
        return Err(Error::InvalidParameter {
            what: "max_iter must be at least 1".into(),
        });
    }
    let relaxation = if d < 1.0 { 1.0 } else { 0.5 };
    let estimate_scale = if d < 1.0 { d / (1.0 - d) } else { 1.0 };

    let started = Instant::now();
    let mut state = PowerState::uniform(op.dim(), relaxation)?;
    let mut trace = Vec::new();
    let mut estimate = f64::INFINITY;
    let mut converged = false;
    while state.iterations < max_iter {
        let delta = state.step(op);
        estimate = estimate_scale * delta;
        trace.push(TracePoint {
            cost: state.iterations as f64,
            estimate,
        });
        if estimate <= target {
            converged = true;
            break;
        }
    }
    let wall_seconds = started.elapsed().as_secs_f64();

    Ok(SolverReport {
        method: Method::Pi,
        d,
        vector: state.x,
        iterations: state.iterations as f64,
        diffusions: 0,
        wall_seconds,
        estimate,
        estimate_is_heuristic: d >= 1.0,
        converged,
        trace,
        gain_iterations: None,
        gain_time: None,
    })
}
