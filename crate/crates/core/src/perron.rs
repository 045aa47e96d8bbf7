//! Dominant eigenvector of a non-negative matrix by diffusion: scale the
//! matrix to unit spectral radius (`P′ = ρ⁻¹·P`), then run the sign-balanced
//! diffusion on `(P′, P′·e − e)` exactly as in the stochastic case.
//!
//! `P′` is column-stochastic only in the PageRank special case, so the L1
//! fluid norm loses its exact-error meaning here. The quantity that is
//! conserved instead is the fluid sum weighted by the left eigenvector `V`
//! of `P′` (`σ_V(F) = Σᵢ Fᵢ·vᵢ`), and `|F|_V` is non-increasing — the
//! algorithm never needs `V`, but the diagnostics in this module expose both
//! so tests can observe the convergence argument directly.

use std::time::Instant;

use crate::diffusion::{
    drive_cycles, DanglingMode, DiffusionOperator, DiffusionState, Estimator, SelectionPolicy,
    StoppingRule, UniformVector,
};
use crate::error::{Error, Result};
use crate::graph::SparseColumnMatrix;
use crate::report::{Method, SolverReport};
use crate::vecops;

/// Iteration budget for the spectral-radius estimate when the caller does
/// not supply ρ.
const RHO_ESTIMATE_ITERS: u64 = 1000;
/// Relative stability demanded of the radius estimate.
const RHO_ESTIMATE_TOL: f64 = 1e-13;
/// Fluid growth beyond this multiple of the initial norm aborts the solve
/// (the scaled matrix still has spectral radius > 1, i.e. ρ was
/// underestimated).
const DIVERGENCE_FACTOR: f64 = 10.0;

/// An eigenvector problem: non-negative matrix, irreducibility intended,
/// with the spectral radius either known or left to estimation.
#[derive(Debug, Clone)]
pub struct PerronProblem {
    m: SparseColumnMatrix,
    rho: Option<f64>,
}

impl PerronProblem {
    /// Validated instance; `rho`, when given, must be positive and finite.
    pub fn new(m: SparseColumnMatrix, rho: Option<f64>) -> Result<Self> {
        if let Some(r) = rho {
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::InvalidParameter {
                    what: format!("spectral radius must be positive and finite, got {r}"),
                });
            }
        }
        Ok(Self { m, rho })
    }

    /// The matrix.
    pub fn matrix(&self) -> &SparseColumnMatrix {
        &self.m
    }

    /// The known spectral radius, if any.
    pub fn rho(&self) -> Option<f64> {
        self.rho
    }
}

/// Outcome of [`estimate_rho`]: the estimate, its relative stability gap,
/// the products spent, and whether the gap met the tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoEstimate {
    /// Estimated spectral radius.
    pub rho: f64,
    /// Relative change of the estimate over the last two refinements.
    pub residual: f64,
    /// Matrix products performed.
    pub iterations: u64,
    /// Whether `residual ≤ tol` was reached within the budget.
    pub reliable: bool,
}

/// Power-method estimate of the spectral radius: iterate `y ← P·y` from
/// `y = e`, re-normalizing each step, and take the geometric mean of two
/// consecutive norm ratios (which cancels period-2 oscillation — on a
/// two-periodic matrix the plain ratio never settles while the mean is exact
/// from the first pair). Never errors: an estimate that fails to stabilize
/// within `iters` products comes back with `reliable = false`.
pub fn estimate_rho(m: &SparseColumnMatrix, iters: u64, tol: f64) -> Result<RhoEstimate> {
    let dangling = m.dangling_nodes();
    if !dangling.is_empty() {
        return Err(Error::EmptyColumns {
            count: dangling.len(),
        });
    }
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter {
            what: format!("rho tolerance must be non-negative and finite, got {tol}"),
        });
    }
    let mut y = UniformVector::new(m.n()).materialize();
    let mut prev_ratio: Option<f64> = None;
    let mut rho = 0.0;
    let mut have_rho = false;
    let mut residual = f64::INFINITY;
    let mut performed = 0;
    for k in 1..=iters {
        let z = m.mul_vec(&y);
        performed = k;
        // y is kept at unit L1 norm, so the growth ratio is |z|₁ itself.
        let ratio = vecops::l1_norm(&z);
        if ratio == 0.0 {
            // All mass annihilated: only possible with zero columns ruled
            // out above, but guard against pathological cancellation anyway.
            return Ok(RhoEstimate {
                rho: 0.0,
                residual: f64::INFINITY,
                iterations: k,
                reliable: false,
            });
        }
        y = z;
        for v in &mut y {
            *v /= ratio;
        }
        if let Some(r_prev) = prev_ratio {
            let refined = (ratio * r_prev).sqrt();
            if have_rho {
                residual = (refined - rho).abs() / refined.max(f64::MIN_POSITIVE);
                rho = refined;
                if residual <= tol {
                    return Ok(RhoEstimate {
                        rho,
                        residual,
                        iterations: k,
                        reliable: true,
                    });
                }
            } else {
                rho = refined;
                have_rho = true;
            }
        }
        prev_ratio = Some(ratio);
    }
    Ok(RhoEstimate {
        rho,
        residual,
        iterations: performed,
        reliable: false,
    })
}

fn resolve_rho(prob: &PerronProblem) -> Result<f64> {
    match prob.rho {
        Some(r) => Ok(r),
        None => {
            let est = estimate_rho(prob.matrix(), RHO_ESTIMATE_ITERS, RHO_ESTIMATE_TOL)?;
            if !est.reliable {
                return Err(Error::RhoEstimateUnreliable {
                    residual: est.residual,
                    iterations: est.iterations,
                });
            }
            Ok(est.rho)
        }
    }
}

/// Solve `ρ·X = P·X` by diffusion on the unit-radius scaling.
///
/// The output is normalized to σ(X) = 1 (the canonical positive
/// representative). The inner diffusion is driven to `stop.target / 2` — a
/// safety factor absorbing radius-estimation error — and its reported
/// estimate is the plain fluid norm `|F|₁`, flagged heuristic since the
/// non-stochastic case has no exact-error formula. Fluid growth past 10×
/// the initial norm aborts with a divergence error (the signature of an
/// underestimated ρ).
pub fn perron_solve(
    prob: &PerronProblem,
    policy: &SelectionPolicy,
    stop: &StoppingRule,
) -> Result<SolverReport> {
    let m = prob.matrix();
    let dangling = m.dangling_nodes();
    if !dangling.is_empty() {
        return Err(Error::EmptyColumns {
            count: dangling.len(),
        });
    }
    let rho = resolve_rho(prob)?;
    let policy = SelectionPolicy {
        use_absolute_value: true,
        ..*policy
    };

    let started = Instant::now();
    let op = DiffusionOperator::scaled(m, 1.0 / rho, DanglingMode::Absorb);
    let e = UniformVector::new(m.n());
    let mut f0 = op.apply(&e.materialize());
    for v in &mut f0 {
        *v -= e.value();
    }
    let initial_fluid = vecops::l1_norm(&f0);
    let mut state = DiffusionState::with_initial_fluid(f0);
    let inner_stop = StoppingRule::new(stop.target / 2.0, stop.max_cycles);
    let fluid_limit = (initial_fluid > 0.0).then_some(DIVERGENCE_FACTOR * initial_fluid);
    let outcome = drive_cycles(
        &mut state,
        &op,
        &policy,
        Estimator::FluidNorm { scale: 1.0 },
        &inner_stop,
        fluid_limit,
        |_| {},
    );
    if outcome.diverged {
        return Err(Error::FluidDiverged {
            initial: initial_fluid,
            current: state.fluid_l1(),
        });
    }
    let wall_seconds = started.elapsed().as_secs_f64();

    let mut vector: Vec<f64> = state.history().iter().map(|h| h + e.value()).collect();
    vecops::normalize_sum_to_one(&mut vector)?;

    Ok(SolverReport {
        method: Method::DiPlus,
        d: 1.0,
        vector,
        iterations: state.links_processed() as f64 / m.nnz().max(1) as f64,
        diffusions: state.diffusions(),
        wall_seconds,
        estimate: outcome.estimate,
        estimate_is_heuristic: true,
        converged: outcome.converged,
        trace: outcome.trace,
        gain_iterations: None,
        gain_time: None,
    })
}

/// Where a weight vector came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSource {
    /// Computed by a reference eigensolver.
    Oracle,
    /// Supplied by the caller.
    User,
}

/// A positive left-eigenvector weight vector for the V-norm diagnostics.
#[derive(Debug, Clone)]
pub struct LeftEigenvectorWeights {
    v: Vec<f64>,
    source: WeightSource,
}

impl LeftEigenvectorWeights {
    /// Validated weights: every entry strictly positive and finite.
    pub fn new(v: Vec<f64>, source: WeightSource) -> Result<Self> {
        if v.is_empty() || v.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            return Err(Error::InvalidParameter {
                what: "left-eigenvector weights must be positive and finite".into(),
            });
        }
        Ok(Self { v, source })
    }

    /// The weights.
    pub fn weights(&self) -> &[f64] {
        &self.v
    }

    /// Where the weights came from.
    pub fn source(&self) -> WeightSource {
        self.source
    }

    /// Check that `V` is a left fixed vector of the scaled operator:
    /// `|Vᵗ·P′ − Vᵗ|₁ ≤ 1e-8·|V|₁`.
    pub fn validate(&self, op: &DiffusionOperator<'_>) -> Result<()> {
        let m = op.matrix();
        if self.v.len() != m.n() {
            return Err(Error::InvalidParameter {
                what: format!(
                    "weight dimension {} does not match matrix dimension {}",
                    self.v.len(),
                    m.n()
                ),
            });
        }
        let mut residual = 0.0;
        for j in 0..m.n() {
            let (rows, vals) = m.col(j);
            let vt_col: f64 = rows
                .iter()
                .zip(vals)
                .map(|(&i, &p)| self.v[i as usize] * p * op.scale())
                .sum();
            residual += (vt_col - self.v[j]).abs();
        }
        let bound = 1e-8 * vecops::l1_norm(&self.v);
        if residual > bound {
            return Err(Error::InvalidParameter {
                what: format!(
                    "weights are not a left eigenvector: residual {residual:.3e} exceeds {bound:.3e}"
                ),
            });
        }
        Ok(())
    }

    /// Weighted norm `|F|_V = Σᵢ |Fᵢ·vᵢ|`.
    pub fn norm(&self, f: &[f64]) -> f64 {
        f.iter().zip(&self.v).map(|(x, v)| (x * v).abs()).sum()
    }

    /// Weighted sum `σ_V(F) = Σᵢ Fᵢ·vᵢ`.
    pub fn sum(&self, f: &[f64]) -> f64 {
        f.iter().zip(&self.v).map(|(x, v)| x * v).sum()
    }
}

/// Run the scaled diffusion recording `|F|_V` after every single diffusion
/// (plus the initial value at index 0), for at most `steps` diffusions.
/// Purely a test diagnostic for the monotonicity argument.
pub fn v_norm_trace(
    prob: &PerronProblem,
    weights: &LeftEigenvectorWeights,
    policy: &SelectionPolicy,
    steps: u64,
) -> Result<Vec<f64>> {
    let m = prob.matrix();
    let rho = resolve_rho(prob)?;
    let op = DiffusionOperator::scaled(m, 1.0 / rho, DanglingMode::Absorb);
    weights.validate(&op)?;

    let e = UniformVector::new(m.n());
    let mut f0 = op.apply(&e.materialize());
    for v in &mut f0 {
        *v -= e.value();
    }
    let mut state = DiffusionState::with_initial_fluid(f0);
    let mut trace = vec![weights.norm(state.fluid())];

    let links = m.nnz().max(1) as f64;
    let mut cycle = 0u64;
    // A threshold below any representable positive fluid can never select
    // again once the fluid is exactly zero; cap the sweeps regardless.
    let max_cycles = 10_000u64;
    'outer: while (trace.len() as u64) <= steps && cycle < max_cycles {
        let r = policy.threshold(cycle);
        for i in 0..m.n() {
            let fi = state.fluid()[i];
            let magnitude = if policy.use_absolute_value {
                fi.abs()
            } else {
                fi
            };
            let degree = m.out_degree(i).max(1) as f64;
            if magnitude > r * degree / links {
                state.diffuse(&op, i)?;
                trace.push(weights.norm(state.fluid()));
                if trace.len() as u64 > steps {
                    break 'outer;
                }
            }
        }
        if state.fluid_l1() == 0.0 {
            break;
        }
        cycle += 1;
    }
    Ok(trace)
}
