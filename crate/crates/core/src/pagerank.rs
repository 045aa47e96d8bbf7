//! PageRank assembly: damping, dangling handling, the sign-balanced
//! diffusion start, the classic non-negative-fluid baseline, and the
//! rescaling certificate connecting the raw (sub-stochastic) solve to the
//! completed solution.
//!
//! With `P_g` the raw link matrix (empty columns for dangling nodes), the
//! damped problem is the fixed point of
//!
//! ```text
//! X ↦ d·P_g·X + d·(Σ_{j dangling} X_j)·e + (1−d)·σ(X)·e
//! ```
//!
//! The diffusion route never builds that completed operator: it solves the
//! raw system `H = d·P_g·H + F₀` with `F₀ = d·P_g·e − d·σ(P_g·e)·e` and
//! recovers the answer as the normalized `H + e`. The ratio between that
//! normalization and 1 is exactly the completion correction, recorded as a
//! [`RescalingCertificate`].

use std::time::Instant;

use crate::diffusion::{
    drive_cycles, DanglingMode, DiffusionOperator, DiffusionState, Estimator, SelectionPolicy,
    StoppingRule, UniformVector,
};
use crate::error::{Error, Result};
use crate::graph::{SparseColumnMatrix, SparseRowMatrix};
use crate::power::Operator;
use crate::report::{Method, SolverReport};
use crate::vecops;

/// A PageRank instance: raw link matrix plus damping factor.
#[derive(Debug, Clone)]
pub struct PageRankProblem {
    pg: SparseColumnMatrix,
    d: f64,
    completed: bool,
}

impl PageRankProblem {
    /// Validated instance. `completed` records whether random graph
    /// completion was applied upstream (informational; the solvers check
    /// structural requirements directly).
    pub fn new(pg: SparseColumnMatrix, d: f64, completed: bool) -> Result<Self> {
        if !(d > 0.0 && d <= 1.0) {
            return Err(Error::DampingOutOfRange { d });
        }
        for j in 0..pg.n() {
            let (_, vals) = pg.col(j);
            if let Some(&v) = vals.iter().find(|v| **v > 1.0 + 1e-12) {
                return Err(Error::InvalidParameter {
                    what: format!("matrix entries must lie in [0, 1], column {j} holds {v}"),
                });
            }
        }
        Ok(Self { pg, d, completed })
    }

    /// The raw link matrix.
    pub fn matrix(&self) -> &SparseColumnMatrix {
        &self.pg
    }

    /// Damping factor.
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Whether random completion was applied upstream.
    pub fn completed(&self) -> bool {
        self.completed
    }

    /// Dimension.
    pub fn n(&self) -> usize {
        self.pg.n()
    }
}

/// Which system the diffusion runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiffusionForm {
    /// Diffuse on the raw `d·P_g` (dangling fluid absorbed) and recover the
    /// completed answer by the final normalization. The cheap default.
    #[default]
    Raw,
    /// Diffuse on the dangling-completed `d·P̄_g` directly; the final
    /// normalization is then a no-op up to rounding. Exists to demonstrate
    /// both routes land on the same vector.
    Completed,
}

/// Diagnostic connecting the raw solve to the completed solution:
/// `H_completed + e = scale · (H_raw + e)` with
/// `scale = (1−d+d·f) / (1−d+d·f1)` and `f = f1 + f2`.
///
/// `f1 = 1 − σ(P_g·e)` is the dangling mass fraction; `f2` is the matching
/// correction `σ(H′ − P_g·H′)` of the completed history `H′`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RescalingCertificate {
    /// Dangling mass fraction of the raw matrix.
    pub f1: f64,
    /// Completion correction measured on (or implied by) the converged run.
    pub f2: f64,
    /// `f1 + f2`.
    pub f: f64,
    /// The normalization factor relating the two systems.
    pub scale: f64,
}

/// The full damped operator, as a sparse row part plus two implicit rank-one
/// corrections (dangling redistribution and teleport). The dense completion
/// is never materialized.
#[derive(Debug, Clone)]
pub struct FullOperator {
    rows: SparseRowMatrix,
    dangling: Vec<u32>,
    d: f64,
    n: usize,
}

impl FullOperator {
    /// Damping factor.
    pub fn d(&self) -> f64 {
        self.d
    }
}

impl Operator for FullOperator {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) {
        self.rows.mul_vec_into(x, out);
        let dangling_mass: f64 = self.dangling.iter().map(|&j| x[j as usize]).sum();
        let sigma = vecops::sum(x);
        let add = (self.d * dangling_mass + (1.0 - self.d) * sigma) / self.n as f64;
        for o in out.iter_mut() {
            *o = self.d * *o + add;
        }
    }
}

/// Assemble the full damped action `X ↦ d·P̄_g·X + (1−d)·σ(X)·e`. Mass is
/// preserved exactly: σ(op(X)) = σ(X).
pub fn build_full_operator(prob: &PageRankProblem) -> FullOperator {
    FullOperator {
        rows: SparseRowMatrix::from_columns(&prob.pg),
        dangling: prob.pg.dangling_nodes(),
        d: prob.d,
        n: prob.n(),
    }
}

/// Sign-balanced PageRank diffusion. Returns the solver report together with
/// the rescaling certificate.
///
/// The absolute-value selection rule is always used (the policy's rule flag
/// is overridden). For d < 1 the reported estimate is the bound `|F|₁/(1−d)`;
/// at d = 1 the matrix must have no empty columns and the estimate is the
/// heuristic `max(|F|₁, per-cycle |ΔH|₁)`. Iteration counts are fractional:
/// links traversed over the stored link count (a dangling redistribution in
/// the completed form counts `n` traversals).
pub fn di_plus_pagerank(
    prob: &PageRankProblem,
    policy: &SelectionPolicy,
    stop: &StoppingRule,
    form: DiffusionForm,
) -> Result<(SolverReport, RescalingCertificate)> {
    let d = prob.d;
    let n = prob.n();
    let e = UniformVector::new(n);
    if d >= 1.0 && !prob.pg.dangling_nodes().is_empty() {
        return Err(Error::EmptyColumns {
            count: prob.pg.dangling_nodes().len(),
        });
    }
    let policy = SelectionPolicy {
        use_absolute_value: true,
        ..*policy
    };

    let started = Instant::now();
    let dangling = match form {
        DiffusionForm::Raw => DanglingMode::Absorb,
        DiffusionForm::Completed => DanglingMode::Redistribute,
    };
    let op = DiffusionOperator::scaled(&prob.pg, d, dangling);

    // F₀ = d·(P·e − σ(P·e)·e) for whichever P the run diffuses on; σ(F₀) = 0
    // by construction.
    let pe = match form {
        DiffusionForm::Raw => prob.pg.mul_vec(&e.materialize()),
        DiffusionForm::Completed => {
            DiffusionOperator::scaled(&prob.pg, 1.0, DanglingMode::Redistribute)
                .apply(&e.materialize())
        }
    };
    let sigma_pe = vecops::sum(&pe);
    let f0: Vec<f64> = pe.iter().map(|p| d * (p - sigma_pe * e.value())).collect();
    let mut state = DiffusionState::with_initial_fluid(f0);

    let estimator = if d < 1.0 {
        Estimator::FluidNorm {
            scale: 1.0 / (1.0 - d),
        }
    } else {
        Estimator::FluidAndDelta { scale: 1.0 }
    };
    let outcome = drive_cycles(&mut state, &op, &policy, estimator, stop, None, |_| {});
    let wall_seconds = started.elapsed().as_secs_f64();

    let mut vector: Vec<f64> = state.history().iter().map(|h| h + e.value()).collect();
    let measured_sum = vecops::sum(&vector);
    vecops::normalize_sum_to_one(&mut vector)?;
    let measured_scale = 1.0 / measured_sum;

    // f1 always describes the raw matrix; the dangling fraction of e.
    let f1 = 1.0 - vecops::sum(&prob.pg.mul_vec(&e.materialize()));
    let certificate = match form {
        DiffusionForm::Raw => {
            // The run's own normalization is the completion factor; back out
            // f2 from scale = (1−d+d·f)/(1−d+d·f1).
            let f2 = if d < 1.0 {
                (measured_scale - 1.0) * (1.0 - d + d * f1) / d
            } else {
                // d = 1 requires no empty columns, so f1 = 0 and f2 follows.
                (measured_scale - 1.0) * f1
            };
            RescalingCertificate {
                f1,
                f2,
                f: f1 + f2,
                scale: measured_scale,
            }
        }
        DiffusionForm::Completed => {
            // The converged history is already the completed H′; measure f2
            // directly as σ(H′ − P_g·H′) and report the factor a raw run
            // would have needed.
            let h = state.history();
            let pgh = prob.pg.mul_vec(h);
            let f2 = vecops::sum(h) - vecops::sum(&pgh);
            let f = f1 + f2;
            let scale = if d < 1.0 {
                (1.0 - d + d * f) / (1.0 - d + d * f1)
            } else {
                measured_scale
            };
            RescalingCertificate { f1, f2, f, scale }
        }
    };

    let report = SolverReport {
        method: Method::DiPlus,
        d,
        vector,
        iterations: state.links_processed() as f64 / prob.pg.nnz().max(1) as f64,
        diffusions: state.diffusions(),
        wall_seconds,
        estimate: outcome.estimate,
        estimate_is_heuristic: d >= 1.0,
        converged: outcome.converged,
        trace: outcome.trace,
        gain_iterations: None,
        gain_time: None,
    };
    Ok((report, certificate))
}

/// Classic non-negative-fluid diffusion baseline: solve
/// `H = d·P̄_g·H + (1−d)·e` with the signed selection rule, returning
/// `X = H/σ(H)`. The reported estimate `|F|₁/(1−d)` is the exact remaining
/// L1 error. Undefined at d = 1 (the initial fluid and the estimate both
/// vanish by division by 1−d).
pub fn di_pagerank(
    prob: &PageRankProblem,
    policy: &SelectionPolicy,
    stop: &StoppingRule,
) -> Result<SolverReport> {
    let d = prob.d;
    if d >= 1.0 {
        return Err(Error::DiUndefined);
    }
    let n = prob.n();
    let policy = SelectionPolicy {
        use_absolute_value: false,
        ..*policy
    };

    let started = Instant::now();
    let op = DiffusionOperator::scaled(&prob.pg, d, DanglingMode::Redistribute);
    let f0 = vec![(1.0 - d) / n as f64; n];
    let mut state = DiffusionState::with_initial_fluid(f0);
    let outcome = drive_cycles(
        &mut state,
        &op,
        &policy,
        Estimator::FluidNorm {
            scale: 1.0 / (1.0 - d),
        },
        stop,
        None,
        |_| {},
    );
    let wall_seconds = started.elapsed().as_secs_f64();

    let mut vector = state.history().to_vec();
    vecops::normalize_sum_to_one(&mut vector)?;

    Ok(SolverReport {
        method: Method::Di,
        d,
        vector,
        iterations: state.links_processed() as f64 / prob.pg.nnz().max(1) as f64,
        diffusions: state.diffusions(),
        wall_seconds,
        estimate: outcome.estimate,
        estimate_is_heuristic: false,
        converged: outcome.converged,
        trace: outcome.trace,
        gain_iterations: None,
        gain_time: None,
    })
}

/// L∞ deviation between `h_complete + e` and `scale · (h_incomplete + e)`,
/// with the scale built from the certificate algebra (`f1` from the matrix,
/// `f2` measured on `h_complete`). Test-only diagnostic; requires d < 1 and
/// two converged histories.
pub fn verify_rescaling(prob: &PageRankProblem, h_incomplete: &[f64], h_complete: &[f64]) -> f64 {
    let d = prob.d;
    assert!(d < 1.0, "rescaling verification requires d < 1");
    let e = UniformVector::new(prob.n()).value();
    let f1 = 1.0 - vecops::sum(&prob.pg.mul_vec(&vec![e; prob.n()]));
    let pgh = prob.pg.mul_vec(h_complete);
    let f2 = vecops::sum(h_complete) - vecops::sum(&pgh);
    let f = f1 + f2;
    let scale = (1.0 - d + d * f) / (1.0 - d + d * f1);
    h_incomplete
        .iter()
        .zip(h_complete)
        .map(|(hi, hc)| ((hc + e) - scale * (hi + e)).abs())
        .fold(0.0, f64::max)
}
