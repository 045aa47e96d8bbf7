//! Shared result types for every solver.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Solver selector, also the CLI spelling (`pi`, `di`, `di+`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Power iteration: full products, the baseline everything is gauged
    /// against.
    Pi,
    /// Classic diffusion on the non-negative source term `(1-d)·e`.
    Di,
    /// Diffusion from the sign-balanced start `P·e − e`, the method under
    /// test.
    DiPlus,
}

impl Method {
    /// Canonical lowercase name.
    pub fn name(self) -> &'static str {
        match self {
            Method::Pi => "pi",
            Method::Di => "di",
            Method::DiPlus => "di+",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "pi" => Ok(Method::Pi),
            "di" => Ok(Method::Di),
            "di+" => Ok(Method::DiPlus),
            other => Err(Error::InvalidParameter {
                what: format!("unknown method {other:?}, expected pi, di, or di+"),
            }),
        }
    }
}

/// One sample of the error-versus-cost curve: `cost` is the fractional
/// iteration count at the sample (links processed / L for diffusion, the
/// iteration number for power iteration), `estimate` the error estimate
/// reported there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    /// Fractional iteration count when sampled.
    pub cost: f64,
    /// Error estimate at that point.
    pub estimate: f64,
}

/// Outcome of one solver run.
///
/// Non-convergence within the budget is reported here (`converged = false`),
/// not as an error, so partial state stays inspectable.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverReport {
    /// Which solver produced this.
    pub method: Method,
    /// Damping factor of the solved problem (1.0 for plain stationary and
    /// eigenvector solves).
    pub d: f64,
    /// Converged (or best-effort) solution vector, normalized to sum 1.
    pub vector: Vec<f64>,
    /// Fractional iteration count: links processed / L for diffusion
    /// methods, whole products for power iteration.
    pub iterations: f64,
    /// Individual node diffusions performed (0 for power iteration).
    pub diffusions: u64,
    /// Wall-clock solve time in seconds (loading and assembly excluded).
    pub wall_seconds: f64,
    /// Final error estimate; its meaning depends on the method and d — see
    /// `estimate_is_heuristic`.
    pub estimate: f64,
    /// True when the estimate has no proven relation to the true error
    /// (diffusion at d = 1, power iteration at d = 1, spectral solves).
    pub estimate_is_heuristic: bool,
    /// Whether the stopping target was met within the budget.
    pub converged: bool,
    /// Error-versus-cost samples, one per cycle or iteration.
    pub trace: Vec<TracePoint>,
    /// Iteration-count gain versus the PI baseline from the same batch; set
    /// by the bench harness only.
    pub gain_iterations: Option<f64>,
    /// Wall-time gain versus the PI baseline from the same batch; set by the
    /// bench harness only.
    pub gain_time: Option<f64>,
}
