//! Sparse solvers for stationary distributions, PageRank, and dominant
//! eigenvectors, built around single-node *diffusion*: instead of full
//! matrix-vector products, the solver repeatedly retires one node's residual
//! fluid along its column, selecting nodes whose fluid clears a decaying
//! per-cycle threshold.
//!
//! The crate provides:
//!
//! - [`graph`]: edge-list ingestion, compressed sparse column/row storage,
//!   random graph completion, and the summary statistics of a web-graph
//!   extract.
//! - [`diffusion`]: the fluid/history state machine and the cycle driver —
//!   the sign-balanced initialization `F₀ = P·e − e` turns the singular
//!   stationary problem `X = P·X` into a convergent diffusion.
//! - [`power`]: the relaxed power-iteration baseline the diffusion methods
//!   are benchmarked against.
//! - [`pagerank`]: damped solves on the raw sub-stochastic matrix with the
//!   rescaling certificate that recovers the completed solution, plus the
//!   classic non-negative-fluid baseline.
//! - [`perron`]: dominant eigenvectors of non-negative matrices via
//!   unit-radius scaling, with spectral-radius estimation and the
//!   left-eigenvector-weighted diagnostics behind the convergence argument.
//! - [`dense`]: small dense oracles (independent algorithms) used to
//!   cross-check everything above.
//! - [`bench`]: the comparison harness and its table/trace serializers.
//! - [`testkit`]: deterministic corpus generators shared by the test suites.
//!
//! Cost accounting is uniform: diffusion work is counted in links traversed
//! and reported as *fractional iterations* (links over L), directly
//! comparable to the baseline's full products.
//!
//! # Example
//!
//! Stationary probabilities of a two-page graph with a single link, after
//! random completion:
//!
//! ```
//! use diter_core::diffusion::{SelectionPolicy, StoppingRule};
//! use diter_core::graph::{build_stochastic, complete_graph, EdgeList};
//! use diter_core::pagerank::{di_plus_pagerank, DiffusionForm, PageRankProblem};
//!
//! let edges = EdgeList::new(2, vec![(0, 1)])?;
//! let m = build_stochastic(&complete_graph(&edges, 0)?);
//! let prob = PageRankProblem::new(m, 0.85, true)?;
//! let (report, certificate) = di_plus_pagerank(
//!     &prob,
//!     &SelectionPolicy::default(),
//!     &StoppingRule::new(1e-10, 10_000),
//!     DiffusionForm::Raw,
//! )?;
//! assert!(report.converged);
//! assert!((report.vector.iter().sum::<f64>() - 1.0).abs() < 1e-12);
//! assert!((certificate.scale - 1.0).abs() < 1e-9); // the completed graph needs no rescaling
//! # Ok::<(), diter_core::Error>(())
//! ```

#![warn(missing_docs)]

pub mod bench;
pub mod dense;
pub mod diffusion;
pub mod error;
pub mod graph;
pub mod pagerank;
pub mod perron;
pub mod power;
pub mod report;
pub mod rng;
pub mod testkit;
pub mod vecops;

pub use error::{Error, Result};
pub use report::{Method, SolverReport, TracePoint};
