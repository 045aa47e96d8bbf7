//! Small dense reference implementations.
//!
//! These are the independent yardsticks the sparse solvers are tested
//! against, so they deliberately share *no* numerical machinery with the
//! diffusion engine: plain full matrix-vector products, direct Gaussian
//! elimination, and a textbook power method. Dimensions are capped so nobody
//! mistakes them for production solvers.

use crate::error::{Error, Result};
use crate::graph::SparseColumnMatrix;

/// Hard cap on dense dimensions.
pub const MAX_DENSE_DIM: usize = 256;

/// Row-major dense square matrix, capped at [`MAX_DENSE_DIM`].
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Zero matrix of dimension `n`.
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DENSE_DIM {
            return Err(Error::DimensionTooLarge {
                n,
                max: MAX_DENSE_DIM,
            });
        }
        Ok(Self {
            n,
            data: vec![0.0; n * n],
        })
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        Ok(m)
    }

    /// Build from a row-major slice of length `n * n`.
    pub fn from_row_major(n: usize, data: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        assert_eq!(data.len(), n * n, "row-major data must be n*n long");
        m.data.copy_from_slice(data);
        Ok(m)
    }

    /// Densify a sparse matrix (for oracle comparisons on small instances).
    pub fn from_sparse(m: &SparseColumnMatrix) -> Result<Self> {
        let mut dense = Self::zeros(m.n())?;
        for j in 0..m.n() {
            let (rows, vals) = m.col(j);
            for (&i, &v) in rows.iter().zip(vals) {
                dense.set(i as usize, j, v);
            }
        }
        Ok(dense)
    }

    /// Dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    /// Set entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.n + col] = value;
    }

    /// `y = m · x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for (yi, row) in y.iter_mut().zip(self.data.chunks_exact(self.n)) {
            *yi = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    /// `y = mᵀ · x`.
    pub fn mul_transpose_vec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for (&xi, row) in x.iter().zip(self.data.chunks_exact(self.n)) {
            if xi == 0.0 {
                continue;
            }
            for (yj, a) in y.iter_mut().zip(row) {
                *yj += a * xi;
            }
        }
        y
    }

    /// Largest absolute entry.
    fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

fn l1_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

fn sum(v: &[f64]) -> f64 {
    v.iter().sum()
}

/// Stationary distribution of a column-stochastic matrix by repeated full
/// products `X ← P·X` from the uniform start, with a period-2 averaging
/// fallback for periodic chains.
///
/// Requires every column to sum to 1 within 1e-10. Uniqueness of the
/// stationary distribution is the caller's responsibility: on a reducible
/// matrix (e.g. the identity) the iteration simply returns its start.
/// The output is normalized to sum 1 and satisfies `|P·X − X|₁ ≤ 10·tol`.
pub fn dense_stationary(p: &DenseMatrix, tol: f64, max_iter: u64) -> Result<Vec<f64>> {
    let n = p.n;
    for j in 0..n {
        let col_sum: f64 = (0..n).map(|i| p.get(i, j)).sum();
        if (col_sum - 1.0).abs() > 1e-10 {
            return Err(Error::NotColumnStochastic {
                col: j,
                sum: col_sum,
            });
        }
    }

    let mut x = vec![1.0 / n as f64; n];
    let mut x_prev = x.clone();
    let mut delta = f64::INFINITY;
    let mut converged = false;
    let mut iterations = 0u64;
    while iterations < max_iter {
        iterations += 1;
        let x_next = p.mul_vec(&x);
        delta = l1_dist(&x_next, &x);
        if delta <= tol {
            x = x_next;
            converged = true;
            break;
        }
        // A period-2 orbit revisits x_prev; its two-phase average is the
        // stationary point, so collapse onto it and keep iterating.
        if l1_dist(&x_next, &x_prev) <= tol {
            let averaged: Vec<f64> = x.iter().zip(&x_next).map(|(a, b)| 0.5 * (a + b)).collect();
            let check = p.mul_vec(&averaged);
            delta = l1_dist(&check, &averaged);
            if delta <= tol {
                x = averaged;
                converged = true;
                break;
            }
            x_prev = averaged;
            x = check;
            continue;
        }
        x_prev = x;
        x = x_next;
    }
    if !converged {
        return Err(Error::OracleDidNotConverge { delta, iterations });
    }

    let total = sum(&x);
    for v in &mut x {
        *v /= total;
    }
    let residual = l1_dist(&p.mul_vec(&x), &x);
    if residual > 10.0 * tol {
        return Err(Error::OracleDidNotConverge {
            delta: residual,
            iterations,
        });
    }
    Ok(x)
}

/// Solve `a · x = b` by Gaussian elimination with partial pivoting.
///
/// A pivot below `1e-12 · max|a|` reports the matrix singular.
pub fn dense_linear_solve(a: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.n;
    assert_eq!(b.len(), n, "right-hand side must match the dimension");
    let mut m = a.data.clone();
    let mut x = b.to_vec();
    let pivot_floor = 1e-12 * a.max_abs().max(f64::MIN_POSITIVE);

    for k in 0..n {
        let (pivot_row, pivot) = (k..n)
            .map(|i| (i, m[i * n + k]))
            .max_by(|l, r| l.1.abs().total_cmp(&r.1.abs()))
            .expect("non-empty pivot range");
        if pivot.abs() <= pivot_floor {
            return Err(Error::SingularMatrix { step: k, pivot });
        }
        if pivot_row != k {
            for j in k..n {
                m.swap(k * n + j, pivot_row * n + j);
            }
            x.swap(k, pivot_row);
        }
        for i in (k + 1)..n {
            let factor = m[i * n + k] / pivot;
            if factor == 0.0 {
                continue;
            }
            m[i * n + k] = 0.0;
            for j in (k + 1)..n {
                m[i * n + j] -= factor * m[k * n + j];
            }
            x[i] -= factor * x[k];
        }
    }
    for k in (0..n).rev() {
        let mut acc = x[k];
        for j in (k + 1)..n {
            acc -= m[k * n + j] * x[j];
        }
        x[k] = acc / m[k * n + k];
    }
    Ok(x)
}

/// Dominant eigenvalue with right and left eigenvectors, both normalized to
/// sum 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DominantEigenpair {
    /// Spectral radius estimate.
    pub rho: f64,
    /// Right eigenvector, `m · right = rho · right`, sum 1.
    pub right: Vec<f64>,
    /// Left eigenvector, `leftᵀ · m = rho · leftᵀ`, sum 1.
    pub left: Vec<f64>,
}

/// Power method for the dominant eigenpair of a non-negative matrix, run on
/// `m` (right vector) and `mᵀ` (left vector).
///
/// The eigenvalue estimate is the geometric mean of the last two norm ratios,
/// which is exact for period-2 ratio oscillations (eigenvalues `±rho`), and
/// the returned vectors are the two-phase averages `y + m·y/rho`, which
/// cancel the `−rho` component in the same situation.
pub fn dense_dominant_eigenpair(
    m: &DenseMatrix,
    tol: f64,
    max_iter: u64,
) -> Result<DominantEigenpair> {
    let (rho_right, right) = power_direction(m, false, tol, max_iter)?;
    let (rho_left, left) = power_direction(m, true, tol, max_iter)?;
    // The two directions estimate the same eigenvalue; any real gap means one
    // of the iterations stalled.
    let gap = (rho_right - rho_left).abs();
    if gap > 100.0 * tol * rho_right.max(1.0) {
        return Err(Error::RhoEstimateUnreliable {
            residual: gap,
            iterations: max_iter,
        });
    }
    Ok(DominantEigenpair {
        rho: rho_right,
        right,
        left,
    })
}

fn power_direction(
    m: &DenseMatrix,
    transpose: bool,
    tol: f64,
    max_iter: u64,
) -> Result<(f64, Vec<f64>)> {
    let n = m.n;
    let apply = |x: &[f64]| {
        if transpose {
            m.mul_transpose_vec(x)
        } else {
            m.mul_vec(x)
        }
    };
    let mut y = vec![1.0 / n as f64; n];
    let mut prev_ratio: Option<f64> = None;
    let mut rho_prev: Option<f64> = None;
    let mut w_prev: Option<Vec<f64>> = None;
    let mut last_gap = f64::INFINITY;
    let mut iterations = 0u64;
    while iterations < max_iter {
        iterations += 1;
        let z = apply(&y);
        let norm_z: f64 = z.iter().sum(); // y stays non-negative with sum 1
        if norm_z == 0.0 {
            // m annihilated y: spectral radius 0 on this cone.
            return Ok((0.0, y));
        }
        let ratio = norm_z;
        if let Some(r_prev) = prev_ratio {
            // Geometric mean of the last two ratios: exact under a period-2
            // ratio oscillation (eigenvalues ±rho).
            let estimate = (ratio * r_prev).sqrt();
            // Two-phase average cancels a -rho component, so it converges
            // even where y itself keeps oscillating.
            let mut w: Vec<f64> = y.iter().zip(&z).map(|(a, b)| a + b / estimate).collect();
            let total = sum(&w);
            if total.abs() < 1e-300 {
                return Err(Error::NormalizationFailed { sum: total });
            }
            for v in &mut w {
                *v /= total;
            }
            if let (Some(prev), Some(wp)) = (rho_prev, &w_prev) {
                let rho_gap = (estimate - prev).abs();
                let vec_gap = l1_dist(&w, wp);
                last_gap = rho_gap.max(vec_gap);
                if rho_gap <= tol * estimate.max(f64::MIN_POSITIVE) && vec_gap <= tol {
                    return Ok((estimate, w));
                }
            }
            rho_prev = Some(estimate);
            w_prev = Some(w);
        }
        prev_ratio = Some(ratio);
        y = z;
        for v in &mut y {
            *v /= norm_z;
        }
    }
    Err(Error::RhoEstimateUnreliable {
        residual: last_gap,
        iterations,
    })
}
