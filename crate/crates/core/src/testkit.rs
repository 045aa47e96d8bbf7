//! Deterministic corpus generators and brute-force reference checks shared
//! by this crate's test suites. Public so integration tests and downstream
//! benchmarks can build the same corpora; not intended for production use.

use crate::dense::DenseMatrix;
use crate::error::Result;
use crate::graph::{build_stochastic, EdgeList, SparseColumnMatrix};
use crate::rng::SplitMix64;

/// Random edge list: `edge_count` (src, dst) pairs drawn uniformly (self
/// loops and duplicates possible, as in real exports). Deterministic per
/// seed.
pub fn random_edge_list(n: usize, edge_count: usize, seed: u64) -> EdgeList {
    assert!(n >= 1, "graph needs at least one node");
    let mut rng = SplitMix64::new(seed);
    let edges = (0..edge_count)
        .map(|_| (rng.next_index(n) as u32, rng.next_index(n) as u32))
        .collect();
    EdgeList::new(n, edges).expect("drawn ids are always in range")
}

/// Random irreducible, aperiodic, column-stochastic matrix: a directed ring
/// guarantees strong connectivity and full columns, a self-loop at node 0
/// kills periodicity, and `extra_edges` random links add texture.
/// Deterministic per seed.
pub fn random_stochastic(n: usize, extra_edges: usize, seed: u64) -> SparseColumnMatrix {
    assert!(n >= 2, "ring construction needs n >= 2");
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(u32, u32)> = (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)).collect();
    edges.push((0, 0));
    for _ in 0..extra_edges {
        edges.push((rng.next_index(n) as u32, rng.next_index(n) as u32));
    }
    let list = EdgeList::new(n, edges).expect("constructed ids are in range");
    build_stochastic(&list)
}

/// Random strictly positive matrix (entries in (0.1, 1.1]), returned in both
/// sparse and dense forms with bitwise-equal values. Positive matrices are
/// primitive, so both the power-method oracle and the diffusion solver apply.
pub fn random_positive(n: usize, seed: u64) -> Result<(SparseColumnMatrix, DenseMatrix)> {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut triplets = Vec::with_capacity(n * n);
    for col in 0..n {
        for row in 0..n {
            triplets.push((row, col, 0.1 + rng.next_unit_open()));
        }
    }
    let sparse = SparseColumnMatrix::from_triplets(n, &triplets)?;
    let dense = DenseMatrix::from_sparse(&sparse)?;
    Ok((sparse, dense))
}

/// Brute-force evaluation of the recursive zero-in-degree count: iterate
/// "in-degree 0, or every in-neighbor already counted" to a fixed point, a
/// node with a self-loop never qualifying. Quadratic and obviously correct;
/// the production statistic must match it.
pub fn brute_force_zero_in_recursive(m: &SparseColumnMatrix) -> usize {
    let n = m.n();
    let mut in_neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut self_loop = vec![false; n];
    for (j, flag) in self_loop.iter_mut().enumerate() {
        let (rows, _) = m.col(j);
        for &i in rows {
            if i as usize == j {
                *flag = true;
            } else {
                in_neighbors[i as usize].push(j);
            }
        }
    }
    let mut in_set = vec![false; n];
    loop {
        let mut changed = false;
        for i in 0..n {
            if in_set[i] || self_loop[i] {
                continue;
            }
            if in_neighbors[i].iter().all(|&j| in_set[j]) {
                in_set[i] = true;
                changed = true;
            }
        }
        if !changed {
            return in_set.iter().filter(|x| **x).count();
        }
    }
}

/// Whether every node reaches every other along stored entries (columns hold
/// out-neighbors). Breadth-first in both directions from node 0.
pub fn is_strongly_connected(m: &SparseColumnMatrix) -> bool {
    let n = m.n();
    if n == 0 {
        return false;
    }
    let forward = |j: usize| m.col(j).0.iter().map(|r| *r as usize).collect::<Vec<_>>();
    let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n];
    for j in 0..n {
        for &i in m.col(j).0 {
            reverse[i as usize].push(j);
        }
    }
    let reached = |neighbors: &dyn Fn(usize) -> Vec<usize>| {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(j) = stack.pop() {
            for i in neighbors(j) {
                if !seen[i] {
                    seen[i] = true;
                    count += 1;
                    stack.push(i);
                }
            }
        }
        count == n
    };
    reached(&forward) && reached(&|i: usize| reverse[i].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::compute_stats;

    #[test]
    fn edge_lists_are_deterministic_per_seed() {
        let a = random_edge_list(20, 60, 7);
        let b = random_edge_list(20, 60, 7);
        let c = random_edge_list(20, 60, 8);
        assert_eq!(a.edges, b.edges);
        assert_ne!(a.edges, c.edges);
        assert_eq!(a.edges.len(), 60);
        assert!(a.edges.iter().all(|&(s, d)| s < 20 && d < 20));
    }

    #[test]
    fn stochastic_corpus_has_the_advertised_structure() {
        for seed in 0..20 {
            let m = random_stochastic(12, 30, seed);
            assert!(m.is_column_stochastic());
            assert!(is_strongly_connected(&m));
            assert!(m.entry(0, 0).is_some(), "self-loop anchor present");
        }
    }

    #[test]
    fn positive_matrices_match_in_both_forms() {
        let (sparse, dense) = random_positive(6, 3).unwrap();
        assert_eq!(sparse.nnz(), 36);
        for col in 0..6 {
            for row in 0..6 {
                let v = dense.get(row, col);
                assert!(v > 0.1 && v <= 1.1);
                assert_eq!(sparse.entry(row, col), Some(v));
            }
        }
    }

    #[test]
    fn brute_force_count_agrees_with_the_statistic() {
        for seed in 0..30 {
            let list = random_edge_list(15, 25, seed);
            let m = build_stochastic(&list);
            let expected = brute_force_zero_in_recursive(&m);
            assert_eq!(compute_stats(&m).zero_in_recursive, expected, "seed {seed}");
        }
    }

    #[test]
    fn connectivity_check_sees_the_obvious_cases() {
        let ring = random_stochastic(5, 0, 0);
        assert!(is_strongly_connected(&ring));
        let chain = SparseColumnMatrix::from_triplets(3, &[(1, 0, 1.0), (2, 1, 1.0)]).unwrap();
        assert!(!is_strongly_connected(&chain));
    }
}
