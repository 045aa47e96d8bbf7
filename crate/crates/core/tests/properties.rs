//! Randomized invariants: storage round-trips, completion guarantees, the
//! conservation laws of the diffusion engine, and cross-checks between the
//! sparse solvers and the dense oracles.

use proptest::prelude::*;

use diter_core::dense::{dense_linear_solve, dense_stationary, DenseMatrix};
use diter_core::diffusion::{
    check_identity, init_di_plus, DiffusionOperator, SelectionPolicy, StoppingRule,
};
use diter_core::graph::{
    build_stochastic, complete_graph, compute_stats, SparseColumnMatrix, SparseRowMatrix,
};
use diter_core::pagerank::{di_plus_pagerank, DiffusionForm, PageRankProblem};
use diter_core::power::{power_step, PowerState};
use diter_core::rng::SplitMix64;
use diter_core::testkit::{brute_force_zero_in_recursive, random_edge_list, random_stochastic};
use diter_core::vecops::{l1_dist, sum};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Column-compressed → row-compressed → column-compressed is lossless,
    /// bit for bit: the two layouts describe the same matrix.
    #[test]
    fn storage_round_trip_is_lossless(
        n in 2usize..80,
        extra in 0usize..300,
        seed in any::<u64>(),
    ) {
        let m = random_stochastic(n, extra, seed);
        let rows = SparseRowMatrix::from_columns(&m);
        let back = SparseColumnMatrix::from_rows(&rows);
        prop_assert_eq!(m.n(), back.n());
        prop_assert_eq!(m.nnz(), back.nnz());
        for j in 0..m.n() {
            let (idx_a, val_a) = m.col(j);
            let (idx_b, val_b) = back.col(j);
            prop_assert_eq!(idx_a, idx_b);
            prop_assert_eq!(val_a, val_b);
        }
    }

    /// Completion is deterministic per seed and leaves no dangling column and
    /// no recursively-source node behind.
    #[test]
    fn completion_closes_the_graph(
        n in 2usize..120,
        edges in 0usize..400,
        seed in any::<u64>(),
    ) {
        let raw = random_edge_list(n, edges, seed);
        let done = complete_graph(&raw, seed).unwrap();
        let again = complete_graph(&raw, seed).unwrap();
        prop_assert_eq!(&done.edges, &again.edges);

        let m = build_stochastic(&done);
        prop_assert!(m.dangling_nodes().is_empty());
        prop_assert!(m.is_column_stochastic());
        let stats = compute_stats(&m);
        prop_assert_eq!(stats.dangling, 0);
        prop_assert_eq!(stats.zero_in_recursive, 0);
    }

    /// The iterative-removal statistic agrees with a brute-force closure.
    #[test]
    fn source_count_matches_brute_force(
        n in 2usize..60,
        edges in 0usize..200,
        seed in any::<u64>(),
    ) {
        let m = build_stochastic(&random_edge_list(n, edges, seed));
        prop_assert_eq!(
            compute_stats(&m).zero_in_recursive,
            brute_force_zero_in_recursive(&m)
        );
    }

    /// Driving the residual of a stochastic matrix with an arbitrary diffusion
    /// sequence keeps its total exactly conserved, never grows its L1 norm,
    /// and keeps the reconstruction identity H + F = P·H + F₀ tight.
    #[test]
    fn diffusion_conserves_and_contracts(
        n in 2usize..60,
        extra in 0usize..150,
        seed in any::<u64>(),
        steps in 1usize..400,
    ) {
        let m = random_stochastic(n, extra, seed);
        let op = DiffusionOperator::plain(&m);
        let mut state = init_di_plus(&m);
        let f0 = state.fluid().to_vec();
        let initial_sum = state.fluid_sum();
        let mut draw = SplitMix64::new(seed ^ 0x9e37_79b9_7f4a_7c15);
        let mut prev_norm = state.fluid_l1();
        for _ in 0..steps {
            let i = draw.next_index(m.n());
            state.diffuse(&op, i).unwrap();
            let norm = state.fluid_l1();
            prop_assert!(norm <= prev_norm + 1e-12);
            prop_assert!((state.fluid_sum() - initial_sum).abs() <= 1e-10);
            prev_norm = norm;
        }
        let residual = check_identity(&state, &op, &f0);
        prop_assert!(residual <= 1e-10 * m.n() as f64);
    }

    /// Relaxed power steps on a stochastic matrix never leak probability mass.
    #[test]
    fn power_steps_preserve_mass(
        n in 2usize..40,
        extra in 0usize..100,
        seed in any::<u64>(),
        relaxation in 0.05f64..=1.0,
        steps in 1usize..50,
    ) {
        let m = random_stochastic(n, extra, seed);
        let rows = SparseRowMatrix::from_columns(&m);
        let mut state = PowerState::uniform(m.n(), relaxation).unwrap();
        for _ in 0..steps {
            power_step(&mut state, &rows);
        }
        prop_assert!((sum(state.x()) - 1.0).abs() <= 1e-9);
    }

    /// The excluding draw stays in range and never lands on the hole.
    #[test]
    fn excluding_draw_avoids_the_hole(
        (n, exclude) in (2usize..1000).prop_flat_map(|n| (Just(n), 0..n)),
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix64::new(seed);
        for _ in 0..64 {
            let v = rng.next_index_excluding(n, exclude);
            prop_assert!(v < n);
            prop_assert_ne!(v, exclude);
            let u = rng.next_unit_open();
            prop_assert!(u > 0.0 && u <= 1.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// The averaging oracle really lands on a fixed point of the matrix.
    #[test]
    fn stationary_oracle_is_a_fixed_point(
        n in 2usize..16,
        extra in 0usize..40,
        seed in any::<u64>(),
    ) {
        let m = random_stochastic(n, extra, seed);
        let dense = DenseMatrix::from_sparse(&m).unwrap();
        let x = dense_stationary(&dense, 1e-12, 500_000).unwrap();
        prop_assert!((sum(&x) - 1.0).abs() <= 1e-9);
        prop_assert!(l1_dist(&m.mul_vec(&x), &x) <= 1e-8);
    }

    /// On a damped problem the diffusion solver agrees with a direct dense
    /// solve of (I − d·P)·x = (1−d)/n · 1.
    #[test]
    fn diffusion_matches_the_linear_solve(
        n in 2usize..24,
        extra in 0usize..60,
        seed in any::<u64>(),
    ) {
        let m = random_stochastic(n, extra, seed);
        let nn = m.n();
        let d = 0.85;
        let dense = DenseMatrix::from_sparse(&m).unwrap();
        let mut a = DenseMatrix::zeros(nn).unwrap();
        for r in 0..nn {
            for c in 0..nn {
                let eye = if r == c { 1.0 } else { 0.0 };
                a.set(r, c, eye - d * dense.get(r, c));
            }
        }
        let b = vec![(1.0 - d) / nn as f64; nn];
        let truth = dense_linear_solve(&a, &b).unwrap();
        prop_assert!((sum(&truth) - 1.0).abs() <= 1e-9);

        let prob = PageRankProblem::new(m, d, true).unwrap();
        let stop = StoppingRule::new(1e-10, 200_000);
        let (report, _) = di_plus_pagerank(
            &prob,
            &SelectionPolicy::default(),
            &stop,
            DiffusionForm::Raw,
        ).unwrap();
        prop_assert!(report.converged);
        prop_assert!(l1_dist(&report.vector, &truth) <= 1e-8);
    }

    /// Diffusing the raw sub-stochastic system and the dangling-completed one
    /// reaches the same normalized vector with consistent rescaling
    /// certificates, on graphs that genuinely have dangling nodes.
    #[test]
    fn both_diffusion_forms_reach_the_same_point(
        n in 3usize..30,
        edges in 2usize..80,
        seed in any::<u64>(),
    ) {
        let m = build_stochastic(&random_edge_list(n, edges, seed));
        let prob = PageRankProblem::new(m, 0.85, false).unwrap();
        let stop = StoppingRule::new(1e-10, 200_000);
        let policy = SelectionPolicy::default();
        let (raw, cert_raw) =
            di_plus_pagerank(&prob, &policy, &stop, DiffusionForm::Raw).unwrap();
        let (full, cert_full) =
            di_plus_pagerank(&prob, &policy, &stop, DiffusionForm::Completed).unwrap();
        prop_assert!(raw.converged && full.converged);
        prop_assert!(l1_dist(&raw.vector, &full.vector) <= 1e-8);
        prop_assert!((cert_raw.scale - cert_full.scale).abs() <= 1e-8);
    }

    /// The limit does not depend on the selection schedule: two different
    /// threshold ladders land within the sum of their guarantees.
    #[test]
    fn selection_schedule_does_not_move_the_limit(
        n in 2usize..30,
        extra in 0usize..60,
        seed in any::<u64>(),
    ) {
        let m = random_stochastic(n, extra, seed);
        let prob = PageRankProblem::new(m, 0.85, true).unwrap();
        let stop = StoppingRule::new(1e-9, 200_000);
        let eager = SelectionPolicy::default();
        let lazy = SelectionPolicy::new(0.7, 0.6, true).unwrap();
        let (a, _) = di_plus_pagerank(&prob, &eager, &stop, DiffusionForm::Raw).unwrap();
        let (b, _) = di_plus_pagerank(&prob, &lazy, &stop, DiffusionForm::Raw).unwrap();
        prop_assert!(a.converged && b.converged);
        prop_assert!(l1_dist(&a.vector, &b.vector) <= 1e-7);
    }
}
