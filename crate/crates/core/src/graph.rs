//! Sparse graph loading, completion, matrix assembly, and structural statistics.
//!
//! The on-disk format is a plain edge list: one `src dst` pair per line,
//! `#`-prefixed comment lines and blank lines skipped, with an optional leading
//! `N <n>` header that fixes the dimension (otherwise `n = 1 + max id`).
//!
//! Node `j`'s outgoing links become column `j` of the column-compressed
//! transition matrix, weighted `1/k` over the `k` distinct destinations, so the
//! matrix is column-stochastic except for dangling (empty) columns.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Maximum node id storable in the compressed index arrays.
const MAX_ID: u64 = u32::MAX as u64;

/// A directed graph as a list of `(src, dst)` edges plus a node count.
///
/// Duplicate edges are allowed here; they collapse when the transition matrix
/// is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    /// Number of nodes; every edge endpoint is `< n`.
    pub n: usize,
    /// Directed edges as `(source, destination)` pairs.
    pub edges: Vec<(u32, u32)>,
}

impl EdgeList {
    /// Build an edge list, checking every endpoint against `n`.
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Self> {
        for &(s, d) in &edges {
            for id in [s, d] {
                if id as usize >= n {
                    return Err(Error::IndexOutOfRange {
                        index: id as usize,
                        n,
                    });
                }
            }
        }
        Ok(Self { n, edges })
    }

    /// True if node `i` has at least one outgoing edge (self-loops count).
    fn has_out(&self) -> Vec<bool> {
        let mut out = vec![false; self.n];
        for &(s, _) in &self.edges {
            out[s as usize] = true;
        }
        out
    }

    /// True if node `i` has at least one incoming edge (self-loops count).
    fn has_in(&self) -> Vec<bool> {
        let mut inc = vec![false; self.n];
        for &(_, d) in &self.edges {
            inc[d as usize] = true;
        }
        inc
    }
}

/// Parse an edge list from a reader.
///
/// Errors on malformed lines (with the 1-based line number), on ids above the
/// storage cap, on ids outside a header-declared dimension, and on input with
/// no edges and no header.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<EdgeList> {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut max_id: u64 = 0;
    let mut header_n: Option<usize> = None;
    let mut saw_content = false;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let first = fields.next().expect("non-empty trimmed line has a field");

        if first == "N" {
            if saw_content {
                return Err(Error::MalformedLine {
                    line: line_no,
                    message: "dimension header must precede all edges".into(),
                });
            }
            let value = fields.next().ok_or_else(|| Error::MalformedLine {
                line: line_no,
                message: "header requires a node count".into(),
            })?;
            let n: u64 = value.parse().map_err(|_| Error::MalformedLine {
                line: line_no,
                message: format!("invalid node count {value:?}"),
            })?;
            if n == 0 || n > MAX_ID + 1 {
                return Err(Error::MalformedLine {
                    line: line_no,
                    message: format!("node count {n} outside 1..=2^32"),
                });
            }
            if fields.next().is_some() {
                return Err(Error::MalformedLine {
                    line: line_no,
                    message: "trailing fields after header".into(),
                });
            }
            header_n = Some(n as usize);
            saw_content = true;
            continue;
        }

        let second = fields.next().ok_or_else(|| Error::MalformedLine {
            line: line_no,
            message: "expected `src dst`".into(),
        })?;
        if fields.next().is_some() {
            return Err(Error::MalformedLine {
                line: line_no,
                message: "trailing fields after `src dst`".into(),
            });
        }
        let mut pair = [0u32; 2];
        for (slot, text) in pair.iter_mut().zip([first, second]) {
            let id: u64 = text.parse().map_err(|_| Error::MalformedLine {
                line: line_no,
                message: format!("invalid node id {text:?}"),
            })?;
            if id > MAX_ID {
                return Err(Error::IdOverflow { line: line_no, id });
            }
            if let Some(n) = header_n {
                if id as usize >= n {
                    return Err(Error::IndexOutOfRange {
                        index: id as usize,
                        n,
                    });
                }
            }
            max_id = max_id.max(id);
            *slot = id as u32;
        }
        edges.push((pair[0], pair[1]));
        saw_content = true;
    }

    if edges.is_empty() && header_n.is_none() {
        return Err(Error::EmptyInput);
    }
    let n = header_n.unwrap_or(max_id as usize + 1);
    Ok(EdgeList { n, edges })
}

/// Load an edge list from a file path.
pub fn load_edge_list_path(path: &std::path::Path) -> Result<EdgeList> {
    let file = std::fs::File::open(path)?;
    load_edge_list(std::io::BufReader::new(file))
}

/// Wire up a graph so every node has at least one outgoing and one incoming
/// link, the precondition for d = 1 solves.
///
/// Fixes are drawn from one seeded [`SplitMix64`] stream: first one outgoing
/// link for every node with no outgoing edge (ascending node order), then one
/// incoming link for every node with no incoming edge (ascending node order),
/// judging degrees against the *original* edge list in both passes. Self-loops
/// are excluded from every draw. The fixes are appended to the original edges,
/// so the result is bit-reproducible per seed; duplicates collapse at matrix
/// build time.
pub fn complete_graph(edges: &EdgeList, seed: u64) -> Result<EdgeList> {
    if edges.n < 2 {
        return Err(Error::GraphTooSmall { n: edges.n });
    }
    let has_out = edges.has_out();
    let has_in = edges.has_in();
    let mut rng = SplitMix64::new(seed);
    let mut completed = edges.edges.clone();

    for (i, _) in has_out.iter().enumerate().filter(|&(_, &h)| !h) {
        let target = rng.next_index_excluding(edges.n, i);
        completed.push((i as u32, target as u32));
    }
    for (i, _) in has_in.iter().enumerate().filter(|&(_, &h)| !h) {
        let source = rng.next_index_excluding(edges.n, i);
        completed.push((source as u32, i as u32));
    }
    Ok(EdgeList {
        n: edges.n,
        edges: completed,
    })
}

/// Column-compressed sparse matrix with non-negative entries.
///
/// Row indices are sorted within each column and the `(row, col)` positions
/// are unique. Immutable after construction, so it is freely shared across
/// threads.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseColumnMatrix {
    n: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<u32>,
    values: Vec<f64>,
    stochastic: bool,
}

/// How far a column sum may deviate from 1 and still count as stochastic.
pub const STOCHASTIC_TOL: f64 = 1e-12;

impl SparseColumnMatrix {
    /// Build from explicit `(row, col, value)` entries. Duplicate positions
    /// and negative values are rejected; zero values are kept as stored
    /// entries.
    pub fn from_triplets(n: usize, entries: &[(usize, usize, f64)]) -> Result<Self> {
        let mut sorted: Vec<(usize, usize, f64)> = Vec::with_capacity(entries.len());
        for &(row, col, value) in entries {
            if row >= n {
                return Err(Error::IndexOutOfRange { index: row, n });
            }
            if col >= n {
                return Err(Error::IndexOutOfRange { index: col, n });
            }
            if value < 0.0 || !value.is_finite() {
                return Err(Error::NegativeValue { row, col, value });
            }
            sorted.push((col, row, value));
        }
        sorted.sort_unstable_by_key(|a| (a.0, a.1));
        for pair in sorted.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                return Err(Error::DuplicateEntry {
                    row: pair[0].1,
                    col: pair[0].0,
                });
            }
        }

        let mut col_ptr = vec![0usize; n + 1];
        let mut row_idx = Vec::with_capacity(sorted.len());
        let mut values = Vec::with_capacity(sorted.len());
        for &(col, row, value) in &sorted {
            col_ptr[col + 1] += 1;
            row_idx.push(row as u32);
            values.push(value);
        }
        for j in 0..n {
            col_ptr[j + 1] += col_ptr[j];
        }
        let mut m = Self {
            n,
            col_ptr,
            row_idx,
            values,
            stochastic: false,
        };
        m.stochastic = m.check_stochastic();
        Ok(m)
    }

    fn check_stochastic(&self) -> bool {
        (0..self.n).all(|j| {
            let (_, vals) = self.col(j);
            !vals.is_empty() && (vals.iter().sum::<f64>() - 1.0).abs() <= STOCHASTIC_TOL
        })
    }

    /// Dimension (the matrix is square).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored entries, `L` in the cost model: fractional iteration
    /// counts are links processed divided by this.
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Rows and values of column `j`.
    pub fn col(&self, j: usize) -> (&[u32], &[f64]) {
        let lo = self.col_ptr[j];
        let hi = self.col_ptr[j + 1];
        (&self.row_idx[lo..hi], &self.values[lo..hi])
    }

    /// Out-degree of node `j` = stored entries in column `j`.
    pub fn out_degree(&self, j: usize) -> usize {
        self.col_ptr[j + 1] - self.col_ptr[j]
    }

    /// True when every column is non-empty and sums to 1 within
    /// [`STOCHASTIC_TOL`].
    pub fn is_column_stochastic(&self) -> bool {
        self.stochastic
    }

    /// Nodes whose column is empty (no outgoing links).
    pub fn dangling_nodes(&self) -> Vec<u32> {
        (0..self.n)
            .filter(|&j| self.out_degree(j) == 0)
            .map(|j| j as u32)
            .collect()
    }

    /// Stored value at `(row, col)`, if any.
    pub fn entry(&self, row: usize, col: usize) -> Option<f64> {
        let (rows, vals) = self.col(col);
        rows.binary_search(&(row as u32)).ok().map(|pos| vals[pos])
    }

    /// Column-oriented product `y = m · x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0.0 {
                continue;
            }
            let (rows, vals) = self.col(j);
            for (&i, &v) in rows.iter().zip(vals) {
                y[i as usize] += v * xj;
            }
        }
        y
    }

    /// Rebuild from a row-compressed mirror; values are copied bitwise.
    pub fn from_rows(rows: &SparseRowMatrix) -> Self {
        let n = rows.n;
        let mut col_ptr = vec![0usize; n + 1];
        for &j in &rows.col_idx {
            col_ptr[j as usize + 1] += 1;
        }
        for j in 0..n {
            col_ptr[j + 1] += col_ptr[j];
        }
        let mut cursor = col_ptr.clone();
        let mut row_idx = vec![0u32; rows.values.len()];
        let mut values = vec![0.0f64; rows.values.len()];
        // Row-major traversal writes each column's rows in ascending order.
        for i in 0..n {
            let lo = rows.row_ptr[i];
            let hi = rows.row_ptr[i + 1];
            for k in lo..hi {
                let j = rows.col_idx[k] as usize;
                row_idx[cursor[j]] = i as u32;
                values[cursor[j]] = rows.values[k];
                cursor[j] += 1;
            }
        }
        let mut m = Self {
            n,
            col_ptr,
            row_idx,
            values,
            stochastic: false,
        };
        m.stochastic = m.check_stochastic();
        m
    }
}

/// Row-compressed mirror of [`SparseColumnMatrix`], used where row traversal
/// is the natural access pattern (power iteration). Holds the same `(row,
/// col, value)` entries with bitwise-equal values.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseRowMatrix {
    n: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<u32>,
    values: Vec<f64>,
}

impl SparseRowMatrix {
    /// Convert from the column-compressed form; values are copied bitwise.
    pub fn from_columns(m: &SparseColumnMatrix) -> Self {
        let n = m.n;
        let mut row_ptr = vec![0usize; n + 1];
        for &i in &m.row_idx {
            row_ptr[i as usize + 1] += 1;
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        let mut cursor = row_ptr.clone();
        let mut col_idx = vec![0u32; m.values.len()];
        let mut values = vec![0.0f64; m.values.len()];
        // Column-major traversal writes each row's columns in ascending order.
        for j in 0..n {
            let (rows, vals) = m.col(j);
            for (&i, &v) in rows.iter().zip(vals) {
                let i = i as usize;
                col_idx[cursor[i]] = j as u32;
                values[cursor[i]] = v;
                cursor[i] += 1;
            }
        }
        Self {
            n,
            row_ptr,
            col_idx,
            values,
        }
    }

    /// Dimension (the matrix is square).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored entries.
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Columns and values of row `i`.
    pub fn row(&self, i: usize) -> (&[u32], &[f64]) {
        let lo = self.row_ptr[i];
        let hi = self.row_ptr[i + 1];
        (&self.col_idx[lo..hi], &self.values[lo..hi])
    }

    /// Row-oriented product `y = m · x`, written into `out`.
    pub fn mul_vec_into(&self, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(out.len(), self.n);
        for (i, o) in out.iter_mut().enumerate() {
            let (cols, vals) = self.row(i);
            let mut acc = 0.0;
            for (&j, &v) in cols.iter().zip(vals) {
                acc += v * x[j as usize];
            }
            *o = acc;
        }
    }

    /// Row-oriented product `y = m · x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        self.mul_vec_into(x, &mut y);
        y
    }
}

/// Build the column-stochastic transition matrix of a graph: column `j` holds
/// `1/k` at each of the `k` distinct destinations of node `j`. Dangling nodes
/// produce empty columns, so the result reports
/// [`SparseColumnMatrix::is_column_stochastic`] = false when any exist.
pub fn build_stochastic(edges: &EdgeList) -> SparseColumnMatrix {
    let n = edges.n;
    let mut counts = vec![0usize; n + 1];
    for &(s, _) in &edges.edges {
        counts[s as usize + 1] += 1;
    }
    let mut start = counts;
    for j in 0..n {
        start[j + 1] += start[j];
    }
    let mut scratch = vec![0u32; edges.edges.len()];
    let mut cursor = start.clone();
    for &(s, d) in &edges.edges {
        scratch[cursor[s as usize]] = d;
        cursor[s as usize] += 1;
    }

    let mut col_ptr = vec![0usize; n + 1];
    let mut row_idx: Vec<u32> = Vec::with_capacity(edges.edges.len());
    for j in 0..n {
        let slice = &mut scratch[start[j]..start[j + 1]];
        slice.sort_unstable();
        let mut prev: Option<u32> = None;
        for &d in slice.iter() {
            if prev != Some(d) {
                row_idx.push(d);
                prev = Some(d);
            }
        }
        col_ptr[j + 1] = row_idx.len();
    }

    let mut values = Vec::with_capacity(row_idx.len());
    for j in 0..n {
        let k = col_ptr[j + 1] - col_ptr[j];
        let w = 1.0 / k.max(1) as f64;
        values.extend(std::iter::repeat_n(w, k));
    }

    let stochastic = (0..n).all(|j| col_ptr[j + 1] > col_ptr[j]);
    SparseColumnMatrix {
        n,
        col_ptr,
        row_idx,
        values,
        stochastic,
    }
}

/// Structural statistics of a transition matrix, in the shape of the usual
/// web-graph summary table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    /// Number of nodes.
    pub n: usize,
    /// L: stored links after dedup.
    pub links: usize,
    /// D: dangling nodes (empty columns).
    pub dangling: usize,
    /// E: recursively-0-in-degree nodes — in-degree 0, or all in-neighbors
    /// already in the set; nodes with self-loops never qualify.
    pub zero_in_recursive: usize,
    /// O: nodes with a self-loop.
    pub self_loops: usize,
    /// Maximum in-degree (distinct in-neighbors).
    pub max_in: usize,
    /// Maximum out-degree (distinct destinations).
    pub max_out: usize,
}

/// Compute [`GraphStats`] for a matrix.
pub fn compute_stats(m: &SparseColumnMatrix) -> GraphStats {
    let n = m.n();
    let mut in_count = vec![0usize; n];
    let mut self_loops = 0usize;
    let mut ineligible = vec![false; n];
    for (j, flag) in ineligible.iter_mut().enumerate() {
        let (rows, _) = m.col(j);
        for &i in rows {
            in_count[i as usize] += 1;
            if i as usize == j {
                self_loops += 1;
                *flag = true;
            }
        }
    }

    let max_out = (0..n).map(|j| m.out_degree(j)).max().unwrap_or(0);
    let max_in = in_count.iter().copied().max().unwrap_or(0);
    let dangling = (0..n).filter(|&j| m.out_degree(j) == 0).count();

    // Least fixed point of "all in-neighbors already counted": peel nodes of
    // remaining in-degree 0 and propagate along their out-links.
    let mut remaining = in_count;
    let mut in_set = vec![false; n];
    let mut queue: Vec<usize> = (0..n)
        .filter(|&i| remaining[i] == 0 && !ineligible[i])
        .collect();
    for i in &queue {
        in_set[*i] = true;
    }
    let mut head = 0;
    while head < queue.len() {
        let j = queue[head];
        head += 1;
        let (rows, _) = m.col(j);
        for &i in rows {
            let i = i as usize;
            if ineligible[i] || in_set[i] {
                continue;
            }
            remaining[i] -= 1;
            if remaining[i] == 0 {
                in_set[i] = true;
                queue.push(i);
            }
        }
    }

    GraphStats {
        n,
        links: m.nnz(),
        dangling,
        zero_in_recursive: queue.len(),
        self_loops,
        max_in,
        max_out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn load(text: &str) -> Result<EdgeList> {
        load_edge_list(Cursor::new(text))
    }

    #[test]
    fn loads_two_edges() {
        let el = load("0 1\n1 2\n").unwrap();
        assert_eq!(el.n, 3);
        assert_eq!(el.edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn skips_comments_and_blanks() {
        let el = load("# a comment\n\n0 1\n  # indented comment\n1 0\n").unwrap();
        assert_eq!(el.n, 2);
        assert_eq!(el.edges, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn header_fixes_dimension() {
        let el = load("N 5\n0 1\n").unwrap();
        assert_eq!(el.n, 5);
    }

    #[test]
    fn header_only_is_a_valid_empty_graph() {
        let el = load("N 4\n").unwrap();
        assert_eq!(el.n, 4);
        assert!(el.edges.is_empty());
    }

    #[test]
    fn header_smaller_than_ids_rejected() {
        let err = load("N 2\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 5, n: 2 }));
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(load("").unwrap_err(), Error::EmptyInput));
        assert!(matches!(
            load("# only comments\n").unwrap_err(),
            Error::EmptyInput
        ));
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = load("0 1\nnot an edge\n").unwrap_err();
        match err {
            Error::MalformedLine { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        let err = load("0 1\n2\n").unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 2, .. }));
        let err = load("0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 1, .. }));
    }

    #[test]
    fn id_overflow_detected() {
        let err = load("0 4294967296\n").unwrap_err();
        assert!(matches!(err, Error::IdOverflow { line: 1, .. }));
    }

    #[test]
    fn duplicate_edges_collapse_to_one_entry() {
        let el = load("0 1\n0 1\n").unwrap();
        let m = build_stochastic(&el);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.entry(1, 0), Some(1.0));
    }

    #[test]
    fn dedup_weights_use_distinct_count() {
        // (0,1) twice plus (0,2): two distinct destinations, weight 1/2 each.
        let el = EdgeList::new(3, vec![(0, 1), (0, 1), (0, 2)]).unwrap();
        let m = build_stochastic(&el);
        assert_eq!(m.out_degree(0), 2);
        assert_eq!(m.entry(1, 0), Some(0.5));
        assert_eq!(m.entry(2, 0), Some(0.5));
    }

    #[test]
    fn stochastic_flag_tracks_empty_columns() {
        let with_dangling = build_stochastic(&load("0 1\n").unwrap());
        assert!(!with_dangling.is_column_stochastic());
        assert_eq!(with_dangling.dangling_nodes(), vec![1]);

        let cycle = build_stochastic(&load("0 1\n1 0\n").unwrap());
        assert!(cycle.is_column_stochastic());
        assert!(cycle.dangling_nodes().is_empty());
    }

    #[test]
    fn completion_builds_the_two_cycle() {
        // Single edge 0 -> 1: node 1 needs an outgoing link (only candidate
        // 0), node 0 needs an incoming link (only candidate source 1).
        let el = load("0 1\n").unwrap();
        let completed = complete_graph(&el, 7).unwrap();
        assert_eq!(completed.edges[0], (0, 1));
        assert_eq!(completed.edges[1], (1, 0));
        assert_eq!(completed.edges[2], (1, 0));
        let m = build_stochastic(&completed);
        assert_eq!(m.nnz(), 2);
        assert!(m.is_column_stochastic());
    }

    #[test]
    fn completion_is_deterministic_per_seed() {
        let el = EdgeList::new(
            30,
            (0..20u32).map(|i| (i, (i + 3) % 20)).collect::<Vec<_>>(),
        )
        .unwrap();
        let a = complete_graph(&el, 11).unwrap();
        let b = complete_graph(&el, 11).unwrap();
        assert_eq!(a, b);
        let c = complete_graph(&el, 12).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn completion_never_draws_self_loops_and_fixes_all_degrees() {
        for seed in 0..20 {
            let el = EdgeList::new(9, vec![(0, 1), (2, 1), (3, 3)]).unwrap();
            let fixed = complete_graph(&el, seed).unwrap();
            for &(s, d) in &fixed.edges[el.edges.len()..] {
                assert_ne!(s, d, "seed {seed} drew a self-loop");
            }
            let m = build_stochastic(&fixed);
            assert!(m.is_column_stochastic());
            let stats = compute_stats(&m);
            assert_eq!(stats.dangling, 0);
            // Every node must also have an incoming link now.
            let mut has_in = vec![false; fixed.n];
            for &(_, d) in &fixed.edges {
                has_in[d as usize] = true;
            }
            assert!(has_in.iter().all(|&b| b));
        }
    }

    #[test]
    fn completion_requires_two_nodes() {
        let el = EdgeList::new(1, vec![(0, 0)]).unwrap();
        assert!(matches!(
            complete_graph(&el, 0).unwrap_err(),
            Error::GraphTooSmall { n: 1 }
        ));
    }

    #[test]
    fn chain_stats() {
        let m = build_stochastic(&load("0 1\n1 2\n").unwrap());
        let s = compute_stats(&m);
        assert_eq!(
            s,
            GraphStats {
                n: 3,
                links: 2,
                dangling: 1,
                zero_in_recursive: 3,
                self_loops: 0,
                max_in: 1,
                max_out: 1,
            }
        );
    }

    #[test]
    fn two_cycle_stats() {
        let m = build_stochastic(&load("0 1\n1 0\n").unwrap());
        let s = compute_stats(&m);
        assert_eq!(s.links, 2);
        assert_eq!(s.dangling, 0);
        assert_eq!(s.zero_in_recursive, 0);
        assert_eq!(s.self_loops, 0);
    }

    #[test]
    fn self_loop_stats() {
        let m = build_stochastic(&load("0 0\n").unwrap());
        let s = compute_stats(&m);
        assert_eq!(s.links, 1);
        assert_eq!(s.dangling, 0);
        assert_eq!(s.zero_in_recursive, 0);
        assert_eq!(s.self_loops, 1);
        assert_eq!(s.max_in, 1);
        assert_eq!(s.max_out, 1);
    }

    #[test]
    fn recursive_zero_in_degree_peels_chains_not_cycles() {
        // 0 -> 1 -> 2 -> 3 and 3 <-> 4: nodes 0, 1, 2 peel off, the 3-4 cycle
        // stays.
        let el = EdgeList::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 3)]).unwrap();
        let s = compute_stats(&build_stochastic(&el));
        assert_eq!(s.zero_in_recursive, 3);
    }

    #[test]
    fn from_triplets_validates() {
        assert!(matches!(
            SparseColumnMatrix::from_triplets(2, &[(0, 0, 1.0), (0, 0, 0.5)]).unwrap_err(),
            Error::DuplicateEntry { row: 0, col: 0 }
        ));
        assert!(matches!(
            SparseColumnMatrix::from_triplets(2, &[(0, 1, -0.5)]).unwrap_err(),
            Error::NegativeValue { .. }
        ));
        assert!(matches!(
            SparseColumnMatrix::from_triplets(2, &[(2, 0, 0.5)]).unwrap_err(),
            Error::IndexOutOfRange { index: 2, n: 2 }
        ));
    }

    #[test]
    fn csc_csr_round_trip_is_bitwise() {
        let el = EdgeList::new(
            7,
            vec![
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 0),
                (3, 3),
                (4, 0),
                (4, 5),
                (6, 2),
            ],
        )
        .unwrap();
        let m = build_stochastic(&el);
        let rows = SparseRowMatrix::from_columns(&m);
        assert_eq!(rows.nnz(), m.nnz());
        let back = SparseColumnMatrix::from_rows(&rows);
        assert_eq!(back, m);
    }

    #[test]
    fn products_agree_between_mirrors() {
        let el = EdgeList::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)]).unwrap();
        let m = build_stochastic(&el);
        let r = SparseRowMatrix::from_columns(&m);
        let x: Vec<f64> = (0..5).map(|i| 0.1 * (i as f64 + 1.0)).collect();
        let a = m.mul_vec(&x);
        let b = r.mul_vec(&x);
        for (u, v) in a.iter().zip(&b) {
            assert!((u - v).abs() < 1e-15);
        }
    }
}
