//! Exhaustive maximum-code search as a maximum-clique problem.
//!
//! For tiny parameters the largest subspace code can be found directly:
//! vertices are all admissible subspaces, edges join pairs at distance at
//! least `d`, and a maximum clique is a maximum code. The solver is a
//! branch-and-bound search with greedy coloring bounds over bitset adjacency
//! rows. It is deterministic: vertices are processed in enumeration order,
//! so repeated runs return the same witness.

use num_bigint::BigInt;
use num_traits::Zero;

use super::field::{Field, GfError};
use super::subspace::{enumerate_subspaces, subspace_distance, SubspaceBasis};
use crate::qarith::gauss;

/// Outcome of a brute-force search: the maximum size and one witness code.
#[derive(Debug, Clone)]
pub struct BruteForceResult {
    /// Maximum number of pairwise-compatible subspaces.
    pub value: u64,
    /// A code attaining the maximum.
    pub witness: Vec<SubspaceBasis>,
    /// Number of vertices in the compatibility graph.
    pub vertex_count: usize,
}

/// Finds a maximum clique in the graph given by bitset adjacency rows.
///
/// `adj[i]` has bit `j` set when vertices `i` and `j` are adjacent; the
/// diagonal must be clear. Returns the clique as a sorted vertex list.
pub fn max_clique(adj: &[Vec<u64>]) -> Vec<usize> {
    let n = adj.len();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    expand(adj, &all, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn bit(row: &[u64], j: usize) -> bool {
    row[j / 64] & (1u64 << (j % 64)) != 0
}

/// Greedy coloring of `cand` in index order; returns `(vertex, color)` pairs
/// sorted by color. A clique can use at most one vertex per color, which
/// yields the pruning bound.
fn color_sort(adj: &[Vec<u64>], cand: &[usize]) -> Vec<(usize, usize)> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        let slot = classes
            .iter()
            .position(|class| class.iter().all(|&u| !bit(&adj[v], u)));
        match slot {
            Some(i) => classes[i].push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut out = Vec::with_capacity(cand.len());
    for (color, class) in classes.iter().enumerate() {
        for &v in class {
            out.push((v, color + 1));
        }
    }
    out
}

fn expand(adj: &[Vec<u64>], cand: &[usize], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let colored = color_sort(adj, cand);
    // Process high-color vertices first; once the bound fails for one vertex
    // it fails for all remaining (smaller-color) ones.
    for idx in (0..colored.len()).rev() {
        let (v, color) = colored[idx];
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let next: Vec<usize> = colored[..idx]
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| bit(&adj[v], u))
            .collect();
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, &next, current, best);
        }
        current.pop();
    }
}

/// Exhaustively computes the maximum size of a subspace code in `F_q^v` with
/// minimum distance `d`.
///
/// With `dims = Some(k)` only `k`-dimensional codewords are allowed (the
/// constant-dimension problem); with `dims = None` all dimensions `0..=v`
/// are allowed (the mixed-dimension problem). `guard` caps the number of
/// subspaces that may be enumerated.
pub fn brute_force_max(
    q: u64,
    v: u32,
    d: u32,
    dims: Option<u32>,
    guard: u64,
) -> Result<BruteForceResult, GfError> {
    let field = Field::new(q)?;
    let dim_list: Vec<u32> = match dims {
        Some(k) => vec![k],
        None => (0..=v).collect(),
    };
    let total: BigInt = dim_list
        .iter()
        .map(|&k| gauss(v as i64, k as i64, q))
        .fold(BigInt::zero(), |a, b| a + b);
    if total > guard.into() {
        return Err(GfError::EnumerationGuard { needed: total, guard });
    }
    let mut vertices: Vec<SubspaceBasis> = Vec::new();
    for &k in &dim_list {
        vertices.extend(enumerate_subspaces(&field, v, k, guard)?);
    }
    let n = vertices.len();
    let words = n.div_ceil(64);
    let mut adj = vec![vec![0u64; words]; n];
    for i in 0..n {
        for j in i + 1..n {
            if subspace_distance(&field, &vertices[i], &vertices[j]) >= d {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let clique = max_clique(&adj);
    let witness: Vec<SubspaceBasis> = clique.iter().map(|&i| vertices[i].clone()).collect();
    Ok(BruteForceResult { value: clique.len() as u64, witness, vertex_count: n })
}
