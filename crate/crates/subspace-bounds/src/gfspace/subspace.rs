//! Subspaces of `F_q^v` as reduced-row-echelon bases.
//!
//! The reduced row echelon form is a canonical representative: two row lists
//! span the same subspace exactly when they reduce to the same matrix. That
//! makes equality, hashing, and deterministic enumeration trivial, at the
//! cost of a Gaussian elimination per construction — entirely acceptable for
//! the coordinate oracle, which only ever sees tiny parameters.

use num_traits::ToPrimitive;

use super::field::{Field, GfError};
use crate::qarith::gauss;

/// A subspace of `F_q^v`, stored as its reduced-row-echelon basis.
///
/// The zero subspace has an empty row list. Rows have length `v`, each pivot
/// entry is 1, pivot columns are strictly increasing, and every pivot is the
/// only nonzero entry in its column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceBasis {
    v: u32,
    rows: Vec<Vec<u8>>,
}

impl SubspaceBasis {
    /// Builds the subspace spanned by `rows` inside `F_q^v`, canonicalizing
    /// via row reduction. Zero rows and dependent rows are dropped.
    pub fn from_rows(field: &Field, v: u32, rows: &[Vec<u8>]) -> Self {
        assert!(rows.iter().all(|r| r.len() == v as usize), "rows must have length v");
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        rref(field, &mut m);
        SubspaceBasis { v, rows: m }
    }

    /// The zero subspace of `F_q^v`.
    pub fn zero(v: u32) -> Self {
        SubspaceBasis { v, rows: Vec::new() }
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Dimension of the ambient space.
    pub fn ambient(&self) -> u32 {
        self.v
    }

    /// The canonical basis rows.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }
}

/// In-place reduced row echelon form; zero rows are removed.
fn rref(field: &Field, m: &mut Vec<Vec<u8>>) {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(pivot_row, src);
        let scale = field.inv(m[pivot_row][col]);
        for entry in m[pivot_row].iter_mut() {
            *entry = field.mul(*entry, scale);
        }
        for r in 0..m.len() {
            if r != pivot_row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..cols {
                    let t = field.mul(factor, m[pivot_row][c]);
                    m[r][c] = field.sub(m[r][c], t);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
}

/// Rank of the row space spanned by the bases of `x` and `y` together.
fn sum_dim(field: &Field, x: &SubspaceBasis, y: &SubspaceBasis) -> u32 {
    let mut m: Vec<Vec<u8>> = x.rows.iter().chain(y.rows.iter()).cloned().collect();
    rref(field, &mut m);
    m.len() as u32
}

/// The subspace distance `2 dim(X + Y) - dim X - dim Y`.
///
/// This equals `dim(X + Y) - dim(X ∩ Y)` and is the graph distance between
/// `X` and `Y` in the lattice of subspaces.
pub fn subspace_distance(field: &Field, x: &SubspaceBasis, y: &SubspaceBasis) -> u32 {
    assert_eq!(x.v, y.v, "subspaces live in different ambient spaces");
    2 * sum_dim(field, x, y) - x.dim() - y.dim()
}

/// Enumerates all `k`-dimensional subspaces of `F_q^v` in a deterministic
/// order: lexicographically by pivot-column set, then by free entries.
///
/// Every subspace has a unique reduced-row-echelon basis, obtained by fixing
/// the set of pivot columns and filling the remaining entries arbitrarily, so
/// the enumeration is exhaustive and duplicate-free; its length is the
/// Gaussian binomial coefficient `[v choose k]_q`.
///
/// Returns [`GfError::EnumerationGuard`] if that count exceeds `guard`.
pub fn enumerate_subspaces(
    field: &Field,
    v: u32,
    k: u32,
    guard: u64,
) -> Result<Vec<SubspaceBasis>, GfError> {
    let q = field.order();
    let total = gauss(v as i64, k as i64, q);
    if total > guard.into() {
        return Err(GfError::EnumerationGuard { needed: total, guard });
    }
    let total = total.to_usize().expect("guarded count fits usize");
    let mut out = Vec::with_capacity(total);
    if k > v {
        return Ok(out);
    }
    if k == 0 {
        out.push(SubspaceBasis::zero(v));
        return Ok(out);
    }
    let k = k as usize;
    let v = v as usize;
    // Current pivot-column combination, lexicographically smallest first.
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        emit_for_pivots(field, v, &pivots, &mut out);
        // Advance the combination.
        let mut i = k;
        loop {
            if i == 0 {
                // All combinations done.
                assert_eq!(out.len(), total, "echelon enumeration must match the q-binomial");
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < v - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Emits every echelon matrix with the given pivot columns by running an
/// odometer over the free entries.
fn emit_for_pivots(field: &Field, v: usize, pivots: &[usize], out: &mut Vec<SubspaceBasis>) {
    let k = pivots.len();
    let is_pivot: Vec<bool> = {
        let mut b = vec![false; v];
        for &p in pivots {
            b[p] = true;
        }
        b
    };
    // Free positions in row-major order: row i may have arbitrary entries in
    // non-pivot columns to the right of its own pivot.
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in p + 1..v {
            if !is_pivot[c] {
                free.push((i, c));
            }
        }
    }
    let q = field.order() as u8;
    let mut values = vec![0u8; free.len()];
    loop {
        let mut rows = vec![vec![0u8; v]; k];
        for (i, &p) in pivots.iter().enumerate() {
            rows[i][p] = 1;
        }
        for (slot, &(r, c)) in free.iter().enumerate() {
            rows[r][c] = values[slot];
        }
        debug_assert!({
            let canon = SubspaceBasis::from_rows(field, v as u32, &rows);
            canon.rows() == rows.as_slice()
        });
        out.push(SubspaceBasis { v: v as u32, rows });
        // Odometer step.
        let mut slot = values.len();
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            if values[slot] + 1 < q {
                values[slot] += 1;
                for later in values[slot + 1..].iter_mut() {
                    *later = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn f(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn rref_canonicalizes_known_example() {
        // Rows (1,1,0,1), (0,1,1,1) over F_2, already independent:
        // reduced form clears column 1 of the first row.
        let field = f(2);
        let s = SubspaceBasis::from_rows(&field, 4, &[vec![1, 1, 0, 1], vec![0, 1, 1, 1]]);
        assert_eq!(s.rows(), &[vec![1, 0, 1, 0], vec![0, 1, 1, 1]]);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let field = f(3);
        let s = SubspaceBasis::from_rows(
            &field,
            3,
            &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 0]],
        );
        // 2*(1,2,0) = (2,1,0) over F_3, so the span is a single line.
        assert_eq!(s.dim(), 1);
        assert_eq!(s.rows(), &[vec![1, 2, 0]]);
    }

    #[test]
    fn distance_examples() {
        let field = f(2);
        let line_a = SubspaceBasis::from_rows(&field, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let line_b = SubspaceBasis::from_rows(&field, 4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        let line_c = SubspaceBasis::from_rows(&field, 4, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        let point = SubspaceBasis::from_rows(&field, 4, &[vec![1, 0, 0, 0]]);
        let zero = SubspaceBasis::zero(4);
        // Complementary lines: distance 4; lines meeting in a point: 2.
        assert_eq!(subspace_distance(&field, &line_a, &line_b), 4);
        assert_eq!(subspace_distance(&field, &line_a, &line_c), 2);
        // Nested subspaces: distance is the dimension gap.
        assert_eq!(subspace_distance(&field, &point, &line_a), 1);
        assert_eq!(subspace_distance(&field, &zero, &line_a), 2);
        assert_eq!(subspace_distance(&field, &line_a, &line_a), 0);
    }

    #[test]
    fn enumeration_count_matches_q_binomial() {
        for q in [2u64, 3] {
            let field = f(q);
            for v in 0..=5u32 {
                for k in 0..=v {
                    let subs = enumerate_subspaces(&field, v, k, 100_000).unwrap();
                    let expected = gauss(v as i64, k as i64, q);
                    assert_eq!(
                        expected,
                        subs.len().into(),
                        "count mismatch for q={q}, v={v}, k={k}"
                    );
                    let distinct: HashSet<_> = subs.iter().collect();
                    assert_eq!(distinct.len(), subs.len(), "duplicate canonical forms");
                }
            }
        }
        // One extension field spot check: [3 choose 1]_4 = 21.
        let field = f(4);
        assert_eq!(enumerate_subspaces(&field, 3, 1, 100_000).unwrap().len(), 21);
    }

    #[test]
    fn enumeration_guard_fires() {
        let field = f(2);
        let err = enumerate_subspaces(&field, 10, 5, 1000).unwrap_err();
        match err {
            GfError::EnumerationGuard { needed, guard } => {
                assert_eq!(needed.to_string(), "109221651");
                assert_eq!(guard, 1000);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    proptest! {
        /// Re-reducing a canonical basis is a no-op, and the original rows
        /// lie in the span of the reduced basis (checked by reducing the
        /// stacked matrix and comparing dimensions).
        #[test]
        fn rref_is_idempotent_and_span_preserving(
            q in prop::sample::select(vec![2u64, 3, 4]),
            v in 1usize..6,
            raw in prop::collection::vec(prop::collection::vec(0u8..4, 1..6), 1..5),
        ) {
            let field = f(q);
            let rows: Vec<Vec<u8>> = raw
                .into_iter()
                .map(|r| {
                    let mut r: Vec<u8> = r.into_iter().map(|x| x % q as u8).collect();
                    r.resize(v, 0);
                    r
                })
                .collect();
            let s = SubspaceBasis::from_rows(&field, v as u32, &rows);
            let again = SubspaceBasis::from_rows(&field, v as u32, s.rows());
            prop_assert_eq!(&s, &again);
            let stacked: Vec<Vec<u8>> =
                rows.iter().chain(s.rows().iter()).cloned().collect();
            let joint = SubspaceBasis::from_rows(&field, v as u32, &stacked);
            prop_assert_eq!(joint.dim(), s.dim());
        }

        /// Subspace distance is a metric on a random triple of subspaces.
        #[test]
        fn distance_satisfies_triangle_inequality(
            seed_a in prop::collection::vec(prop::collection::vec(0u8..2, 4), 1..4),
            seed_b in prop::collection::vec(prop::collection::vec(0u8..2, 4), 1..4),
            seed_c in prop::collection::vec(prop::collection::vec(0u8..2, 4), 1..4),
        ) {
            let field = f(2);
            let a = SubspaceBasis::from_rows(&field, 4, &seed_a);
            let b = SubspaceBasis::from_rows(&field, 4, &seed_b);
            let c = SubspaceBasis::from_rows(&field, 4, &seed_c);
            let dab = subspace_distance(&field, &a, &b);
            let dbc = subspace_distance(&field, &b, &c);
            let dac = subspace_distance(&field, &a, &c);
            prop_assert!(dac <= dab + dbc);
            prop_assert_eq!(dab, subspace_distance(&field, &b, &a));
            prop_assert_eq!(dab == 0, a == b);
        }
    }
}
