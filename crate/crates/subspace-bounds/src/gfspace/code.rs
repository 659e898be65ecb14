//! Explicit subspace codes and distance verification.
//!
//! An [`ExplicitCode`] is the JSON interchange form for a concrete code: the
//! field order, the ambient dimension, and one generator matrix per codeword
//! (a list of row vectors with entries in `0..q`). [`verify_code`] reduces
//! every matrix to its canonical basis, computes all pairwise distances, and
//! reports either a clean bill of health (with the dimension distribution)
//! or the offending pairs.

use serde::{Deserialize, Serialize};

use super::field::{Field, GfError};
use super::subspace::{subspace_distance, SubspaceBasis};

/// A concrete subspace code given by generator matrices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExplicitCode {
    /// Field order.
    pub q: u64,
    /// Ambient dimension.
    pub v: u32,
    /// One generator matrix per codeword; rows are vectors in `F_q^v`.
    pub subspaces: Vec<Vec<Vec<u8>>>,
}

/// A pair of codewords closer than the required minimum distance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    /// Indices into the codeword list, `i < j`.
    pub i: usize,
    pub j: usize,
    /// Their subspace distance.
    pub distance: u32,
}

/// Result of checking an explicit code against a required distance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub q: u64,
    pub v: u32,
    /// Number of codewords (duplicates included; they show up as distance-0
    /// violations).
    pub size: usize,
    /// Minimum pairwise distance; `None` for codes with fewer than two
    /// codewords.
    pub min_distance: Option<u32>,
    /// `distribution[k]` counts codewords of dimension `k`, `0 <= k <= v`.
    pub distribution: Vec<u64>,
    /// All pairs with distance below the required minimum.
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    /// Whether the code meets the required distance.
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// The distribution in exponent notation, e.g. `1^3 2^5` for three
    /// one-dimensional and five two-dimensional codewords.
    pub fn distribution_display(&self) -> String {
        let parts: Vec<String> = self
            .distribution
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(k, n)| format!("{k}^{n}"))
            .collect();
        if parts.is_empty() {
            "(empty)".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Checks that `code` has minimum subspace distance at least `d`.
///
/// Entries are validated against the field order and every generator matrix
/// is canonicalized first, so dependent or permuted generator rows are
/// harmless. The dimension of a codeword is the rank of its matrix.
pub fn verify_code(code: &ExplicitCode, d: u32) -> Result<VerifyReport, GfError> {
    let field = Field::new(code.q)?;
    let mut words = Vec::with_capacity(code.subspaces.len());
    for matrix in &code.subspaces {
        for row in matrix {
            if row.len() != code.v as usize {
                return Err(GfError::EntryOutOfRange {
                    entry: row.len() as u64,
                    q: code.v as u64,
                });
            }
            for &e in row {
                field.check_entry(e as u64)?;
            }
        }
        words.push(SubspaceBasis::from_rows(&field, code.v, matrix));
    }
    let mut distribution = vec![0u64; code.v as usize + 1];
    for w in &words {
        distribution[w.dim() as usize] += 1;
    }
    let mut min_distance: Option<u32> = None;
    let mut violations = Vec::new();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let dist = subspace_distance(&field, &words[i], &words[j]);
            min_distance = Some(min_distance.map_or(dist, |m| m.min(dist)));
            if dist < d {
                violations.push(Violation { i, j, distance: dist });
            }
        }
    }
    Ok(VerifyReport {
        q: code.q,
        v: code.v,
        size: words.len(),
        min_distance,
        distribution,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The standard line spread of `F_2^4`: five pairwise-disjoint lines.
    fn line_spread() -> ExplicitCode {
        ExplicitCode {
            q: 2,
            v: 4,
            subspaces: vec![
                vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
                vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
                vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]],
                vec![vec![1, 0, 0, 1], vec![0, 1, 1, 1]],
                vec![vec![1, 0, 1, 1], vec![0, 1, 1, 0]],
            ],
        }
    }

    #[test]
    fn spread_verifies_at_distance_four() {
        let report = verify_code(&line_spread(), 4).unwrap();
        assert!(report.ok());
        assert_eq!(report.min_distance, Some(4));
        assert_eq!(report.distribution, vec![0, 0, 5, 0, 0]);
        assert_eq!(report.distribution_display(), "2^5");
    }

    #[test]
    fn close_pair_is_reported() {
        let mut code = line_spread();
        // A sixth line must meet the spread: each of its three points is
        // already covered, so exactly three pairs drop to distance 2.
        code.subspaces.push(vec![vec![1, 0, 0, 0], vec![0, 0, 1, 1]]);
        let report = verify_code(&code, 4).unwrap();
        assert!(!report.ok());
        assert_eq!(report.min_distance, Some(2));
        assert_eq!(report.violations.len(), 3);
        assert!(report
            .violations
            .iter()
            .all(|viol| viol.j == 5 && viol.distance == 2));
    }

    #[test]
    fn duplicate_codewords_have_distance_zero() {
        let mut code = line_spread();
        // Same line as codeword 0, written with a different basis.
        code.subspaces.push(vec![vec![1, 1, 0, 0], vec![0, 1, 0, 0]]);
        let report = verify_code(&code, 1).unwrap();
        assert_eq!(report.min_distance, Some(0));
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].distance, 0);
    }

    #[test]
    fn mixed_dimensions_are_counted_by_rank() {
        let code = ExplicitCode {
            q: 3,
            v: 3,
            subspaces: vec![
                vec![vec![0, 0, 0]],                               // rank 0
                vec![vec![1, 2, 0], vec![2, 1, 0]],                // rank 1
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], // rank 3
            ],
        };
        let report = verify_code(&code, 1).unwrap();
        assert_eq!(report.distribution, vec![1, 1, 0, 1]);
    }

    #[test]
    fn bad_entries_are_rejected() {
        let code = ExplicitCode { q: 2, v: 2, subspaces: vec![vec![vec![0, 2]]] };
        assert!(verify_code(&code, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let code = line_spread();
        let text = serde_json::to_string(&code).unwrap();
        let back: ExplicitCode = serde_json::from_str(&text).unwrap();
        assert_eq!(back.subspaces, code.subspaces);
        assert_eq!(back.q, 2);
        assert_eq!(back.v, 4);
    }
}
