//! Vector-space geometry over small finite fields.
//!
//! Everything in this module works with explicit coordinates: subspaces are
//! reduced-row-echelon bases, codes are lists of subspaces, and maximum code
//! sizes can be settled by exhaustive clique search. The intended use is
//! small-parameter ground truth: the bound machinery in the rest of the crate
//! never touches coordinates, but every closed formula it relies on can be
//! cross-checked here for tiny `(q, v)`.

pub mod clique;
pub mod code;
pub mod field;
pub mod subspace;

pub use clique::{brute_force_max, max_clique, BruteForceResult};
pub use code::{verify_code, ExplicitCode, VerifyReport, Violation};
pub use field::{Field, GfError};
pub use subspace::{enumerate_subspaces, subspace_distance, SubspaceBasis};
