//! Exact upper bounds for subspace codes over finite fields.
//!
//! A subspace code is a set of subspaces of F_q^v under the subspace metric
//! `d(X,Y) = dim(X+Y) - dim(X∩Y)`. This crate computes upper bounds on the
//! maximum size of such codes — mixed-dimension (`A_q(v,d)`) and
//! constant-dimension (`A_q(v,d;k)`) — using only exact integer and rational
//! arithmetic. No floating point is used anywhere.
//!
//! The bound machinery combines:
//!
//! - Johnson-type recursions, sharpened by divisibility of column multiplicities,
//! - the length-realizability monoid of q^r-divisible linear codes,
//! - partial-spread theorems (linear-programming and square-root flavors),
//! - an exact rational-arithmetic simplex + branch-and-bound ILP solver,
//! - ball-packing ILPs and closed-form evaluators for mixed-dimension codes,
//! - a brute-force finite-geometry oracle for small parameters.
//!
//! Every bound is returned as a [`bound::BoundResult`] derivation tree that
//! records the value, whether it is known to be attained, the method used,
//! and the sub-bounds it depends on.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example gaussian_numbers
//! cargo run --example finite_geometry
//! cargo run --example verify_code
//! cargo run --example exact_oracle
//! cargo run --example divisible_lengths
//! cargo run --example partial_spreads
//! cargo run --example ilp_solver
//! cargo run --example constant_dimension_bounds
//! cargo run --example sphere_packing
//! cargo run --example mixed_dimension_johnson
//! cargo run --example analytic_bounds
//! cargo run --example bounds_table
//! ```
//!
//! Quick taste:
//!
//! ```
//! use subspace_bounds::engine::Engine;
//! let eng = Engine::new();
//! let r = eng.cdc_bound(2, 6, 4, 3);
//! assert_eq!(r.value.to_string(), "77");
//! ```

pub mod bound;
pub mod cache;
pub mod cdc;
pub mod divisible;
pub mod engine;
pub mod facts;
pub mod gfspace;
pub mod ilp;
pub mod mdc;
pub mod qarith;
pub mod report;
pub mod spreads;
