//! Explicit subspace enumeration over a small finite field.
//!
//! Enumerates every subspace of `F_2^4` in reduced row-echelon form,
//! checks the counts against the Gaussian binomials, and computes a few
//! subspace distances `d(X,Y) = dim(X+Y) - dim(X∩Y)`.

use subspace_bounds::gfspace::{enumerate_subspaces, subspace_distance, Field, SubspaceBasis};
use subspace_bounds::qarith::gauss;

fn main() {
    let field = Field::new(2).unwrap();
    let v = 4;

    println!("Subspaces of F_2^{v}, by dimension:");
    for k in 0..=v {
        let spaces = enumerate_subspaces(&field, v, k, 10_000).unwrap();
        println!(
            "  dim {k}: {} subspaces (Gaussian count {})",
            spaces.len(),
            gauss(v as i64, k as i64, 2)
        );
    }

    let line = SubspaceBasis::from_rows(&field, v, &[vec![1, 0, 0, 0]]);
    let plane = SubspaceBasis::from_rows(&field, v, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
    let skew = SubspaceBasis::from_rows(&field, v, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);

    println!("\nDistances:");
    println!("  d(line, plane containing it) = {}", subspace_distance(&field, &line, &plane));
    println!("  d(plane, complementary plane) = {}", subspace_distance(&field, &plane, &skew));
    println!("  d(line, complementary plane) = {}", subspace_distance(&field, &line, &skew));
}
