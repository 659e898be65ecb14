//! Gaussian binomial coefficients with exact big-integer arithmetic.
//!
//! `gauss(v, k, q)` counts the k-dimensional subspaces of `F_q^v`. The
//! triangle below is the q-analog of Pascal's triangle; the final lines
//! show that the arithmetic stays exact far beyond machine integers.

use subspace_bounds::qarith::{gauss, qnum};

fn main() {
    let q = 2;
    println!("Gaussian triangle for q = {q} (rows v = 0..=6):");
    for v in 0..=6i64 {
        let row: Vec<String> = (0..=v).map(|k| gauss(v, k, q).to_string()).collect();
        println!("  v={v}: {}", row.join(" "));
    }

    println!("\nSymmetry: [10 choose 3]_2 = [10 choose 7]_2 = {}", gauss(10, 3, 2));
    println!("Points of PG(8, 2): [9]_2 = {}", qnum(9, 2));

    let big = gauss(40, 20, 2);
    println!("\n[40 choose 20]_2 has {} decimal digits:", big.to_string().len());
    println!("  {big}");
}
