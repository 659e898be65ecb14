//! Verifying an explicit subspace code against a required distance.
//!
//! Loads the shipped line spread of `F_2^4` (five pairwise-disjoint
//! 2-dimensional subspaces, the optimum for distance 4), confirms it, then
//! adds a sixth line to show how violations are reported.

use subspace_bounds::gfspace::{verify_code, ExplicitCode};

fn main() {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/line_spread_2_4.json"
    );
    let text = std::fs::read_to_string(path).unwrap();
    let code: ExplicitCode = serde_json::from_str(&text).unwrap();

    let report = verify_code(&code, 4).unwrap();
    println!("line spread of F_2^4:");
    println!("  size {}, distribution {}", report.size, report.distribution_display());
    println!("  minimum distance {:?}, ok = {}", report.min_distance, report.ok());

    // A sixth line must meet the spread somewhere.
    let mut broken = code;
    broken.subspaces.push(vec![vec![1, 0, 0, 0], vec![0, 0, 1, 1]]);
    let report = verify_code(&broken, 4).unwrap();
    println!("\nafter appending a sixth line:");
    println!("  minimum distance {:?}, ok = {}", report.min_distance, report.ok());
    for violation in &report.violations {
        println!(
            "  violation: codewords {} and {} at distance {}",
            violation.i, violation.j, violation.distance
        );
    }
}
