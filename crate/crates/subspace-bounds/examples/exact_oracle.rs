//! Exhaustive ground truth for small parameters.
//!
//! For tiny `(q, v)` the maximum code size can be settled outright: build
//! every subspace, connect pairs at distance ≥ d, and find a maximum
//! clique. The values here cross-check the closed formulas the engine uses
//! for the same parameters.

use subspace_bounds::engine::Engine;
use subspace_bounds::gfspace::brute_force_max;

fn main() {
    let eng = Engine::new();

    println!("mixed dimension, F_2^4:");
    for d in 1..=4 {
        let brute = brute_force_max(2, 4, d, None, 10_000).unwrap();
        let formula = eng.mdc_bound(2, 4, d);
        println!(
            "  A_2(4,{d}): exhaustive {} over {} subspaces, formula {} [{}]",
            brute.value,
            brute.vertex_count,
            formula.value,
            formula.method.tag()
        );
    }

    println!("\nconstant dimension, planes of F_3^3 at distance 2:");
    let brute = brute_force_max(3, 3, 2, Some(2), 10_000).unwrap();
    println!("  A_3(3,2;2) = {}", brute.value);
    println!("  witness ({} codewords):", brute.witness.len());
    for word in &brute.witness {
        let rows: Vec<String> = word
            .rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<String>())
            .collect();
        println!("    [{}]", rows.join(" "));
    }
}
