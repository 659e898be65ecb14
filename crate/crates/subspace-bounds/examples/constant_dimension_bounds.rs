//! Upper bounds for constant-dimension codes: all codewords share one
//! dimension k, and the bound recursion chains downward through k.
//!
//! The headline chain here is binary, minimum distance 6: the recursion
//! starts from curated anchors at k=3 and climbs through k=4 and k=5, with
//! the divisible-length refinement shaving the plain rounding step at each
//! level.
//!
//! Run with:
//!
//! ```text
//! cargo run --example constant_dimension_bounds
//! ```

use subspace_bounds::engine::Engine;

fn main() {
    let eng = Engine::new();

    println!("binary chain at distance 6:");
    for (v, k) in [(8u32, 3u32), (9, 3), (10, 3), (9, 4), (10, 4), (10, 5)] {
        let bound = eng.cdc_bound(2, v, 6, k);
        println!(
            "  A_2({v},6;{k}) {} {} [{}]",
            bound.relation(),
            bound.value,
            bound.method
        );
    }

    // The full derivation tree for one cell: the recursion, the divisible
    // rounding, and the curated anchor it bottoms out on.
    println!();
    println!("derivation of A_2(9,6;4):");
    print!("{}", eng.cdc_bound(2, 9, 6, 4).render_tree());

    // Dimensions above v/2 are mirrored to their orthogonal complements.
    println!();
    let high = eng.cdc_bound(2, 10, 6, 7);
    let low = eng.cdc_bound(2, 10, 6, 3);
    println!("duality: A_2(10,6;7) = {} matches A_2(10,6;3) = {}", high.value, low.value);
    assert_eq!(high.value, low.value);
}
