//! The dimension-distribution program for mixed-dimension codes.
//!
//! Codewords are grouped by dimension; an exact integer program over the
//! feasible dimension distributions — point-counting constraints, coupling
//! between the zero space and low dimensions, and per-dimension capacity
//! caps — bounds the total size.  Case splits on spread-like extremal
//! configurations tighten it further.
//!
//! Run with:
//!
//! ```text
//! cargo run --example mixed_dimension_johnson
//! ```

use subspace_bounds::engine::Engine;
use subspace_bounds::mdc::johnson_mdc;

fn main() {
    let eng = Engine::new();

    // The headline binary case: the full derivation tree shows the case
    // split and the distribution optimum behind the 808.
    let bound = eng.mdc_bound(2, 7, 3);
    println!("A_2(7,3) {} {} [{}]", bound.relation(), bound.value, bound.method);
    println!();
    print!("{}", bound.render_tree());

    // The program run directly, without the rest of the dispatcher.
    println!();
    println!("distribution program on its own:");
    for (q, v, d) in [(2u64, 7u32, 3u32), (2, 9, 5), (2, 10, 5), (3, 9, 5)] {
        let direct = johnson_mdc(&eng, q, v, d);
        println!("  A_{q}({v},{d}) <= {} — {}", direct.value, direct.detail);
    }
}
