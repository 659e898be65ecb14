//! Closed-form bounds for four parameter families.
//!
//! For a handful of shapes the distribution program collapses to a formula:
//! two fixed small-parameter families (v=7 and v=8 at distance 3) and two
//! families at distance v-4, one for odd and one for even ambient dimension.
//! Each returns the same kind of result tree as the general machinery, so
//! the dispatcher can compare them on equal footing.
//!
//! Run with:
//!
//! ```text
//! cargo run --example analytic_bounds
//! ```

use subspace_bounds::engine::Engine;
use subspace_bounds::mdc::{analytic_2m_2m4, analytic_7_3, analytic_8_3, analytic_v_minus_4_odd};

fn main() {
    let eng = Engine::new();

    let seven = analytic_7_3(2);
    println!("A_2(7,3) <= {} [{}]", seven.value, seven.method);

    // The v=8 form keeps its unrounded intermediate in the detail string, so
    // the final integer can be audited against the raw optimum.
    let eight = analytic_8_3(&eng, 2);
    println!("A_2(8,3) <= {} [{}]", eight.value, eight.method);
    println!("  {}", eight.detail);

    println!();
    println!("distance v-4, odd ambient dimension:");
    for v in [11u32, 13] {
        let bound = analytic_v_minus_4_odd(&eng, 2, v);
        println!("  A_2({v},{}) <= {} [{}]", v - 4, bound.value, bound.method);
    }

    println!();
    println!("distance v-4, even ambient dimension (v = 2m):");
    for m in [4u32, 5, 6] {
        let bound = analytic_2m_2m4(&eng, 2, m);
        println!("  A_2({},{}) <= {} [{}]", 2 * m, 2 * m - 4, bound.value, bound.method);
    }

    // The dispatcher reaches the same values through the candidate list.
    assert_eq!(eng.mdc_bound(2, 7, 3).value, seven.value);
    assert_eq!(eng.mdc_bound(2, 10, 6).value, analytic_2m_2m4(&eng, 2, 5).value);
}
