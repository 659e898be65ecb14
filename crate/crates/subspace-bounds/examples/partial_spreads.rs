//! Upper bounds for partial spreads: collections of k-dimensional subspaces
//! of F_q^v that pairwise meet only in the zero vector.
//!
//! When k divides v a perfect spread exists and its size is known exactly.
//! Otherwise two bound families compete: a linear-remainder form that is
//! often exact for small remainders, and a square-root correction that takes
//! over when the remainder grows.  `ps_best` picks whichever is tighter and
//! reports which one won.
//!
//! Run with:
//!
//! ```text
//! cargo run --example partial_spreads
//! ```

use subspace_bounds::spreads::{ps_best, ps_bound_linear, ps_bound_sqrt, spread_size};

fn main() {
    println!("perfect spreads (k divides v):");
    for (q, v, k) in [(2u64, 4u32, 2u32), (2, 6, 2), (2, 6, 3), (3, 6, 3), (2, 8, 4)] {
        println!("  q={q} v={v} k={k}: spread of size {}", spread_size(q, v, k));
    }

    // `ps_best` also recognises the divisible case, so it can be called
    // uniformly: (2,9,3) comes back as an exact spread, the rest as bounds.
    println!();
    println!("best bound per parameter set:");
    for (q, v, k) in [
        (2u64, 8u32, 3u32),
        (2, 9, 3),
        (2, 10, 3),
        (3, 8, 3),
        (2, 11, 4),
        (2, 13, 5),
    ] {
        let best = ps_best(q, v, k);
        println!(
            "  q={q} v={v} k={k}: {} {} [{}]",
            best.relation(),
            best.value,
            best.method
        );
    }

    // The two competing forms, side by side.  At q=2, v=8, k=3 both land on
    // 34; at v=11, k=4 the linear form does not apply and the square-root
    // correction carries the bound alone.
    println!();
    println!("how the two families compare:");
    for (q, v, k) in [(2u64, 8u32, 3u32), (2, 11, 4)] {
        let linear = ps_bound_linear(q, v, k).map(|(value, _, exact)| (value, exact));
        let sqrt = ps_bound_sqrt(q, v, k).map(|(value, _)| value);
        println!("  q={q} v={v} k={k}: linear {linear:?}, sqrt {sqrt:?}");
    }
}
