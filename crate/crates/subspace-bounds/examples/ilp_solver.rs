//! The exact rational LP/ILP solver that powers the distribution programs.
//!
//! All arithmetic is done over arbitrary-precision rationals, so optima are
//! exact — no floating-point tolerances anywhere.  The integer solver is a
//! plain branch-and-bound over the rational LP relaxation.
//!
//! Run with:
//!
//! ```text
//! cargo run --example ilp_solver
//! ```

use subspace_bounds::ilp::{rq, Cmp, Model, Sense};

fn main() {
    // A tiny knapsack-ish model:
    //   maximise 5x + 4y
    //   s.t.     6x + 4y <= 24
    //            1x + 2y <= 6
    //            x, y >= 0 integer
    let mut model = Model::new("demo");
    let x = model.add_nonneg("x", None, true);
    let y = model.add_nonneg("y", None, true);
    model.add_constraint("capacity", vec![(x, rq(6)), (y, rq(4))], Cmp::Le, rq(24));
    model.add_constraint("labour", vec![(x, rq(1)), (y, rq(2))], Cmp::Le, rq(6));
    model.set_objective(vec![(x, rq(5)), (y, rq(4))], Sense::Maximize);

    println!("{}", model.dump());

    // The LP relaxation lands on a fractional vertex...
    let relaxed = model.solve_lp().expect_optimal("lp relaxation");
    println!("LP relaxation: objective {}, point {:?}", relaxed.objective, relaxed.values);

    // ...and branch-and-bound rounds it down to the best lattice point.
    let integral = model
        .solve_ilp()
        .expect("solver within node budget")
        .expect_optimal("integer optimum");
    println!(
        "ILP optimum:   objective {}, point {:?} ({} nodes)",
        integral.objective, integral.values, integral.nodes
    );
    assert!(integral.objective <= relaxed.objective);

    // Exactness matters: thirds stay thirds.
    let mut fractional = Model::new("thirds");
    let t = fractional.add_nonneg("t", None, false);
    fractional.add_constraint("third", vec![(t, rq(3))], Cmp::Le, rq(1));
    fractional.set_objective(vec![(t, rq(1))], Sense::Maximize);
    let opt = fractional.solve_lp().expect_optimal("thirds");
    println!("exact rational optimum of max t s.t. 3t <= 1: {}", opt.objective);
}
