//! Rendering a grid of mixed-dimension bounds as a table.
//!
//! Each cell is the engine's best upper bound for A_q(v,d) with the winning
//! method tagged; cells outside the valid range 1 <= d <= v stay empty.  The
//! same grid is available as CSV for downstream tooling.
//!
//! Run with:
//!
//! ```text
//! cargo run --example bounds_table
//! ```

use subspace_bounds::engine::Engine;
use subspace_bounds::report::{bounds_table, TableFormat, DEFAULT_MAX_AMBIENT};

fn main() {
    let eng = Engine::new();

    let markdown = bounds_table(&eng, 2, 5..=7, 3..=7, TableFormat::Markdown, DEFAULT_MAX_AMBIENT)
        .expect("small grid renders");
    println!("{markdown}");

    let csv = bounds_table(&eng, 3, 4..=5, 2..=4, TableFormat::Csv, DEFAULT_MAX_AMBIENT)
        .expect("small grid renders");
    println!("the same idea as CSV (q=3):");
    print!("{csv}");
}
