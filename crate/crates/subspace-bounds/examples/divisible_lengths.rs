//! Length realizability of divisible linear codes, and the sharpened
//! rounding it buys.
//!
//! A `q^r`-divisible linear code (all weights divisible by `q^r`) exists
//! only for effective lengths in a numerical monoid. Dividing an incidence
//! count by `[k]_q` and rounding down can therefore overshoot: the true
//! quotient is the largest `b` with `a - b·[k]_q` a realizable length.

use subspace_bounds::divisible::LengthMonoid;
use subspace_bounds::engine::Engine;
use subspace_bounds::qarith::{big, qnum};

fn main() {
    let mut monoid = LengthMonoid::new(3, 3);
    println!(
        "27-divisible ternary codes: generators {:?}",
        monoid.generators()
    );
    for n in [7i64, 40, 47, 79, 87, 120] {
        println!("  length {n}: realizable = {}", monoid.realizable(&big(n)));
    }

    let eng = Engine::new();
    println!("\nsharpened quotients over 2^(k-1)-divisible binary codes:");
    for (a, k) in [
        (big(511) * big(34), 4u32),
        (big(1023) * big(73), 4),
        (big(1023) * big(1156), 5),
    ] {
        let quotient = eng.divisible_quotient(&a, k, 2).unwrap();
        let plain = &a / qnum(k, 2);
        println!(
            "  {a} / [{k}]_2: divisible quotient {quotient}, plain floor {plain} (gap {})",
            &plain - &quotient
        );
    }
}
