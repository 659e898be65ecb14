//! Invariant suites shared between the integration-test targets.
//!
//! Each function here checks one structural law of the engine over a whole
//! parameter grid and panics with a precise counterexample on the first
//! violation.  Everything is exact arithmetic — there are no tolerances.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use subspace_bounds::engine::Engine;
use subspace_bounds::ilp::{rq, Cmp, Model, Outcome, Sense};
use subspace_bounds::qarith::{big, floor_div, gauss, qnum, qpow};

/// Symmetry and both Pascal-style recurrences of the Gaussian binomial
/// coefficients, over all fields `q <= 5` and ambients `v <= 12`.
pub fn gauss_symmetry_and_recurrence() {
    for q in 2u64..=5 {
        for v in 0i64..=12 {
            for k in 0..=v {
                let lhs = gauss(v, k, q);
                assert_eq!(
                    lhs,
                    gauss(v, v - k, q),
                    "symmetry broke at [{v} choose {k}]_{q}"
                );
                if v >= 1 && k >= 1 && k <= v - 1 {
                    let low = gauss(v - 1, k - 1, q) + qpow(q, k as u32) * gauss(v - 1, k, q);
                    let high =
                        gauss(v - 1, k, q) + qpow(q, (v - k) as u32) * gauss(v - 1, k - 1, q);
                    assert_eq!(lhs, low, "low recurrence broke at [{v} choose {k}]_{q}");
                    assert_eq!(lhs, high, "high recurrence broke at [{v} choose {k}]_{q}");
                }
            }
        }
    }
}

/// Orthogonal-complement duality: the constant-dimension bound is unchanged
/// under `k -> v - k`, for every distance (odd distances included, which
/// exercises the even-distance normalisation too).
pub fn cdc_duality(engine: &Engine) {
    for q in [2u64, 3] {
        for v in 1u32..=10 {
            for d in 1..=v {
                for k in 0..=v {
                    let a = engine.cdc_bound(q, v, d, k);
                    let b = engine.cdc_bound(q, v, d, v - k);
                    assert_eq!(
                        a.value, b.value,
                        "duality broke: A_{q}({v},{d};{k}) = {} but A_{q}({v},{d};{}) = {}",
                        a.value,
                        v - k,
                        b.value
                    );
                }
            }
        }
    }
}

/// Relaxing the distance can only grow the bound: for fixed `(q, v)` the
/// mixed-dimension bound is non-increasing in `d`.
pub fn mdc_monotone_in_distance(engine: &Engine, q: u64, v_max: u32) {
    for v in 1..=v_max {
        let mut prev: Option<BigInt> = None;
        for d in 1..=v {
            let value = engine.mdc_bound(q, v, d).value.clone();
            if let Some(above) = &prev {
                assert!(
                    &value <= above,
                    "monotonicity broke: A_{q}({v},{d}) = {value} exceeds the d={} bound {above}",
                    d - 1
                );
            }
            prev = Some(value);
        }
    }
}

/// A mixed-dimension code contains each of its constant-dimension slices, so
/// the mixed bound must dominate every per-dimension bound.
pub fn mdc_dominates_cdc_slices(engine: &Engine, q: u64, v_max: u32) {
    for v in 1..=v_max {
        for d in 1..=v {
            let mixed = engine.mdc_bound(q, v, d).value.clone();
            let d_even = d + d % 2;
            if d_even > v {
                continue;
            }
            for k in 0..=v {
                let slice = engine.cdc_bound(q, v, d_even, k);
                assert!(
                    slice.value <= mixed,
                    "slice broke: A_{q}({v},{d_even};{k}) = {} exceeds A_{q}({v},{d}) = {mixed}",
                    slice.value
                );
            }
        }
    }
}

/// The divisible-length refinement never exceeds the plain Johnson rounding:
/// both on the structured recursion numerators and on random numerators.
pub fn divisible_never_exceeds_plain(engine: &Engine) {
    for q in [2u64, 3] {
        for v in 3u32..=10 {
            for d in (2..v).step_by(2) {
                // The recursion step divides [v]_q times the bound one level
                // down by [k]_q; compare its two rounding modes directly.
                for k_inner in 1..=(v - 1) / 2 {
                    let k = k_inner + 1;
                    let inner = engine.cdc_bound(q, v - 1, d, k_inner);
                    let numerator = &inner.value * qnum(v, q);
                    let plain = floor_div(&numerator, &qnum(k, q));
                    let sharpened = engine
                        .divisible_quotient(&numerator, k, q)
                        .expect("nonnegative numerator");
                    assert!(
                        sharpened <= plain,
                        "refinement exceeded plain rounding at q={q} v={v} d={d} k={k}: {sharpened} > {plain}"
                    );
                }
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let q = [2u64, 3][rng.gen_range(0..2)];
        let k = rng.gen_range(2u32..=5);
        let numerator = big(rng.gen_range(0..=5_000_000i64));
        let plain = floor_div(&numerator, &qnum(k, q));
        let sharpened = engine
            .divisible_quotient(&numerator, k, q)
            .expect("nonnegative numerator");
        assert!(
            sharpened <= plain,
            "refinement exceeded plain rounding on {numerator} / [{k}]_{q}: {sharpened} > {plain}"
        );
    }
}

/// One random small integer program: up to three box-bounded integer
/// variables, a few random constraints, random maximisation objective.
fn random_model(rng: &mut StdRng, tag: usize) -> (Model, Vec<i64>) {
    let n = rng.gen_range(1..=3);
    let mut model = Model::new(format!("random{tag}"));
    let mut ubs = Vec::new();
    let mut vars = Vec::new();
    for i in 0..n {
        let ub = rng.gen_range(0..=4i64);
        vars.push(model.add_nonneg(format!("x{i}"), Some(rq(ub)), true));
        ubs.push(ub);
    }
    let rows = rng.gen_range(1..=3);
    for r in 0..rows {
        let terms: Vec<_> = vars
            .iter()
            .map(|&v| (v, rq(rng.gen_range(-3..=3i64))))
            .collect();
        let cmp = if rng.gen_bool(0.5) { Cmp::Le } else { Cmp::Ge };
        model.add_constraint(format!("c{r}"), terms, cmp, rq(rng.gen_range(-6..=12i64)));
    }
    let objective: Vec<_> = vars
        .iter()
        .map(|&v| (v, rq(rng.gen_range(-5..=5i64))))
        .collect();
    model.set_objective(objective, Sense::Maximize);
    (model, ubs)
}

/// Cross-checks the branch-and-bound solver against exhaustive enumeration
/// of the integer box on `count` random models, and checks the integer
/// optimum never exceeds the rational relaxation.
pub fn ilp_matches_enumeration(count: usize) {
    let mut rng = StdRng::seed_from_u64(2026);
    for tag in 0..count {
        let (model, ubs) = random_model(&mut rng, tag);

        // Brute force over the whole lattice box.
        let mut best: Option<num_rational::BigRational> = None;
        let mut point = vec![0i64; ubs.len()];
        loop {
            let values: Vec<_> = point.iter().map(|&x| rq(x)).collect();
            if model.is_feasible(&values) {
                let obj = model.objective_at(&values);
                if best.as_ref().is_none_or(|b| obj > *b) {
                    best = Some(obj);
                }
            }
            // Odometer increment through the box.
            let mut carry = true;
            for (slot, &ub) in point.iter_mut().zip(&ubs) {
                if !carry {
                    break;
                }
                if *slot < ub {
                    *slot += 1;
                    carry = false;
                } else {
                    *slot = 0;
                }
            }
            if carry {
                break;
            }
        }

        let ilp = model.solve_ilp().expect("within the node budget");
        match (&ilp, &best) {
            (Outcome::Optimal(sol), Some(expected)) => {
                assert_eq!(
                    &sol.objective, expected,
                    "model {tag}: solver found {} but enumeration found {expected}\n{}",
                    sol.objective,
                    model.dump()
                );
            }
            (Outcome::Infeasible, None) => {}
            (outcome, expected) => panic!(
                "model {tag}: solver said {outcome:?} but enumeration said {expected:?}\n{}",
                model.dump()
            ),
        }

        if let (Outcome::Optimal(int_sol), Outcome::Optimal(lp_sol)) = (&ilp, &model.solve_lp()) {
            assert!(
                int_sol.objective <= lp_sol.objective,
                "model {tag}: integer optimum {} exceeds relaxation {}",
                int_sol.objective,
                lp_sol.objective
            );
        }
    }
}

/// Exact closed forms for the tiny regimes, used by the oracle-equivalence
/// grid: these are the values the exhaustive search must reproduce.
pub fn expected_exact(engine: &Engine, q: u64, v: u32, d: u32) -> BigInt {
    let bound = engine.mdc_bound(q, v, d);
    assert!(
        bound.exact,
        "A_{q}({v},{d}) is not an exact regime (got {} [{}])",
        bound.value, bound.method
    );
    bound.value.clone()
}

/// Convenience: a fully self-contained engine (curated external records off).
pub fn self_contained() -> Engine {
    use subspace_bounds::engine::EngineOptions;
    Engine::with_options(EngineOptions {
        external_facts: false,
        ..EngineOptions::default()
    })
}
