//! Structural laws of the whole engine, checked over parameter grids and
//! randomized inputs.  Everything here is exact — a single off-by-one is a
//! failure, never a tolerance.

mod common;

use num_traits::Zero;
use proptest::prelude::*;
use subspace_bounds::divisible::LengthMonoid;
use subspace_bounds::engine::Engine;
use subspace_bounds::mdc::{
    enumerate_maximal_patterns, johnson_mdc, pattern_feasible, pattern_set, score_bound,
};
use subspace_bounds::qarith::big;

#[test]
fn gaussians_are_symmetric_and_recursive() {
    common::gauss_symmetry_and_recurrence();
}

#[test]
fn constant_dimension_bounds_are_self_dual() {
    common::cdc_duality(&Engine::new());
}

#[test]
fn mixed_bounds_shrink_as_distance_grows() {
    let eng = Engine::new();
    common::mdc_monotone_in_distance(&eng, 2, 10);
    common::mdc_monotone_in_distance(&eng, 3, 10);
}

#[test]
fn mixed_bounds_dominate_their_slices() {
    let eng = Engine::new();
    common::mdc_dominates_cdc_slices(&eng, 2, 9);
    common::mdc_dominates_cdc_slices(&eng, 3, 8);
}

#[test]
fn divisible_rounding_never_loosens() {
    common::divisible_never_exceeds_plain(&Engine::new());
}

#[test]
fn solver_agrees_with_exhaustive_enumeration() {
    common::ilp_matches_enumeration(100);
}

/// The enumerator promises a componentwise cover: each entry of an emitted
/// ceiling is attainable on its own (with the forced-once dimensions
/// present), and whenever at most one dimension of the support can repeat,
/// the whole ceiling is attainable at once.  Ceilings whose support has two
/// or more repeatable dimensions are deliberately boxes around the joint
/// trade-off curve, so only their per-entry slices are required to be
/// meetable.
#[test]
fn enumerated_patterns_are_feasible() {
    let eng = Engine::new();
    for q in [2u64, 3] {
        for (ambient, d) in [(5u32, 3u32), (6, 3), (7, 4), (8, 5), (9, 5)] {
            for include0 in [false, true] {
                let patterns = enumerate_maximal_patterns(&eng, q, ambient, d, include0);
                assert!(!patterns.is_empty(), "no patterns at q={q} ambient={ambient} d={d}");
                for p in patterns.iter() {
                    let repeatable: Vec<usize> = p
                        .iter()
                        .enumerate()
                        .filter(|(i, b)| !b.is_zero() && 2 * *i as u32 >= d)
                        .map(|(i, _)| i)
                        .collect();
                    if repeatable.len() <= 1 {
                        assert!(
                            pattern_feasible(&eng, q, ambient, d, p),
                            "unmeetable ceiling {p:?} emitted at q={q} ambient={ambient} d={d}"
                        );
                    } else {
                        for &keep in &repeatable {
                            let mut slice = p.clone();
                            for &other in &repeatable {
                                if other != keep {
                                    slice[other] = big(0);
                                }
                            }
                            assert!(
                                pattern_feasible(&eng, q, ambient, d, &slice),
                                "entry {keep} of ceiling {p:?} is unattainable at q={q} ambient={ambient} d={d}"
                            );
                        }
                    }
                }
            }
        }
    }
}

/// The distribution program can never exceed the per-point score relaxation
/// built from the same pattern ceilings.
#[test]
fn distribution_program_never_exceeds_the_score_relaxation() {
    let eng = Engine::new();
    for (q, v, d) in [
        (2u64, 7u32, 3u32),
        (2, 8, 5),
        (2, 9, 5),
        (2, 10, 5),
        (3, 7, 3),
        (3, 8, 5),
        (3, 9, 5),
    ] {
        let program = johnson_mdc(&eng, q, v, d);
        let relaxation = score_bound(&eng, q, v, d);
        assert!(
            program.value <= relaxation.value,
            "program {} exceeds relaxation {} at q={q} v={v} d={d}",
            program.value,
            relaxation.value
        );
    }
}

/// Pattern sets serialize with their full audit payload.
#[test]
fn pattern_sets_serialize_for_audit() {
    let eng = Engine::new();
    let set = pattern_set(&eng, 2, 6, 3, false);
    let json = serde_json::to_value(&set).expect("serializable");
    for key in ["q", "v", "d", "patterns", "omega"] {
        assert!(json.get(key).is_some(), "audit payload lacks {key}: {json}");
    }
    assert!(json["patterns"].as_array().is_some_and(|a| !a.is_empty()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Realizable lengths are closed under addition: gluing two codes of
    /// realizable lengths yields a code of the combined length.
    #[test]
    fn realizable_lengths_are_additively_closed(
        q in prop::sample::select(vec![2u64, 3]),
        r in 2u32..=3,
        a in 0i64..=300,
        b in 0i64..=300,
    ) {
        let mut monoid = LengthMonoid::new(q, r);
        if monoid.realizable(&big(a)) && monoid.realizable(&big(b)) {
            prop_assert!(
                monoid.realizable(&big(a + b)),
                "lengths {a} and {b} are realizable but {a}+{b} is not (q={q}, r={r})"
            );
        }
    }

    /// Generator multiples are always realizable.
    #[test]
    fn generator_multiples_are_realizable(
        q in prop::sample::select(vec![2u64, 3]),
        r in 2u32..=3,
        factor in 0i64..=12,
    ) {
        let mut monoid = LengthMonoid::new(q, r);
        for &g in monoid.generators().to_vec().iter() {
            prop_assert!(monoid.realizable(&(big(g as i64) * big(factor))));
        }
    }
}
