//! Point patterns: how the members of a mixed-dimension code look from a
//! single point.
//!
//! Fix a point `P` (a 1-dimensional subspace) of `F_q^v`. Every member of a
//! code through `P` projects to a subspace of the quotient `F_q^v / P ≅
//! F_q^{v-1}`, one dimension lower, and the projection preserves pairwise
//! distances between members through `P`. The *pattern* of `P` is the vector
//! counting, per quotient dimension `0..⌊v/2⌋-1`, how many members of that
//! dimension pass through `P`.
//!
//! Only a few patterns can occur: two entries at quotient dimensions `i ≠ j`
//! force `i + j ≥ d` (their projections must be far apart), a dimension can
//! repeat only when `2i ≥ d`, and each entry is capped by the
//! constant-dimension bound in the quotient. [`enumerate_maximal_patterns`]
//! turns these constraints into a small *cover*: a set of componentwise
//! ceilings such that every pattern that can occur lies below some member.
//! The integer programs in [`super::jm`] then only need one counting variable
//! per cover member.
//!
//! Ceilings are sharpened two ways before being returned:
//! - *membership refinement*: a ceiling entry is re-maximized by a nested
//!   distribution program one dimension lower (recursion depth is bounded by
//!   [`crate::engine::EngineOptions::refine_depth`]);
//! - *curated splits*: a configuration recorded as impossible in the fact
//!   store removes its upward closure from the cover, splitting a ceiling
//!   into one-lower pieces.

use crate::bound::{BoundResult, Method};
use crate::engine::Engine;
use crate::ilp::{rq, Outcome, Sense};
use crate::qarith::{big, qnum, ratio, ratio_floor};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::rc::Rc;

use super::jm::{build_model, MixedIlpConfig};

/// Number of entries in a pattern around a point of `F_q^{ambient+1}`:
/// quotient dimensions run from `0` to `⌊(ambient+1)/2⌋ - 1`.
pub(crate) fn pattern_len(ambient: u32) -> usize {
    ((ambient + 1) / 2) as usize
}

/// Per-entry ceilings: two members of equal dimension keep even distance
/// `≥ d` rounded up, so each entry is at most the constant-dimension bound
/// in the quotient space.
fn entry_caps(engine: &Engine, q: u64, ambient: u32, d: u32) -> Vec<BigInt> {
    let d_even = d + d % 2;
    (0..pattern_len(ambient))
        .map(|i| engine.cdc_bound(q, ambient, d_even, i as u32).value)
        .collect()
}

/// All support sets compatible with the pairwise distance requirement:
/// distinct dimensions `i ≠ j` in a support must satisfy `i + j ≥ d`.
fn valid_supports(len: usize, d: u32, include_dim0: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1 << len) {
        let dims: Vec<usize> = (0..len).filter(|i| mask >> i & 1 == 1).collect();
        if !include_dim0 && dims[0] == 0 {
            continue;
        }
        let pairwise_ok = dims
            .iter()
            .enumerate()
            .all(|(idx, &i)| dims[idx + 1..].iter().all(|&j| (i + j) as u32 >= d));
        if pairwise_ok {
            out.push(dims);
        }
    }
    out
}

/// `lhs_i ≥ rhs_i` for every entry (vectors of equal length).
fn dominates(lhs: &[BigInt], rhs: &[BigInt]) -> bool {
    lhs.iter().zip(rhs).all(|(a, b)| a >= b)
}

/// Re-maximize one pattern entry by a distribution program one dimension
/// lower. `forced` pins other entries from below. `None` means no code
/// meets the pinned entries at all.
fn membership_max(
    engine: &Engine,
    q: u64,
    ambient: u32,
    d: u32,
    forced: &[(u32, BigInt)],
    target: u32,
    depth: u32,
) -> Option<BigInt> {
    let inner = enumerate_with_depth(engine, q, ambient - 1, d, true, depth);
    let cfg = MixedIlpConfig {
        forced_min: forced.to_vec(),
        ..MixedIlpConfig::default()
    };
    let (mut model, a_vars, _z) = build_model(engine, q, ambient, d, &inner, &cfg);
    model.set_objective(vec![(a_vars[target as usize], rq(1))], Sense::Maximize);
    match model
        .solve_ilp_with_limit(engine.options().ilp_node_limit)
        .expect("membership program within node budget")
    {
        Outcome::Optimal(sol) => Some(ratio_floor(&sol.objective)),
        Outcome::Infeasible => None,
        Outcome::Unbounded => unreachable!("membership programs have bounded variables"),
    }
}

/// Whether a full pattern can be met simultaneously: the distribution
/// program one dimension lower stays feasible with every entry pinned from
/// below. This is a relaxation — a `true` answer does not certify a code,
/// but a `false` answer rules the pattern out.
pub fn pattern_feasible(engine: &Engine, q: u64, ambient: u32, d: u32, pattern: &[BigInt]) -> bool {
    assert!(
        pattern.len() <= pattern_len(ambient),
        "pattern has more entries than quotient dimensions"
    );
    if ambient < 2 {
        return pattern.iter().sum::<BigInt>() <= BigInt::one();
    }
    let depth = engine.options().refine_depth.saturating_sub(1);
    let inner = enumerate_with_depth(engine, q, ambient - 1, d, true, depth);
    let forced: Vec<(u32, BigInt)> = pattern
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .map(|(i, b)| (i as u32, b.clone()))
        .collect();
    let cfg = MixedIlpConfig {
        forced_min: forced,
        ..MixedIlpConfig::default()
    };
    let (mut model, _a, _z) = build_model(engine, q, ambient, d, &inner, &cfg);
    model.set_objective(vec![], Sense::Maximize);
    !matches!(
        model
            .solve_ilp_with_limit(engine.options().ilp_node_limit)
            .expect("feasibility check within node budget"),
        Outcome::Infeasible
    )
}

/// The covering set of pattern ceilings for points of `F_q^{ambient+1}`.
///
/// Every pattern that a point of a distance-`d` code can show lies
/// componentwise below some member of the returned set. `include_dim0`
/// selects whether the zero space may occur in the quotient (that is,
/// whether the point itself may be a member), which callers rule out when
/// their case analysis has already excluded tiny members.
pub fn enumerate_maximal_patterns(
    engine: &Engine,
    q: u64,
    ambient: u32,
    d: u32,
    include_dim0: bool,
) -> Rc<Vec<Vec<BigInt>>> {
    enumerate_with_depth(
        engine,
        q,
        ambient,
        d,
        include_dim0,
        engine.options().refine_depth,
    )
}

pub(crate) fn enumerate_with_depth(
    engine: &Engine,
    q: u64,
    ambient: u32,
    d: u32,
    include_dim0: bool,
    depth: u32,
) -> Rc<Vec<Vec<BigInt>>> {
    assert!(ambient >= 1, "quotient space must have positive dimension");
    assert!(d >= 1, "minimum distance must be positive");
    let key = (q, ambient, d, include_dim0, depth);
    if let Some(hit) = engine.patterns_memo_get(key) {
        return hit;
    }

    let len = pattern_len(ambient);
    let caps = entry_caps(engine, q, ambient, d);
    let mut envelopes: Vec<Vec<BigInt>> = Vec::new();

    'support: for support in valid_supports(len, d, include_dim0) {
        let mut env = vec![BigInt::zero(); len];
        for &i in &support {
            env[i] = if 2 * i as u32 >= d {
                caps[i].clone()
            } else {
                BigInt::one()
            };
        }
        if depth > 0 && ambient >= 2 {
            // Entries that may repeat are re-maximized with the forced-once
            // dimensions (those that cannot repeat) pinned to one.
            let anchors: Vec<(u32, BigInt)> = support
                .iter()
                .filter(|&&i| 2 * (i as u32) < d)
                .map(|&i| (i as u32, BigInt::one()))
                .collect();
            for &j in &support {
                if 2 * (j as u32) < d {
                    continue;
                }
                match membership_max(engine, q, ambient, d, &anchors, j as u32, depth - 1) {
                    Some(mx) => env[j] = env[j].clone().min(mx),
                    // No code meets the pinned dimensions: nothing with this
                    // support occurs, so the ceiling is not needed at all.
                    None => continue 'support,
                }
            }
        }
        envelopes.push(env);
    }

    // Configurations recorded as impossible split their upward closure out
    // of the cover: any pattern below the old ceiling but not above the
    // impossible one is below a ceiling lowered in a single entry.
    let forbidden: Vec<Vec<BigInt>> = engine
        .facts()
        .forbidden(q, ambient, d)
        .into_iter()
        .filter(|f| f.distribution.len() <= len)
        .map(|f| {
            let mut dist = f.distribution.clone();
            dist.resize(len, BigInt::zero());
            dist
        })
        .collect();
    let mut work = envelopes;
    let mut covered: Vec<Vec<BigInt>> = Vec::new();
    'work: while let Some(env) = work.pop() {
        for f in &forbidden {
            if f.iter().any(|x| x.is_positive()) && dominates(&env, f) {
                for (j, fj) in f.iter().enumerate() {
                    if fj.is_positive() {
                        let mut piece = env.clone();
                        piece[j] = fj - 1;
                        work.push(piece);
                    }
                }
                continue 'work;
            }
        }
        covered.push(env);
    }

    // Drop dominated ceilings and fix the order.
    covered.sort();
    covered.dedup();
    let kept: Vec<Vec<BigInt>> = covered
        .iter()
        .filter(|e| {
            !covered
                .iter()
                .any(|other| other != *e && dominates(other, e))
        })
        .cloned()
        .collect();

    let rc = Rc::new(kept);
    engine.patterns_memo_put(key, rc.clone());
    rc
}

/// The per-point yield of a pattern towards the code size of a
/// mixed-dimension code in `F_q^v`: each entry is divided by the number of
/// points of the member it counts, and dual layers are folded in with
/// weight two (the middle layer of an even-dimensional space is its own
/// dual and counts once).
pub fn score(q: u64, v: u32, pattern: &[BigInt]) -> BigRational {
    let m = (v / 2) as usize;
    assert!(pattern.len() <= m, "pattern has more entries than layers");
    let mut total = BigRational::zero();
    for (i, b) in pattern.iter().enumerate() {
        let weight = if v % 2 == 0 && i == m - 1 { 1 } else { 2 };
        total += ratio(big(weight) * b, qnum(i as u32 + 1, q));
    }
    total
}

/// Fractional relaxation of the pattern program: the number of points times
/// the best per-point yield, floored. Quick to evaluate and never sharper
/// than the integer program over the same patterns; kept as a diagnostic.
pub fn score_bound(engine: &Engine, q: u64, v: u32, d: u32) -> BoundResult {
    assert!(d >= 3, "pattern machinery applies from distance 3 on");
    let patterns = enumerate_maximal_patterns(engine, q, v - 1, d, d == 3);
    let omega = uncovered_point_score(engine, q, v, d);
    let mut best = omega.clone();
    let mut best_pattern: Option<&Vec<BigInt>> = None;
    for p in patterns.iter() {
        let s = score(q, v, p);
        if s > best {
            best = s;
            best_pattern = Some(p);
        }
    }
    let value = ratio_floor(&(BigRational::from_integer(qnum(v, q)) * &best));
    let detail = match best_pattern {
        Some(p) => format!(
            "{} points, best per-point yield {best} from ceiling ({})",
            qnum(v, q),
            join_entries(p)
        ),
        None => format!(
            "{} points, yield {best} from members of dimension ≤ 1 alone",
            qnum(v, q)
        ),
    };
    BoundResult::upper(value, Method::Score, detail)
}

/// Yield of a point that lies on no member of dimension ≥ 2: it may still
/// be a member itself and lie on one line member.
pub(crate) fn uncovered_point_score(engine: &Engine, q: u64, v: u32, d: u32) -> BigRational {
    let len = pattern_len(v - 1);
    let caps = entry_caps(engine, q, v - 1, d);
    let mut tiny = vec![BigInt::zero(); len];
    tiny[0] = BigInt::one();
    if len > 1 {
        tiny[1] = caps[1].clone();
    }
    score(q, v, &tiny)
}

fn join_entries(pattern: &[BigInt]) -> String {
    pattern
        .iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// A pattern cover in serializable form, for audit dumps.
#[derive(Debug, Clone, Serialize)]
pub struct PatternSet {
    pub q: u64,
    /// Dimension of the quotient space the patterns live in.
    pub v: u32,
    pub d: u32,
    pub include_dim0: bool,
    /// Ceiling vectors, entries as exact decimal strings.
    pub patterns: Vec<Vec<String>>,
    /// Yield assigned to points below every ceiling, as `p/q`.
    pub omega: String,
}

/// Export the pattern cover for `F_q^{ambient+1}` queries.
pub fn pattern_set(
    engine: &Engine,
    q: u64,
    ambient: u32,
    d: u32,
    include_dim0: bool,
) -> PatternSet {
    let patterns = enumerate_maximal_patterns(engine, q, ambient, d, include_dim0);
    PatternSet {
        q,
        v: ambient,
        d,
        include_dim0,
        patterns: patterns
            .iter()
            .map(|p| p.iter().map(|b| b.to_string()).collect())
            .collect(),
        omega: uncovered_point_score(engine, q, ambient + 1, d).to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{Engine, EngineOptions};
    use crate::facts::FactStore;

    fn vecs(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter()
            .map(|p| p.iter().map(|&n| big(n)).collect())
            .collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort();
        v
    }

    #[test]
    fn binary_distance_five_cover_around_ten_dimensions() {
        let eng = Engine::new();
        let got = enumerate_maximal_patterns(&eng, 2, 9, 5, false);
        let want = vecs(&[
            &[0, 1, 0, 0, 1156],
            &[0, 0, 0, 73, 1156],
            &[0, 0, 1, 72, 1151],
        ]);
        assert_eq!(*got, sorted(want));
    }

    #[test]
    fn binary_distance_six_cover_around_ten_dimensions() {
        let eng = Engine::new();
        let got = enumerate_maximal_patterns(&eng, 2, 9, 6, false);
        let want = vecs(&[
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 1151],
            &[0, 0, 0, 73, 1156],
        ]);
        assert_eq!(*got, sorted(want));
    }

    #[test]
    fn ternary_cover_splits_on_the_curated_cap_configuration() {
        let eng = Engine::new();
        let got = enumerate_maximal_patterns(&eng, 3, 8, 5, false);
        let want = vecs(&[&[0, 1, 0, 0], &[0, 0, 1, 247], &[0, 0, 0, 248]]);
        assert_eq!(*got, sorted(want));
    }

    #[test]
    fn ternary_cover_without_the_record_keeps_the_plain_ceiling() {
        let eng = Engine::with_facts(FactStore::empty(), EngineOptions::default());
        let got = enumerate_with_depth(&eng, 3, 8, 5, false, 2);
        let want = vecs(&[&[0, 1, 0, 0], &[0, 0, 1, 248]]);
        assert_eq!(*got, sorted(want));
    }

    #[test]
    fn zero_space_supports_in_the_distance_three_cover() {
        let eng = Engine::new();
        let got = enumerate_maximal_patterns(&eng, 2, 6, 3, true);
        let want = vecs(&[&[1, 0, 0], &[0, 1, 20], &[0, 0, 21]]);
        assert_eq!(*got, sorted(want));

        let no_zero = enumerate_maximal_patterns(&eng, 2, 6, 3, false);
        let want = vecs(&[&[0, 1, 20], &[0, 0, 21]]);
        assert_eq!(*no_zero, sorted(want));
    }

    #[test]
    fn curated_split_applies_around_eight_dimensions() {
        let eng = Engine::new();
        let got = enumerate_maximal_patterns(&eng, 2, 7, 3, true);
        let want = vecs(&[
            &[1, 0, 0, 381],
            &[0, 0, 41, 381],
            &[0, 1, 21, 378],
            &[0, 1, 41, 359],
        ]);
        assert_eq!(*got, sorted(want));
    }

    #[test]
    fn depth_zero_reaches_the_same_small_cover_via_splits() {
        // At this size the refinement and the curated split sharpen the
        // same entry, so the cover does not depend on the depth budget.
        let eng = Engine::new();
        let deep = enumerate_with_depth(&eng, 2, 6, 3, true, 2);
        let shallow = enumerate_with_depth(&eng, 2, 6, 3, true, 0);
        assert_eq!(*deep, *shallow);
    }

    #[test]
    fn emitted_ceilings_are_jointly_meetable() {
        let eng = Engine::new();
        for &(q, ambient, d, inc0) in &[(2u64, 9u32, 5u32, false), (3, 8, 5, false), (2, 6, 3, true)]
        {
            for p in enumerate_maximal_patterns(&eng, q, ambient, d, inc0).iter() {
                assert!(
                    pattern_feasible(&eng, q, ambient, d, p),
                    "ceiling ({}) for q={q} ambient={ambient} d={d} not meetable",
                    join_entries(p)
                );
            }
        }
    }

    #[test]
    fn per_point_yields_match_hand_values() {
        // (0,0,0,73,1156) around 10 binary dimensions: 1156/31 + 2·73/15.
        let p = vecs(&[&[0, 0, 0, 73, 1156]]).remove(0);
        assert_eq!(score(2, 10, &p), ratio(big(21866), big(465)));
        // Odd ambient dimension weights every layer twice.
        let p = vecs(&[&[0, 0, 1, 247]]).remove(0);
        assert_eq!(
            score(3, 9, &p),
            ratio(big(2), big(13)) + ratio(big(2 * 247), big(40))
        );
    }

    #[test]
    fn score_relaxation_reproduces_the_fractional_ceiling() {
        let eng = Engine::new();
        let r = score_bound(&eng, 2, 10, 5);
        assert_eq!(r.value, big(48105));
        assert!(!r.exact);
        assert_eq!(r.method, Method::Score);
    }

    #[test]
    fn audit_export_round_trips_to_json() {
        let eng = Engine::new();
        let set = pattern_set(&eng, 2, 9, 5, false);
        let text = serde_json::to_string(&set).unwrap();
        assert!(text.contains("\"1156\""));
        assert!(text.contains("8/3"));
    }
}
