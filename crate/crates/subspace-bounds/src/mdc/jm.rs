//! The point-distribution integer program for mixed-dimension codes.
//!
//! Count incidences between the `[v]_q` points of `F_q^v` and the code
//! members through them. Every point shows one of the few patterns from
//! [`super::patterns`], so with an integer variable `x_b` counting the
//! points under ceiling `b` and `a_i` counting the members of dimension
//! `i`, the members of dimension `i` occupy `[i]_q · a_i` point slots that
//! the patterns must supply. Members of dimension above `v/2` are folded
//! onto their orthogonal complements, which doubles the objective weight of
//! every layer except the self-paired middle layer of even `v`.
//!
//! [`johnson_mdc`] wraps the program in a two-case analysis (members of
//! extreme dimension present or not) and, when the half-distance divides
//! `v`, splits further on whether the half-distance layer is a full spread
//! — the case where the divisible-length quotient caps the next layer
//! strictly below the plain rounding bound.

use crate::bound::{BoundResult, Method};
use crate::engine::Engine;
use crate::ilp::{rq, rq_big, Cmp, Model, Outcome, Sense, VarId};
use crate::qarith::{big, floor_div, qnum, ratio_floor};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::patterns::enumerate_maximal_patterns;

/// Adjustments to the distribution program, for case analyses.
#[derive(Debug, Clone, Default)]
pub struct MixedIlpConfig {
    /// Objective weight for points below every pattern ceiling. `None`
    /// omits the slack variable entirely (every point must be charged to a
    /// pattern), which is the sharpest sound choice whenever the ceilings
    /// cover all patterns that can occur.
    pub omega: Option<BigRational>,
    /// Dimensions whose count is pinned to zero by the ambient case.
    pub zero_dims: Vec<u32>,
    /// Lower bounds `a_i ≥ n` imposed by the ambient case.
    pub forced_min: Vec<(u32, BigInt)>,
    /// Upper bounds sharper than the constant-dimension cap.
    pub cap_overrides: Vec<(u32, BigInt)>,
}

/// Builds the distribution program for `F_q^v` at distance `d` over the
/// given pattern ceilings, leaving the objective to the caller.
///
/// Returns the model, the dimension-count variables `a_0..a_{v/2}`, and the
/// slack variable if `cfg.omega` requested one.
pub(crate) fn build_model(
    engine: &Engine,
    q: u64,
    v: u32,
    d: u32,
    patterns: &[Vec<BigInt>],
    cfg: &MixedIlpConfig,
) -> (Model, Vec<VarId>, Option<VarId>) {
    let m = v / 2;
    let d_even = d + d % 2;
    let caps: Vec<BigInt> = (0..=m)
        .map(|i| engine.cdc_bound(q, v, d_even, i).value)
        .collect();
    debug_assert!(patterns.iter().all(|p| p.len() == m as usize));

    let mut model = Model::new(format!("distribution q={q} v={v} d={d}"));
    let a: Vec<VarId> = (0..=m)
        .map(|i| {
            let mut ub = caps[i as usize].clone();
            for (dim, cap) in &cfg.cap_overrides {
                if *dim == i {
                    ub = ub.min(cap.clone());
                }
            }
            if cfg.zero_dims.contains(&i) {
                ub = BigInt::zero();
            }
            model.add_nonneg(format!("a{i}"), Some(rq_big(&ub)), true)
        })
        .collect();
    let x: Vec<VarId> = (0..patterns.len())
        .map(|b| model.add_nonneg(format!("x{b}"), None, true))
        .collect();
    let z = cfg
        .omega
        .is_some()
        .then(|| model.add_nonneg("z", None, true));

    // Every point of F_q^v shows exactly one pattern (or falls to slack).
    let mut point_terms: Vec<(VarId, BigRational)> = x.iter().map(|&xb| (xb, rq(1))).collect();
    if let Some(zv) = z {
        point_terms.push((zv, rq(1)));
    }
    model.add_constraint("points", point_terms, Cmp::Eq, rq_big(&qnum(v, q)));

    // Members of dimension i cover [i]_q points; the patterns must supply
    // those incidences.
    for i in 1..=m {
        let mut terms: Vec<(VarId, BigRational)> = patterns
            .iter()
            .zip(&x)
            .filter(|(p, _)| !p[(i - 1) as usize].is_zero())
            .map(|(p, &xb)| (xb, rq_big(&p[(i - 1) as usize])))
            .collect();
        terms.push((a[i as usize], -rq_big(&qnum(i, q))));
        model.add_constraint(format!("cover{i}"), terms, Cmp::Ge, rq(0));
    }

    // If the zero space is a member, every other member keeps dimension
    // ≥ d, so the low layers empty out.
    for i in 1..=m.min(d - 1) {
        let cap = &caps[i as usize];
        model.add_constraint(
            format!("couple{i}"),
            vec![(a[0], rq_big(cap)), (a[i as usize], rq(1))],
            Cmp::Le,
            rq_big(cap),
        );
    }

    for (dim, min) in &cfg.forced_min {
        model.add_constraint(
            format!("pin{dim}"),
            vec![(a[*dim as usize], rq(1))],
            Cmp::Ge,
            rq_big(min),
        );
    }

    (model, a, z)
}

/// Solves the distribution program with the code-size objective
/// (duality-folded dimension counts, plus `ω` per slack point).
///
/// `None` means the configuration is infeasible — the ambient case cannot
/// occur at all.
pub fn johnson_mdc_bound(
    engine: &Engine,
    q: u64,
    v: u32,
    d: u32,
    patterns: &[Vec<BigInt>],
    cfg: &MixedIlpConfig,
) -> Option<BoundResult> {
    let m = v / 2;
    let (mut model, a, z) = build_model(engine, q, v, d, patterns, cfg);
    let mut objective: Vec<(VarId, BigRational)> = (0..=m)
        .map(|i| {
            let weight = if v % 2 == 0 && i == m { 1 } else { 2 };
            (a[i as usize], rq(weight))
        })
        .collect();
    if let (Some(zv), Some(omega)) = (z, cfg.omega.as_ref()) {
        objective.push((zv, omega.clone()));
    }
    model.set_objective(objective, Sense::Maximize);

    let sol = match model
        .solve_ilp_with_limit(engine.options().ilp_node_limit)
        .expect("distribution program within node budget")
    {
        Outcome::Optimal(sol) => sol,
        Outcome::Infeasible => return None,
        Outcome::Unbounded => unreachable!("point count bounds every variable"),
    };
    let value = ratio_floor(&sol.objective);
    let counts = (0..=m)
        .filter(|&i| !sol.values[a[i as usize].0].is_zero())
        .map(|i| format!("a_{i}={}", ratio_floor(&sol.values[a[i as usize].0])))
        .collect::<Vec<_>>()
        .join(", ");
    let detail = format!(
        "distribution program over {} point patterns, optimum at {}",
        patterns.len(),
        if counts.is_empty() { "all zero".into() } else { counts }
    );
    Some(BoundResult::upper(value, Method::JohnsonMdc, detail))
}

/// The two-case Johnson bound for `A_q(v,d)`, `d ≥ 3`.
///
/// Case one: some member has extreme dimension (at most one low and one
/// high such member fit, and they push all others into the middle layers,
/// which the constant-dimension bounds count). Case two: no member has
/// extreme dimension, and the distribution program applies. The bound is
/// the larger case; each case may exceed the other.
pub fn johnson_mdc(engine: &Engine, q: u64, v: u32, d: u32) -> BoundResult {
    assert!(d >= 3, "the case analysis needs distance at least 3");
    assert!(v >= d, "distance cannot exceed the ambient dimension");
    let m = v / 2;
    let d_even = d + d % 2;

    // Case one: a member of dimension < start exists (or, dually, one of
    // dimension > v - start). Two such members fit at most, and every
    // remaining member lands in dimensions start..v-start.
    let start = if d == 3 { 3 } else { d - 1 };
    let mut middles: Vec<BoundResult> = Vec::new();
    let mut value_a = big(2);
    for i in start..=m {
        let c = engine.cdc_bound(q, v, d_even, i);
        let weight = if v % 2 == 0 && i == m { 1 } else { 2 };
        value_a += big(weight) * &c.value;
        middles.push(c);
    }
    let branch_a = BoundResult::upper(
        value_a,
        Method::JohnsonMdc,
        format!(
            "case: a member of dimension outside {start}..{} exists — at most two such, all others in the middle layers",
            v - start
        ),
    )
    .with_children(middles);

    // Case two: all members have dimension ≥ start's complement-free range,
    // so the distribution program counts them.
    let zero_dims = if d == 3 { vec![0] } else { vec![0, 1] };
    let patterns = enumerate_maximal_patterns(engine, q, v - 1, d, d == 3);
    let base = MixedIlpConfig {
        zero_dims,
        ..MixedIlpConfig::default()
    };
    let branch_b = if patterns.is_empty() {
        None
    } else {
        solve_case_two(engine, q, v, d, &patterns, &base)
    };

    match branch_b {
        Some(b) if b.value > branch_a.value => {
            let detail = format!(
                "larger of two cases: extreme-dimension member present ({}) or absent ({})",
                branch_a.value, b.value
            );
            BoundResult::upper(b.value.clone(), Method::JohnsonMdc, detail)
                .with_children(vec![branch_a, b])
        }
        Some(b) => {
            let detail = format!(
                "larger of two cases: extreme-dimension member present ({}) or absent ({})",
                branch_a.value, b.value
            );
            BoundResult::upper(branch_a.value.clone(), Method::JohnsonMdc, detail)
                .with_children(vec![branch_a, b])
        }
        None => {
            let detail = format!(
                "only the extreme-dimension case is possible ({})",
                branch_a.value
            );
            BoundResult::upper(branch_a.value.clone(), Method::JohnsonMdc, detail)
                .with_children(vec![branch_a])
        }
    }
}

/// Case two of [`johnson_mdc`], with the spread split when it applies.
///
/// When the half-distance `c` divides `v`, the dimension-`c` layer either
/// is a full spread — then every point lies on a spread member, the
/// patterns with an empty `c`-entry drop out, and the next layer obeys the
/// divisible-length quotient — or it misses the spread size by at least
/// one.
fn solve_case_two(
    engine: &Engine,
    q: u64,
    v: u32,
    d: u32,
    patterns: &[Vec<BigInt>],
    base: &MixedIlpConfig,
) -> Option<BoundResult> {
    let m = v / 2;
    let d_even = d + d % 2;
    let c = d.div_ceil(2);

    let split_applies = v % c == 0 && c + 1 <= m;
    let ceiling_above_spread = split_applies
        .then(|| {
            patterns
                .iter()
                .filter(|p| p[(c - 1) as usize].is_positive())
                .map(|p| p[c as usize].clone())
                .max()
        })
        .flatten();
    let (j, cap_c) = match ceiling_above_spread {
        Some(j) => (j, engine.cdc_bound(q, v, d_even, c).value),
        None => {
            let mut plain = johnson_mdc_bound(engine, q, v, d, patterns, base)?;
            plain.detail = format!("no extreme-dimension members; {}", plain.detail);
            return Some(plain);
        }
    };

    let mut parts: Vec<BoundResult> = Vec::new();

    // Full-spread case: a_c equals the spread size, so every point lies on
    // a spread member and carries at most j members of dimension c+1. The
    // incidence total j·[v]_q caps a_{c+1} at its divisible-length
    // quotient, sharper than plain rounding.
    let incidences = &j * qnum(v, q);
    if let Some(quota) = engine.divisible_quotient(&incidences, c + 1, q) {
        let plain_floor = floor_div(&incidences, &qnum(c + 1, q));
        let cfg = MixedIlpConfig {
            forced_min: vec![(c, cap_c.clone())],
            cap_overrides: vec![(c + 1, quota.clone())],
            ..base.clone()
        };
        if let Some(mut r) = johnson_mdc_bound(engine, q, v, d, patterns, &cfg) {
            r.detail = format!(
                "full-spread case: a_{c} pinned to {cap_c}; at most {j} members of dimension {} per point give a_{} ≤ {plain_floor} by rounding, ≤ {quota} after the divisible-length restriction; {}",
                c + 1,
                c + 1,
                r.detail
            );
            parts.push(r);
        }
    }

    // Deficient case: the dimension-c layer misses the spread size.
    let cfg = MixedIlpConfig {
        cap_overrides: vec![(c, &cap_c - 1)],
        ..base.clone()
    };
    if let Some(mut r) = johnson_mdc_bound(engine, q, v, d, patterns, &cfg) {
        r.detail = format!("deficient case: a_{c} ≤ {}; {}", &cap_c - 1, r.detail);
        parts.push(r);
    }

    let best = parts.iter().map(|r| r.value.clone()).max()?;
    Some(
        BoundResult::upper(
            best,
            Method::JohnsonMdc,
            format!(
                "no extreme-dimension members; dimension-{c} layer full spread or not — larger of {} subcases",
                parts.len()
            ),
        )
        .with_children(parts),
    )
}
