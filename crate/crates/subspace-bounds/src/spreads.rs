//! Upper bounds for partial spreads.
//!
//! A partial `k`-spread of `F_q^v` is a set of `k`-dimensional subspaces
//! meeting pairwise trivially — equivalently a constant dimension code with
//! `d = 2k`. When `k | v` perfect spreads exist and the maximum is exactly
//! `[v]_q / [k]_q`. Otherwise, write `v = kt + r` with `0 < r < k`; the two
//! strongest general theorems both involve `l = (q^(v-k) - q^r)/(q^k - 1)`:
//!
//! * a linear-form bound `l q^k + 1 + z(q-1)` minimized over admissible
//!   pairs `(z, u)` with `u >= 0`, `0 <= 2z <= [r]_q`, and
//!   `k = [r]_q + 1 - z + u` ([`ps_bound_linear`]); when the minimum is at
//!   `z = 0` the bound is known to be attained, so it is exact;
//! * a square-root refinement over `y` in `max(r, 2)..=k`
//!   ([`ps_bound_sqrt`]), where `z` is pinned to `[r]_q + 1 - k` and each
//!   `y` contributes `l q^k + ceil(lambda - 1/2 - sqrt(D)/2)` with
//!   `lambda = q^y` and `D = 1 + 4 lambda (lambda - (z+y-1)(q-1) - 1)`.
//!
//! All evaluation is exact: the ceiling of `lambda - (1 + sqrt(D))/2` is
//! computed with an integer square root, no floating point is involved.
//! [`ps_best`] combines the spread case, both theorems, and the trivial
//! floor `[v]_q / [k]_q` into a single result with a derivation tree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::bound::{BoundResult, Method};
use crate::qarith::{big, check_field_order, floor_div, qnum, qpow};

/// The size `[v]_q / [k]_q` of a perfect `k`-spread.
///
/// # Panics
///
/// Panics unless `k` divides `v` and `k >= 1`.
pub fn spread_size(q: u64, v: u32, k: u32) -> BigInt {
    check_field_order(q);
    assert!(k >= 1 && v % k == 0, "a k-spread of F_q^v needs k | v");
    let (quot, rem) = qnum(v, q).div_rem(&qnum(k, q));
    debug_assert!(rem.is_zero());
    quot
}

/// Decomposes `v = kt + r` with `0 <= r < k` and returns `(t, r)`.
fn split(v: u32, k: u32) -> (u32, u32) {
    (v / k, v % k)
}

/// `l = (q^(v-k) - q^r) / (q^k - 1)`, the common main term of both bounds.
fn main_term(q: u64, v: u32, k: u32, r: u32) -> BigInt {
    let (quot, rem) = (qpow(q, v - k) - qpow(q, r)).div_rem(&(qpow(q, k) - 1));
    debug_assert!(rem.is_zero(), "q^(v-k) - q^r is divisible by q^k - 1");
    quot
}

/// The linear-form bound, when applicable: `(value, z, exact)`.
///
/// Only the smallest admissible `z` matters since the bound grows with `z`.
/// Inapplicable (returns `None`) when `k | v`, when `t < 2`, or when even the
/// smallest `z` violates `2z <= [r]_q`.
pub fn ps_bound_linear(q: u64, v: u32, k: u32) -> Option<(BigInt, BigInt, bool)> {
    check_field_order(q);
    assert!(k >= 1, "k must be positive");
    let (t, r) = split(v, k);
    if r == 0 || t < 2 {
        return None;
    }
    let z = {
        let lowest = qnum(r, q) + 1i64 - big(k as i64);
        if lowest.is_negative() {
            BigInt::zero() // raise z to 0 by picking u = k - [r]_q - 1 >= 0
        } else {
            lowest
        }
    };
    if &z * 2 > qnum(r, q) {
        return None;
    }
    let value = main_term(q, v, k, r) * qpow(q, k) + 1 + &z * (big(q as i64) - 1);
    let exact = z.is_zero();
    Some((value, z, exact))
}

/// The square-root refinement, when applicable: `(value, best_y)`.
///
/// Here `z = [r]_q + 1 - k` must be nonnegative; the bound is minimized over
/// `y` in `max(r, 2)..=k`, skipping `y` whose discriminant is negative.
pub fn ps_bound_sqrt(q: u64, v: u32, k: u32) -> Option<(BigInt, u32)> {
    check_field_order(q);
    assert!(k >= 1, "k must be positive");
    let (t, r) = split(v, k);
    if r == 0 || t < 2 {
        return None;
    }
    let z = qnum(r, q) + 1i64 - big(k as i64);
    if z.is_negative() {
        return None;
    }
    let lead = main_term(q, v, k, r) * qpow(q, k);
    let mut best: Option<(BigInt, u32)> = None;
    for y in r.max(2)..=k {
        let lambda = qpow(q, y);
        let inner = &lambda - (&z + big(y as i64) - 1) * (big(q as i64) - 1) - 1;
        let disc: BigInt = 4 * &lambda * inner + 1;
        if disc.is_negative() {
            continue;
        }
        // ceil(lambda - (1 + sqrt(disc))/2) = lambda - floor((1 + isqrt(disc))/2):
        // the interval between consecutive attainable values of sqrt(disc)
        // never crosses two integers, so the integer square root suffices.
        let root = disc.sqrt();
        debug_assert!(&root * &root <= disc && (&root + 1) * (&root + 1) > disc);
        let value = &lead + &lambda - (root + 1) / 2;
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, y));
        }
    }
    best
}

/// The plain floor `[v]_q / [k]_q` valid for every partial spread.
pub fn ps_trivial(q: u64, v: u32, k: u32) -> BigInt {
    floor_div(&qnum(v, q), &qnum(k, q))
}

/// Best available upper bound on the size of a partial `k`-spread of
/// `F_q^v`, i.e. on the constant dimension code size for `d = 2k`.
///
/// For `k | v` this is the exact spread size. Otherwise the minimum of the
/// applicable bounds is returned, with every candidate recorded as a child
/// of the derivation tree. The result is flagged exact when the linear-form
/// bound wins at `z = 0`, where matching constructions are known.
pub fn ps_best(q: u64, v: u32, k: u32) -> BoundResult {
    assert!(k >= 1 && v >= k, "need 1 <= k <= v");
    if v % k == 0 {
        return BoundResult::exact(
            spread_size(q, v, k),
            Method::Spread,
            format!("perfect {k}-spread of F_{q}^{v}"),
        );
    }
    let mut candidates: Vec<BoundResult> = Vec::new();
    if let Some((value, z, exact)) = ps_bound_linear(q, v, k) {
        let detail = format!("z={z}");
        candidates.push(if exact {
            BoundResult::exact(value, Method::PsLinear, detail + ", attained")
        } else {
            BoundResult::upper(value, Method::PsLinear, detail)
        });
    }
    if let Some((value, y)) = ps_bound_sqrt(q, v, k) {
        candidates.push(BoundResult::upper(value, Method::PsSqrt, format!("minimum at y={y}")));
    }
    candidates.push(BoundResult::upper(
        ps_trivial(q, v, k),
        Method::Trivial,
        "points divided by points per subspace",
    ));
    let best = candidates
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| a.value.cmp(&b.value).then(i.cmp(j)))
        .map(|(i, _)| i)
        .expect("at least the trivial candidate exists");
    let chosen = candidates[best].clone();
    BoundResult {
        value: chosen.value.clone(),
        exact: chosen.exact,
        method: chosen.method,
        detail: chosen.detail.clone(),
        children: candidates,
    }
}
