//! Realizable lengths of divisible codes and the sharpened floor operator.
//!
//! A linear code over `F_q` is `q^r`-divisible when every codeword weight is
//! a multiple of `q^r`. The lengths realizable by (possibly repeated-column)
//! such codes form a numerical monoid generated by
//!
//! ```text
//! s_i = q^i * [r - i + 1]_q      for 0 <= i <= r,
//! ```
//!
//! where `[n]_q = (q^n - 1)/(q - 1)`: `s_i` is the length of the `i`-fold
//! `q`-repetition of a simplex code. Conversely no length outside the monoid
//! is realizable, so membership is decidable by dynamic programming.
//!
//! The payoff is a rounding rule stronger than the plain floor. In counting
//! arguments that would conclude `n <= a / [k]_q`, the point multiset left over
//! after removing `b` disjoint `k`-spaces is `q^(k-1)`-divisible of length
//! `a - b [k]_q`, so only values `b` with realizable remainder are possible:
//!
//! ```text
//! quotient(a) = max { b >= 0 : a - b [k]_q is a realizable length },
//! ```
//!
//! with `r = k - 1`. This is [`LengthMonoid::quotient`]; it returns `None`
//! when no remainder is realizable (possible for very small `a`).
//!
//! [`LengthMonoid::with_extra_lengths`] admits additional generators for
//! sharper exclusion results established elsewhere (e.g. a sporadic length
//! known to be realizable only together with specific column multiplicities
//! is recorded as an extra generator by the fact store when justified).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::qarith::{check_field_order, floor_div, qnum, qpow};

/// Hard ceiling on the membership table size; parameters needing more are
/// far outside the supported range and indicate a misuse.
const MAX_TABLE: usize = 1 << 26;

/// The standard generators `s_i = q^i [r - i + 1]_q` for `0 <= i <= r`.
pub fn standard_generators(q: u64, r: u32) -> Vec<BigInt> {
    check_field_order(q);
    (0..=r).map(|i| qpow(q, i) * qnum(r - i + 1, q)).collect()
}

/// Membership oracle for the monoid of realizable `q^r`-divisible lengths.
///
/// The table of reachable lengths grows lazily. Lengths at or beyond the
/// product bound `(q^r - 1)([r+1]_q - 1)` are always realizable (the two
/// extreme generators `q^r` and `[r+1]_q` are coprime), so the table never
/// needs to grow past that point.
#[derive(Debug, Clone)]
pub struct LengthMonoid {
    q: u64,
    r: u32,
    gens: Vec<u64>,
    /// Everything at or above this value is realizable.
    cap: BigInt,
    /// `reach[n]` = is `n` realizable; grown on demand.
    reach: Vec<bool>,
}

impl LengthMonoid {
    /// Monoid with the standard generator list for `(q, r)`.
    pub fn new(q: u64, r: u32) -> Self {
        Self::with_extra_lengths(q, r, &[])
    }

    /// Monoid with the standard generators plus externally justified ones.
    pub fn with_extra_lengths(q: u64, r: u32, extra: &[BigInt]) -> Self {
        let mut gens: Vec<u64> = standard_generators(q, r)
            .iter()
            .chain(extra.iter())
            .map(|g| g.to_u64().expect("generator fits in u64"))
            .filter(|&g| g > 0)
            .collect();
        gens.sort_unstable();
        gens.dedup();
        let cap = (qpow(q, r) - 1) * (qnum(r + 1, q) - 1);
        LengthMonoid { q, r, gens, cap, reach: vec![true] }
    }

    /// The generator list (sorted, deduplicated).
    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// The divisibility exponent `r`.
    pub fn exponent(&self) -> u32 {
        self.r
    }

    /// Whether `n` is a realizable length.
    pub fn realizable(&mut self, n: &BigInt) -> bool {
        if n.is_zero() {
            return true;
        }
        if n < &BigInt::zero() {
            return false;
        }
        if *n >= self.cap {
            return true;
        }
        let n = n.to_usize().expect("below the product bound, so it fits");
        self.grow(n);
        self.reach[n]
    }

    fn grow(&mut self, upto: usize) {
        assert!(
            upto < MAX_TABLE,
            "membership table for q={}, r={} would need {} entries",
            self.q,
            self.r,
            upto + 1
        );
        for m in self.reach.len()..=upto {
            let hit = self.gens.iter().take_while(|&&g| g as usize <= m).any(|&g| self.reach[m - g as usize]);
            self.reach.push(hit);
        }
    }

    /// The sharpened quotient `max { b : a - b [r+1]_q realizable }`, or
    /// `None` when no such `b >= 0` exists.
    ///
    /// Starts at the plain floor `a / [r+1]_q` and walks down; each step adds
    /// `[r+1]_q` to the remainder, and the walk always terminates because
    /// sufficiently large remainders are realizable.
    pub fn quotient(&mut self, a: &BigInt) -> Option<BigInt> {
        if a < &BigInt::zero() {
            return None;
        }
        let unit = qnum(self.r + 1, self.q);
        let mut b = floor_div(a, &unit);
        let mut remainder = a - &b * &unit;
        while b >= BigInt::zero() {
            if self.realizable(&remainder) {
                return Some(b);
            }
            b -= 1;
            remainder += &unit;
        }
        None
    }
}

/// Convenience wrapper: the sharpened quotient for remainders that must be
/// realizable `q^(k-1)`-divisible lengths, using the standard generators.
pub fn divisible_quotient(a: &BigInt, k: u32, q: u64) -> Option<BigInt> {
    assert!(k >= 1, "k must be positive");
    LengthMonoid::new(q, k - 1).quotient(a)
}
