//! Exact q-analogue arithmetic: Gaussian binomials and rounding-division helpers.
//!
//! Everything here is exact `BigInt`/`BigRational` arithmetic; no floating
//! point. Field orders are validated to be prime powers once, at the edges.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Splits `q = p^e` into `(p, e)` with `p` prime and `e ≥ 1`, if `q ≥ 2` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut n = q;
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            return if n == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1)) // q itself is prime
}

/// Panics unless `q ≥ 2` is a prime power (a valid finite-field order).
pub fn check_field_order(q: u64) {
    assert!(
        prime_power(q).is_some(),
        "q = {q} is not a prime power; no field of that order exists"
    );
}

/// `q^e` as a `BigInt`.
pub fn qpow(q: u64, e: u32) -> BigInt {
    BigInt::from(q).pow(e)
}

/// `[v]_q = 1 + q + … + q^{v-1}`, the number of points of a projective (v-1)-space.
pub fn qnum(v: u32, q: u64) -> BigInt {
    check_field_order(q);
    let mut acc = BigInt::zero();
    let mut term = BigInt::one();
    for _ in 0..v {
        acc += &term;
        term *= q;
    }
    acc
}

/// Gaussian binomial `[v choose k]_q`: the number of k-dim subspaces of F_q^v.
///
/// Returns zero when `k < 0` or `k > v`. Panics if `q` is not a prime power.
pub fn gauss(v: i64, k: i64, q: u64) -> BigInt {
    check_field_order(q);
    if k < 0 || k > v {
        return BigInt::zero();
    }
    // Exploit symmetry to keep the product short.
    let k = k.min(v - k) as u32;
    let v = v as u32;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= qpow(q, v - i) - 1;
        den *= qpow(q, i + 1) - 1;
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// Floor division `⌊a/b⌋` for a positive divisor; panics on `b ≤ 0`.
pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    assert!(b.is_positive(), "floor_div: divisor must be positive, got {b}");
    a.div_floor(b)
}

/// Ceiling division `⌈a/b⌉` for a positive divisor; panics on `b ≤ 0`.
pub fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    assert!(b.is_positive(), "ceil_div: divisor must be positive, got {b}");
    a.div_ceil(b)
}

/// Floor of an exact rational as a `BigInt`.
pub fn ratio_floor(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

/// Ceiling of an exact rational as a `BigInt`.
pub fn ratio_ceil(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

/// Exact rational `a/b` from big integers; panics on `b = 0`.
pub fn ratio(a: BigInt, b: BigInt) -> BigRational {
    BigRational::new(a, b)
}

/// Converts a small signed integer to `BigInt` (shorthand used all over the crate).
pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gauss_matches_known_values() {
        assert_eq!(gauss(7, 1, 2), big(127));
        assert_eq!(gauss(4, 2, 2), big(35));
        assert_eq!(gauss(5, 2, 2), big(155));
        assert_eq!(gauss(5, 3, 2), big(155));
        assert_eq!(gauss(6, 3, 2), big(1395));
        assert_eq!(gauss(4, 2, 3), big(130));
        assert_eq!(gauss(0, 0, 2), big(1));
        assert_eq!(gauss(9, 4, 3), "6174066262".parse().unwrap());
    }

    #[test]
    fn gauss_is_zero_outside_range() {
        assert_eq!(gauss(3, 5, 2), BigInt::zero());
        assert_eq!(gauss(3, -1, 2), BigInt::zero());
        assert_eq!(gauss(0, 1, 5), BigInt::zero());
    }

    #[test]
    fn qnum_counts_projective_points() {
        assert_eq!(qnum(4, 2), big(15));
        assert_eq!(qnum(9, 3), big(9841));
        assert_eq!(qnum(0, 2), big(0));
        assert_eq!(qnum(1, 7), big(1));
        // [v]_q is the k=1 Gaussian binomial.
        assert_eq!(qnum(13, 2), gauss(13, 1, 2));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(251), Some((251, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    #[should_panic(expected = "not a prime power")]
    fn gauss_rejects_non_prime_power_order() {
        gauss(4, 2, 6);
    }

    #[test]
    fn division_helpers() {
        assert_eq!(floor_div(&big(17374), &big(15)), big(1158));
        assert_eq!(ceil_div(&big(7), &big(3)), big(3));
        assert_eq!(floor_div(&big(-7), &big(3)), big(-3));
        assert_eq!(ceil_div(&big(-7), &big(3)), big(-2));
        assert_eq!(floor_div(&big(12), &big(4)), big(3));
        assert_eq!(ceil_div(&big(12), &big(4)), big(3));
    }

    #[test]
    #[should_panic(expected = "divisor must be positive")]
    fn floor_div_rejects_nonpositive_divisor() {
        floor_div(&big(5), &big(0));
    }

    #[test]
    #[should_panic(expected = "divisor must be positive")]
    fn ceil_div_rejects_nonpositive_divisor() {
        ceil_div(&big(5), &big(-3));
    }

    #[test]
    fn ratio_rounding() {
        let r = ratio(big(22368918), big(465));
        assert_eq!(ratio_floor(&r), big(48105));
        assert_eq!(ratio_ceil(&r), big(48106));
        let whole = ratio(big(12), big(3));
        assert_eq!(ratio_floor(&whole), big(4));
        assert_eq!(ratio_ceil(&whole), big(4));
    }

    proptest! {
        #[test]
        fn gauss_symmetry(v in 0i64..=12, k in -2i64..=14, q in prop::sample::select(vec![2u64, 3, 4, 5])) {
            prop_assert_eq!(gauss(v, k, q), gauss(v, v - k, q));
        }

        #[test]
        fn gauss_q_pascal(v in 1i64..=12, k in 1i64..=12, q in prop::sample::select(vec![2u64, 3, 4, 5])) {
            // [v k]_q = [v-1 k-1]_q + q^k [v-1 k]_q
            let lhs = gauss(v, k, q);
            let rhs = gauss(v - 1, k - 1, q) + qpow(q, k as u32) * gauss(v - 1, k, q);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn floor_ceil_bracket(a in -10_000i64..10_000, b in 1i64..500) {
            let (a, b) = (big(a), big(b));
            let f = floor_div(&a, &b);
            let c = ceil_div(&a, &b);
            prop_assert!(&f * &b <= a && a < (&f + 1) * &b);
            prop_assert!((&c - 1) * &b < a && a <= &c * &b);
            prop_assert!(c.clone() - f.clone() <= big(1));
        }
    }
}
