//! Closed-form upper bounds for particular mixed-dimension families.
//!
//! Each function evaluates a hand-derived case analysis exactly, in integer
//! and rational arithmetic. They complement the integer programs in
//! [`super::jm`]: on their families they are usually (not always) sharper,
//! and the dispatcher takes the best of both.

use crate::bound::{BoundResult, Method};
use crate::engine::Engine;
use crate::qarith::{big, floor_div, qnum, qpow, ratio, ratio_floor};
use num_bigint::BigInt;
use num_rational::BigRational;

fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Closed form for `A_q(7,3)`: `2(q^8 + q^6 + 2q^5 + 2q^3 + q^2 - q + 2)`.
pub fn analytic_7_3(q: u64) -> BoundResult {
    let value = big(2)
        * (qpow(q, 8) + qpow(q, 6) + big(2) * qpow(q, 5) + big(2) * qpow(q, 3) + qpow(q, 2)
            - big(q as i64)
            + big(2));
    BoundResult::upper(
        value,
        Method::Analytic73,
        format!("closed form 2(q^8 + q^6 + 2q^5 + 2q^3 + q^2 - q + 2) at q = {q}"),
    )
}

/// Case-analysis bound for `A_q(8,3)`.
///
/// Splits on how the points of `F_q^8` distribute over the members through
/// them; each of three cases yields a per-point rational, and the best
/// bound is the largest case after scaling by the point count `[8]_q`.
/// Two cases sharpen when the curated exclusion for seven dimensions —
/// no point pattern `(0, 1, q^4+q^2+2, q^8+q^6+q^5+q^3)` — is available.
pub fn analytic_8_3(engine: &Engine, q: u64) -> BoundResult {
    let excluded = vec![
        big(0),
        big(1),
        qpow(q, 4) + qpow(q, 2) + big(2),
        qpow(q, 8) + qpow(q, 6) + qpow(q, 5) + qpow(q, 3),
    ];
    let gate = engine.facts().has_forbidden(q, 7, 3, &excluded);

    let poly = rational(
        qpow(q, 5) - qpow(q, 4) + big(3) * qpow(q, 3) - big(2) * qpow(q, 2) + big(2 * q as i64),
    );
    let d5 = qnum(3, q) * qnum(4, q);
    let s1 = rational(qpow(q, 5) - qpow(q, 4) + qpow(q, 3) + big(q as i64) + big(1))
        + ratio(qpow(q, 2) + big(2), qnum(4, q));
    let s2_weak = &poly + ratio(big(2 * q as i64 + 4), qnum(2, q) * qnum(3, q));
    let s2 = if gate {
        &poly + ratio(
            big(2) * qpow(q, 3) + big(3) * qpow(q, 2) + big(q as i64) + big(3),
            d5.clone(),
        )
    } else {
        s2_weak.clone()
    };
    let s3 = if gate {
        &poly + ratio(-qpow(q, 4) + qpow(q, 2) + big(3), d5)
    } else {
        &poly + ratio(-qpow(q, 4) + big(2) * qpow(q, 2) + big(2), d5)
    };

    let points = rational(qnum(8, q));
    let case1 = ratio_floor(&(&points * s1));
    let case2 = ratio_floor(&(&points * s2));
    let case2_weak = ratio_floor(&(&points * s2_weak));
    let case3 = big(2) + ratio_floor(&(&points * s3));
    let value = case1.clone().max(case2.clone()).max(case3.clone());

    let detail = if gate {
        format!(
            "largest of three case bounds {case1}, {case2}, {case3}; without the seven-dimensional exclusion the second case loosens to {case2_weak}"
        )
    } else {
        format!("largest of three case bounds {case1}, {case2}, {case3}")
    };
    BoundResult::upper(value, Method::Analytic83, detail)
}

/// Bound for `A_q(v, v-4)` with odd `v ≥ 7`.
///
/// Either twice the two middle constant-dimension layers, or a finer point
/// count that charges the points outside a near-spread — whichever is
/// larger, as both arise from exhaustive cases.
pub fn analytic_v_minus_4_odd(engine: &Engine, q: u64, v: u32) -> BoundResult {
    assert!(v % 2 == 1 && v >= 7, "family needs odd v at least 7");
    let m = (v - 1) / 2;
    let d_even = v - 3;

    let mid_low = engine.cdc_bound(q, v, d_even, m - 1);
    let mid_high = engine.cdc_bound(q, v, d_even, m);
    let branch_a = big(2) * (&mid_low.value + &mid_high.value);

    let diff = qnum(v, q) - qnum(m - 2, q);
    let t1 = floor_div(&diff, &qnum(m - 1, q));
    let tau = engine.cdc_bound(q, 2 * m, 2 * m - 2, m - 1);
    let t2 = floor_div(&(&diff * &tau.value), &qnum(m, q));
    let branch_b = big(2) + big(2) * &t1 + big(2) * &t2;

    let value = branch_a.clone().max(branch_b.clone());
    BoundResult::upper(
        value,
        Method::AnalyticOddVMinus4,
        format!(
            "larger case of: twice the middle layers = {branch_a}; point count 2 + 2·{t1} + 2·{t2} = {branch_b}"
        ),
    )
    .with_children(vec![mid_low, mid_high, tau])
}

/// Bound for `A_q(2m, 2m-4)` with `m ≥ 4`.
///
/// Either two plus the middle constant-dimension layer, or a spread-based
/// count: `q^m + 1` spread members, each absorbing at most `inner` members
/// one dimension below the middle. The smallest two families take a
/// sharper `inner` and recover the extreme members inside one rounding.
pub fn analytic_2m_2m4(engine: &Engine, q: u64, m: u32) -> BoundResult {
    assert!(m >= 4, "family needs m at least 4");
    let v = 2 * m;
    let d = 2 * m - 4;

    let middle = engine.cdc_bound(q, v, d, m);
    let branch_a = big(2) + middle.value.clone();

    let tau = engine.cdc_bound(q, 2 * m - 2, 2 * m - 4, m - 2);
    let spread_members = qpow(q, m) + big(1);
    let sharp = m == 4 || (m == 5 && q == 2);
    let (inner, branch_b) = if sharp {
        let lead = qnum(2 * m - 1, q) - qnum(m - 3, q);
        let inner = floor_div(&(&lead * &tau.value), &qnum(m - 1, q));
        let b = ratio_floor(
            &(rational(&spread_members * &inner)
                + ratio(big(2) * qnum(2 * m, q), qnum(m - 2, q))),
        );
        (inner, b)
    } else {
        let inner = floor_div(&(qnum(2 * m - 1, q) * &tau.value), &qnum(m - 1, q));
        let b = &spread_members * &inner;
        (inner, b)
    };

    let value = branch_a.clone().max(branch_b.clone());
    BoundResult::upper(
        value,
        Method::AnalyticEvenVMinus4,
        format!(
            "larger case of: two plus the middle layer = {branch_a}; {spread_members} spread members at {inner} apiece = {branch_b}"
        ),
    )
    .with_children(vec![middle, tau])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{Engine, EngineOptions};
    use crate::facts::FactStore;

    fn paper_only() -> Engine {
        Engine::with_options(EngineOptions {
            external_facts: false,
            ..EngineOptions::default()
        })
    }

    #[test]
    fn seven_dimensions_closed_form() {
        assert_eq!(analytic_7_3(2).value, big(808));
        assert_eq!(analytic_7_3(3).value, big(15_676));
        assert_eq!(analytic_7_3(4).value, big(143_644));
        assert!(!analytic_7_3(2).exact);
    }

    #[test]
    fn eight_dimensions_uses_the_exclusion_when_present() {
        let eng = Engine::new();
        let expect: [(u64, i64); 6] = [
            (2, 9_260),
            (3, 758_228),
            (4, 20_449_159),
            (5, 276_861_484),
            (7, 14_749_276_324),
            (9, 293_422_709_564),
        ];
        for (q, want) in expect {
            let r = analytic_8_3(&eng, q);
            assert_eq!(r.value, big(want), "q = {q}");
            assert_eq!(r.method, Method::Analytic83);
        }

        // The ungated second case stays visible for comparison.
        assert!(analytic_8_3(&eng, 2).detail.contains("9277"));

        // Without the curated exclusion the weaker constants take over.
        let bare = Engine::with_facts(FactStore::empty(), EngineOptions::default());
        assert_eq!(analytic_8_3(&bare, 2).value, big(9277));
    }

    #[test]
    fn eight_dimensions_matches_its_expanded_polynomial() {
        // Hand expansion of the gated second case: exact for q ≥ 3, and one
        // below the rounded value at q = 2.
        let eng = Engine::new();
        for q in [2u64, 3, 4, 5] {
            let poly = qpow(q, 12)
                + big(3) * qpow(q, 10)
                + qpow(q, 9)
                + big(3) * qpow(q, 8)
                + big(3) * qpow(q, 7)
                + big(3) * qpow(q, 6)
                + big(5) * qpow(q, 5)
                + big(3) * qpow(q, 4)
                + qpow(q, 3)
                + big(4) * qpow(q, 2)
                + big(2 * q as i64)
                - big(1);
            let got = analytic_8_3(&eng, q).value;
            if q == 2 {
                assert_eq!(got, poly + 1);
            } else {
                assert_eq!(got, poly);
            }
        }
    }

    #[test]
    fn odd_family_two_dimensions_under_the_ambient() {
        let eng = Engine::new();
        assert_eq!(analytic_v_minus_4_odd(&eng, 2, 7).value, big(844));
        assert_eq!(analytic_v_minus_4_odd(&eng, 2, 9).value, big(2458));
        // Curated layer records shave the middle layers.
        assert_eq!(analytic_v_minus_4_odd(&eng, 2, 11).value, big(8842));
        assert_eq!(analytic_v_minus_4_odd(&eng, 2, 13).value, big(34_056));
        let self_contained = paper_only();
        assert_eq!(analytic_v_minus_4_odd(&self_contained, 2, 11).value, big(8844));
        assert_eq!(analytic_v_minus_4_odd(&self_contained, 2, 13).value, big(34_058));
    }

    #[test]
    fn odd_family_first_floor_has_a_polynomial_form() {
        // ⌊([v]_q - [m-2]_q) / [m-1]_q⌋ collapses to small polynomials.
        let floor_at = |q: u64, m: u32| {
            floor_div(
                &(qnum(2 * m + 1, q) - qnum(m - 2, q)),
                &qnum(m - 1, q),
            )
        };
        assert_eq!(floor_at(2, 3), big(42)); // q^5 + q^3 + q
        assert_eq!(floor_at(2, 4), big(72)); // q^6 + q^3
        assert_eq!(floor_at(2, 5), big(136)); // q^7 + q^3
        assert_eq!(floor_at(2, 6), big(263)); // q^8 + q^3 - 1
        assert_eq!(floor_at(3, 4), big(756));
    }

    #[test]
    fn even_family_two_dimensions_under_the_ambient() {
        let eng = Engine::new();
        let r = analytic_2m_2m4(&eng, 2, 5);
        assert_eq!(r.value, big(38_275));
        assert!(r.detail.contains("1151"));
        assert!(r.detail.contains("38150"));

        assert_eq!(analytic_2m_2m4(&eng, 2, 4).value, big(6596));
    }
}
