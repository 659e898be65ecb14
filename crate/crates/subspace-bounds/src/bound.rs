//! Bound results as derivation trees: value, attainment flag, method, sub-bounds.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// How a bound value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Degenerate or size-one regimes settled by inspection.
    Trivial,
    /// Closed form known to be attained.
    Exact,
    /// Closed form at the boundary of the distance range (distance within
    /// two of the ambient dimension) whose exact value is not settled.
    Boundary,
    /// Perfect spread partition count.
    Spread,
    /// Partial-spread bound from the linear-programming theorem.
    PsLinear,
    /// Partial-spread bound from the square-root discriminant theorem.
    PsSqrt,
    /// Iterated division (Johnson-type) recursion with plain floor.
    Johnson,
    /// Iterated division recursion rounded via divisible-length realizability.
    JohnsonDivisible,
    /// Counting bound through shared subspaces of fixed dimension.
    Anticode,
    /// Orthogonal-complement symmetry `A_q(v,d;k) = A_q(v,d;v-k)`.
    Duality,
    /// Value supplied by the fact store.
    Override,
    /// Sum of per-dimension bounds plus the 0/v layer term.
    Decomposition,
    /// Ball-packing integer program on the dimension distribution.
    SpherePacking,
    /// Fractional score relaxation over quotient-distribution patterns.
    Score,
    /// Integer program over quotient-distribution patterns with layer coupling.
    JohnsonMdc,
    /// Closed-form bound for ambient dimension 7, minimum distance 3.
    Analytic73,
    /// Closed-form bound for ambient dimension 8, minimum distance 3.
    Analytic83,
    /// Closed-form bound for odd ambient dimension, distance `v-4`.
    AnalyticOddVMinus4,
    /// Closed-form bound for even ambient dimension, distance `v-4`.
    AnalyticEvenVMinus4,
}

impl Method {
    /// Stable snake_case tag used in display output, JSON, and the cache.
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Trivial => "trivial",
            Method::Exact => "exact",
            Method::Boundary => "boundary",
            Method::Spread => "spread",
            Method::PsLinear => "ps_linear",
            Method::PsSqrt => "ps_sqrt",
            Method::Johnson => "johnson",
            Method::JohnsonDivisible => "johnson_divisible",
            Method::Anticode => "anticode",
            Method::Duality => "duality",
            Method::Override => "override",
            Method::Decomposition => "decomposition",
            Method::SpherePacking => "sphere_packing",
            Method::Score => "score",
            Method::JohnsonMdc => "johnson_mdc",
            Method::Analytic73 => "analytic_7_3",
            Method::Analytic83 => "analytic_8_3",
            Method::AnalyticOddVMinus4 => "analytic_odd_v_minus_4",
            Method::AnalyticEvenVMinus4 => "analytic_even_v_minus_4",
        }
    }

    fn from_tag(tag: &str) -> Option<Method> {
        use Method::*;
        let all = [
            Trivial,
            Exact,
            Boundary,
            Spread,
            PsLinear,
            PsSqrt,
            Johnson,
            JohnsonDivisible,
            Anticode,
            Duality,
            Override,
            Decomposition,
            SpherePacking,
            Score,
            JohnsonMdc,
            Analytic73,
            Analytic83,
            AnalyticOddVMinus4,
            AnalyticEvenVMinus4,
        ];
        all.into_iter().find(|m| m.tag() == tag)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for Method {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let tag = String::deserialize(d)?;
        Method::from_tag(&tag)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown method tag {tag:?}")))
    }
}

/// Serde adapter: `BigInt` as a decimal string, so JSON stays exact and readable.
pub mod bigint_string {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|e| serde::de::Error::custom(format!("bad integer {text:?}: {e}")))
    }
}

/// A bound on a code size, with the derivation that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundResult {
    /// The bound value.
    #[serde(with = "bigint_string")]
    pub value: BigInt,
    /// True when the value is known to be attained (the bound is the exact maximum).
    pub exact: bool,
    /// Method that produced the value.
    pub method: Method,
    /// One-line human note about this step.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    /// Sub-bounds this step consumed.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<BoundResult>,
}

impl BoundResult {
    /// An upper bound not known to be attained.
    pub fn upper(value: BigInt, method: Method, detail: impl Into<String>) -> Self {
        BoundResult { value, exact: false, method, detail: detail.into(), children: vec![] }
    }

    /// A bound known to be the exact maximum.
    pub fn exact(value: BigInt, method: Method, detail: impl Into<String>) -> Self {
        BoundResult { value, exact: true, method, detail: detail.into(), children: vec![] }
    }

    /// Attaches sub-derivations and returns self.
    pub fn with_children(mut self, children: Vec<BoundResult>) -> Self {
        self.children = children;
        self
    }

    /// The relation symbol for display: `=` when exact, `≤` otherwise.
    pub fn relation(&self) -> &'static str {
        if self.exact {
            "="
        } else {
            "≤"
        }
    }

    /// Renders the derivation as an indented tree (used by `--explain`).
    pub fn render_tree(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        for _ in 0..depth {
            out.push_str("  ");
        }
        out.push_str(&format!("{} {} [{}]", self.relation(), self.value, self.method));
        if !self.detail.is_empty() {
            out.push_str(&format!(" — {}", self.detail));
        }
        out.push('\n');
        for child in &self.children {
            child.render_into(out, depth + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::big;

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let r = BoundResult::upper(big(48104), Method::JohnsonMdc, "top level")
            .with_children(vec![BoundResult::exact(big(77), Method::Override, "")]);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"value\":\"48104\""));
        assert!(json.contains("\"johnson_mdc\""));
        let back: BoundResult = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn method_tags_round_trip() {
        for m in [
            Method::Trivial,
            Method::Exact,
            Method::Boundary,
            Method::Spread,
            Method::PsLinear,
            Method::PsSqrt,
            Method::Johnson,
            Method::JohnsonDivisible,
            Method::Anticode,
            Method::Duality,
            Method::Override,
            Method::Decomposition,
            Method::SpherePacking,
            Method::Score,
            Method::JohnsonMdc,
            Method::Analytic73,
            Method::Analytic83,
            Method::AnalyticOddVMinus4,
            Method::AnalyticEvenVMinus4,
        ] {
            assert_eq!(Method::from_tag(m.tag()), Some(m));
        }
        assert_eq!(Method::from_tag("bogus"), None);
    }

    #[test]
    fn tree_rendering_indents_children() {
        let r = BoundResult::upper(big(10), Method::Johnson, "outer")
            .with_children(vec![BoundResult::exact(big(3), Method::Spread, "inner")]);
        let text = r.render_tree();
        assert!(text.contains("≤ 10 [johnson] — outer"));
        assert!(text.contains("\n  = 3 [spread] — inner"));
    }

    #[test]
    fn relation_symbol_tracks_exactness() {
        assert_eq!(BoundResult::exact(big(1), Method::Exact, "").relation(), "=");
        assert_eq!(BoundResult::upper(big(1), Method::Johnson, "").relation(), "≤");
    }
}
