//! Curated numerical facts layered on top of the computed bounds.
//!
//! Some of the sharpest inputs to the bound engine are not reproducible by
//! the algorithms in this crate: classification results for small parameter
//! sets, geometric nonexistence statements, and values imported from the
//! online tables.  They are shipped as data rather than code so that every
//! such ingredient is visible, attributable, and switchable.
//!
//! Two record files are embedded in the binary:
//!
//! * `facts/paper.json` — statements with a complete published proof that the
//!   engine treats as always available ([`Tier::Paper`]);
//! * `facts/external.json` — values imported from the online tables, which
//!   can be disabled to obtain a fully self-contained run ([`Tier::External`]).
//!
//! Additional files in the same format can be merged at runtime.  A record is
//! a JSON object with a `kind` field:
//!
//! * `"upper"` / `"exact"` — a value `A_q(v,d;k) ≤ value` (or `= value`);
//!   omit `k` for a mixed-dimension statement about `A_q(v,d)`;
//! * `"lower"` — a known construction size, reported alongside upper bounds;
//! * `"forbidden_distribution"` — a dimension distribution (indexed from
//!   dimension 0) that no code in `F_q^v` with minimum distance `d` can
//!   dominate componentwise;
//! * `"divisible_length"` — an extra length `n` to treat as realizable by a
//!   `q^r`-divisible code when rounding, on top of the generated ones.
//!
//! Records with an unknown `kind` are skipped with a warning, so files can
//! carry statements meant for other tools.  Constant-dimension records are
//! stored with even `d` and `k ≤ v/2`; callers normalize before lookup.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;

/// Embedded records with complete published proofs.
const PAPER_JSON: &str = include_str!("../facts/paper.json");
/// Embedded records imported from the online tables.
const EXTERNAL_JSON: &str = include_str!("../facts/external.json");

/// Origin tier of a fact record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    /// Backed by a complete published proof; always safe to assume.
    Paper,
    /// Imported from the online tables; disabled by `--no-external-facts`.
    External,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tier::Paper => write!(f, "paper"),
            Tier::External => write!(f, "external"),
        }
    }
}

/// An upper bound or exact value for `A_q(v,d;k)` (constant dimension when
/// `k` is present) or `A_q(v,d)` (mixed dimension when it is absent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueFact {
    pub q: u64,
    pub v: u32,
    pub d: u32,
    pub k: Option<u32>,
    pub value: BigInt,
    /// True when the record asserts equality, not just an upper bound.
    pub exact: bool,
    pub source: String,
    pub tier: Tier,
}

/// A known construction size, kept for reporting next to upper bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerFact {
    pub q: u64,
    pub v: u32,
    pub d: u32,
    pub k: Option<u32>,
    pub value: BigInt,
    pub source: String,
    pub tier: Tier,
}

/// A dimension distribution that no code with the stated parameters can
/// dominate componentwise.
///
/// `distribution[i]` counts codewords of dimension `i` in `F_q^v`.  The
/// statement is monotone: if the listed multiset cannot occur inside a code
/// of minimum distance `d`, neither can any componentwise-larger one, and it
/// keeps holding for every minimum distance `≥ d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenFact {
    pub q: u64,
    pub v: u32,
    pub d: u32,
    pub distribution: Vec<BigInt>,
    pub source: String,
    pub tier: Tier,
}

/// An extra length to treat as realizable by a `q^r`-divisible code.
///
/// Adding lengths only weakens the rounding step, so records of this kind
/// keep every derived bound valid; they exist to match rounding tables that
/// did not exclude the length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibleLengthFact {
    pub q: u64,
    pub r: u32,
    pub n: BigInt,
    pub source: String,
    pub tier: Tier,
}

/// The best matching upper-bound record for a parameter set.
#[derive(Debug, Clone, Copy)]
pub struct OverrideHit<'a> {
    pub value: &'a BigInt,
    pub exact: bool,
    pub source: &'a str,
    pub tier: Tier,
}

/// Errors raised while loading fact files.
#[derive(Debug, thiserror::Error)]
pub enum FactError {
    #[error("failed to read facts file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("failed to parse facts JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// A JSON number that may be written as an integer or a decimal string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum NumberRepr {
    Int(i64),
    Str(String),
}

impl NumberRepr {
    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            NumberRepr::Int(n) => Ok(BigInt::from(*n)),
            NumberRepr::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|e| format!("cannot parse {s:?} as an integer: {e}")),
        }
    }
}

/// One record as it appears on disk, before per-kind validation.
#[derive(Debug, Deserialize)]
struct RawFact {
    kind: String,
    #[serde(default)]
    q: Option<u64>,
    #[serde(default)]
    v: Option<u32>,
    #[serde(default)]
    d: Option<u32>,
    #[serde(default)]
    k: Option<u32>,
    #[serde(default)]
    value: Option<NumberRepr>,
    #[serde(default)]
    distribution: Option<Vec<NumberRepr>>,
    #[serde(default)]
    r: Option<u32>,
    #[serde(default)]
    n: Option<NumberRepr>,
    #[serde(default)]
    source: Option<String>,
    #[serde(default)]
    tier: Option<Tier>,
}

/// The validated fact collection an [`crate::engine::Engine`] consults.
#[derive(Debug, Default, Clone)]
pub struct FactStore {
    uppers: Vec<ValueFact>,
    lowers: Vec<LowerFact>,
    forbidden: Vec<ForbiddenFact>,
    divisible: Vec<DivisibleLengthFact>,
    warnings: Vec<String>,
}

impl FactStore {
    /// A store with no records at all.
    pub fn empty() -> Self {
        FactStore::default()
    }

    /// The embedded records, filtered by tier.
    ///
    /// Both flags on is the default configuration; `external = false` gives
    /// the self-contained mode.
    pub fn builtin(paper: bool, external: bool) -> Self {
        let mut store = FactStore::empty();
        if paper {
            store
                .add_json_str(PAPER_JSON, Tier::Paper)
                .expect("embedded paper facts must parse");
        }
        if external {
            store
                .add_json_str(EXTERNAL_JSON, Tier::External)
                .expect("embedded external facts must parse");
        }
        store
    }

    /// Merges a facts file.  Records without a `tier` field load as
    /// [`Tier::External`].  Returns the number of records accepted.
    pub fn add_file(&mut self, path: &Path) -> Result<usize, FactError> {
        let text = std::fs::read_to_string(path).map_err(|source| FactError::Io {
            path: path.display().to_string(),
            source,
        })?;
        self.add_json_str(&text, Tier::External)
    }

    /// Merges records from a JSON array, using `default_tier` for records
    /// that do not state their own.  Invalid or unknown records are skipped
    /// and reported through [`FactStore::warnings`]; only malformed JSON is a
    /// hard error.
    pub fn add_json_str(&mut self, text: &str, default_tier: Tier) -> Result<usize, FactError> {
        let raw: Vec<RawFact> = serde_json::from_str(text)?;
        let mut accepted = 0;
        for (idx, record) in raw.into_iter().enumerate() {
            match self.add_record(record, default_tier) {
                Ok(()) => accepted += 1,
                Err(msg) => self.warnings.push(format!("facts: record {idx}: {msg}")),
            }
        }
        Ok(accepted)
    }

    fn add_record(&mut self, raw: RawFact, default_tier: Tier) -> Result<(), String> {
        let tier = raw.tier.unwrap_or(default_tier);
        let source = raw.source.clone().unwrap_or_else(|| "unsourced".to_string());
        let need = |field: Option<u64>, name: &str| {
            field.ok_or_else(|| format!("kind {:?} missing field `{name}`", raw.kind))
        };
        match raw.kind.as_str() {
            "upper" | "exact" => {
                let q = need(raw.q, "q")?;
                let v = need(raw.v.map(u64::from), "v")? as u32;
                let d = need(raw.d.map(u64::from), "d")? as u32;
                let value = raw
                    .value
                    .as_ref()
                    .ok_or_else(|| format!("kind {:?} missing field `value`", raw.kind))?
                    .to_bigint()?;
                self.uppers.push(ValueFact {
                    q,
                    v,
                    d,
                    k: raw.k,
                    value,
                    exact: raw.kind == "exact",
                    source,
                    tier,
                });
            }
            "lower" => {
                let q = need(raw.q, "q")?;
                let v = need(raw.v.map(u64::from), "v")? as u32;
                let d = need(raw.d.map(u64::from), "d")? as u32;
                let value = raw
                    .value
                    .as_ref()
                    .ok_or_else(|| "kind \"lower\" missing field `value`".to_string())?
                    .to_bigint()?;
                self.lowers.push(LowerFact {
                    q,
                    v,
                    d,
                    k: raw.k,
                    value,
                    source,
                    tier,
                });
            }
            "forbidden_distribution" => {
                let q = need(raw.q, "q")?;
                let v = need(raw.v.map(u64::from), "v")? as u32;
                let d = need(raw.d.map(u64::from), "d")? as u32;
                let reprs = raw
                    .distribution
                    .as_ref()
                    .ok_or_else(|| {
                        "kind \"forbidden_distribution\" missing field `distribution`".to_string()
                    })?;
                let distribution = reprs
                    .iter()
                    .map(NumberRepr::to_bigint)
                    .collect::<Result<Vec<_>, _>>()?;
                if distribution.is_empty() {
                    return Err("empty distribution".to_string());
                }
                self.forbidden.push(ForbiddenFact {
                    q,
                    v,
                    d,
                    distribution,
                    source,
                    tier,
                });
            }
            "divisible_length" => {
                let q = need(raw.q, "q")?;
                let r = need(raw.r.map(u64::from), "r")? as u32;
                let n = raw
                    .n
                    .as_ref()
                    .ok_or_else(|| "kind \"divisible_length\" missing field `n`".to_string())?
                    .to_bigint()?;
                self.divisible.push(DivisibleLengthFact {
                    q,
                    r,
                    n,
                    source,
                    tier,
                });
            }
            other => return Err(format!("unknown kind {other:?}; skipped")),
        }
        Ok(())
    }

    /// Total number of accepted records.
    pub fn len(&self) -> usize {
        self.uppers.len() + self.lowers.len() + self.forbidden.len() + self.divisible.len()
    }

    /// True when no records are loaded.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Messages about records that were skipped during loading.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The strongest constant-dimension record for `A_q(v,d;k)`.
    ///
    /// `d` must be even and `k ≤ v/2`, matching how records are stored.  When
    /// several records match, the smallest value wins; on ties an exact
    /// record is preferred.
    pub fn cdc_override(&self, q: u64, v: u32, d: u32, k: u32) -> Option<OverrideHit<'_>> {
        self.best_upper(|f| f.q == q && f.v == v && f.d == d && f.k == Some(k))
    }

    /// The strongest mixed-dimension record for `A_q(v,d)`.
    pub fn mdc_override(&self, q: u64, v: u32, d: u32) -> Option<OverrideHit<'_>> {
        self.best_upper(|f| f.q == q && f.v == v && f.d == d && f.k.is_none())
    }

    fn best_upper(&self, accept: impl Fn(&ValueFact) -> bool) -> Option<OverrideHit<'_>> {
        let mut best: Option<&ValueFact> = None;
        for fact in self.uppers.iter().filter(|f| accept(f)) {
            let better = match best {
                None => true,
                Some(b) => fact.value < b.value || (fact.value == b.value && fact.exact && !b.exact),
            };
            if better {
                best = Some(fact);
            }
        }
        best.map(|f| OverrideHit {
            value: &f.value,
            exact: f.exact,
            source: &f.source,
            tier: f.tier,
        })
    }

    /// The largest known construction size for `A_q(v,d)`, if any.
    pub fn lower_bound(&self, q: u64, v: u32, d: u32) -> Option<&BigInt> {
        self.lowers
            .iter()
            .filter(|f| f.q == q && f.v == v && f.d == d && f.k.is_none())
            .map(|f| &f.value)
            .max()
    }

    /// All forbidden distributions for codes in `F_q^v` with minimum
    /// distance at least `d`.
    ///
    /// A record applies to every distance `≥` its own (forbidden multisets
    /// stay forbidden when the distance requirement gets stricter), but only
    /// to its exact ambient dimension: embedding into a larger space can make
    /// the configuration possible again.
    pub fn forbidden(&self, q: u64, v: u32, d: u32) -> Vec<&ForbiddenFact> {
        self.forbidden
            .iter()
            .filter(|f| f.q == q && f.v == v && f.d <= d)
            .collect()
    }

    /// Whether a forbidden distribution equal to `distribution` is available
    /// for codes in `F_q^v` with minimum distance at least `d`.
    ///
    /// Closed-form bounds whose derivation leans on one specific geometric
    /// statement use this to decide between their sharp and fallback shapes.
    pub fn has_forbidden(&self, q: u64, v: u32, d: u32, distribution: &[BigInt]) -> bool {
        self.forbidden(q, v, d)
            .iter()
            .any(|f| f.distribution == distribution)
    }

    /// Extra lengths to treat as realizable by `q^r`-divisible codes.
    pub fn divisible_extras(&self, q: u64, r: u32) -> Vec<BigInt> {
        self.divisible
            .iter()
            .filter(|f| f.q == q && f.r == r)
            .map(|f| f.n.clone())
            .collect()
    }
}
