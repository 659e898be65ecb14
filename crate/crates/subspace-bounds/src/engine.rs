//! The computation context: options, curated facts, and memo tables.
//!
//! Bounds recurse through each other heavily — a single mixed-dimension
//! query touches dozens of constant-dimension subproblems, divisible-length
//! monoids, and pattern enumerations.  An [`Engine`] owns all of that shared
//! state so repeated subproblems are solved once, and so one switch controls
//! which curated facts the whole derivation may use.

use crate::bound::BoundResult;
use crate::divisible::LengthMonoid;
use crate::facts::FactStore;
use crate::gfspace::{self, BruteForceResult, GfError};
use num_bigint::BigInt;
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

/// Tunables for an [`Engine`].
#[derive(Debug, Clone)]
pub struct EngineOptions {
    /// Load the embedded always-safe fact records.
    pub paper_facts: bool,
    /// Load the embedded records imported from the online tables.  Turning
    /// this off gives bounds derived entirely inside this crate plus the
    /// always-safe records.
    pub external_facts: bool,
    /// How many nested rounds of pattern refinement through membership
    /// programs to run before falling back to coarser (still valid) covers.
    pub refine_depth: u32,
    /// Refuse brute-force subspace enumerations beyond this many subspaces.
    pub enumeration_guard: u64,
    /// Node budget for each branch-and-bound integer program.
    pub ilp_node_limit: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            paper_facts: true,
            external_facts: true,
            refine_depth: 2,
            enumeration_guard: 100_000,
            ilp_node_limit: 1_000_000,
        }
    }
}

/// Shared context for bound computations.
///
/// Cheap to create; holds interior-mutable memo tables, so a single engine
/// should be reused across related queries.  Not thread-safe — use one
/// engine per thread.
///
/// ```
/// use subspace_bounds::engine::Engine;
/// let eng = Engine::new();
/// assert_eq!(eng.cdc_bound(2, 13, 10, 6).value.to_string(), "16769");
/// ```
pub struct Engine {
    options: EngineOptions,
    facts: FactStore,
    cdc_memo: RefCell<HashMap<(u64, u32, u32, u32), BoundResult>>,
    mdc_memo: RefCell<HashMap<(u64, u32, u32), BoundResult>>,
    monoids: RefCell<HashMap<(u64, u32), LengthMonoid>>,
    patterns: RefCell<HashMap<(u64, u32, u32, bool, u32), Rc<Vec<Vec<BigInt>>>>>,
}

impl Engine {
    /// Engine with default options and both embedded fact tiers.
    pub fn new() -> Self {
        Engine::with_options(EngineOptions::default())
    }

    /// Engine with the given options; facts load according to
    /// `options.paper_facts` / `options.external_facts`.
    pub fn with_options(options: EngineOptions) -> Self {
        let facts = FactStore::builtin(options.paper_facts, options.external_facts);
        Engine::with_facts(facts, options)
    }

    /// Engine over an explicit fact collection (for extra fact files or for
    /// running with no facts at all).
    pub fn with_facts(facts: FactStore, options: EngineOptions) -> Self {
        Engine {
            options,
            facts,
            cdc_memo: RefCell::new(HashMap::new()),
            mdc_memo: RefCell::new(HashMap::new()),
            monoids: RefCell::new(HashMap::new()),
            patterns: RefCell::new(HashMap::new()),
        }
    }

    /// The facts this engine may use.
    pub fn facts(&self) -> &FactStore {
        &self.facts
    }

    /// The options this engine was built with.
    pub fn options(&self) -> &EngineOptions {
        &self.options
    }

    /// Upper bound for the constant-dimension code size `A_q(v,d;k)`.
    ///
    /// Panics when `q` is not a prime power or `k > v`; odd `d` is rounded up
    /// (distances between equal-dimension subspaces are even).
    pub fn cdc_bound(&self, q: u64, v: u32, d: u32, k: u32) -> BoundResult {
        crate::cdc::bound(self, q, v, d, k)
    }

    /// Upper bound for the mixed-dimension code size `A_q(v,d)`.
    ///
    /// Panics when `q` is not a prime power or `d` is out of `1..=v`.
    pub fn mdc_bound(&self, q: u64, v: u32, d: u32) -> BoundResult {
        crate::mdc::bound(self, q, v, d)
    }

    /// Exhaustive maximum code size for tiny parameters, by maximum clique
    /// over the explicit subspace graph.  `dims` restricts codewords to one
    /// dimension; `None` allows all dimensions.
    pub fn oracle_bound(
        &self,
        q: u64,
        v: u32,
        d: u32,
        dims: Option<u32>,
    ) -> Result<BruteForceResult, GfError> {
        gfspace::brute_force_max(q, v, d, dims, self.options.enumeration_guard)
    }

    /// The sharpened quotient `max { b : a - b [k]_q realizable }` over
    /// `q^(k-1)`-divisible lengths, honoring any extra lengths the fact
    /// store admits for this `(q, k-1)`.
    pub fn divisible_quotient(&self, a: &BigInt, k: u32, q: u64) -> Option<BigInt> {
        assert!(k >= 1, "k must be positive");
        let key = (q, k - 1);
        let mut monoids = self.monoids.borrow_mut();
        let monoid = monoids.entry(key).or_insert_with(|| {
            let extras = self.facts.divisible_extras(q, k - 1);
            LengthMonoid::with_extra_lengths(q, k - 1, &extras)
        });
        monoid.quotient(a)
    }

    pub(crate) fn cdc_memo_get(&self, q: u64, v: u32, d: u32, k: u32) -> Option<BoundResult> {
        self.cdc_memo.borrow().get(&(q, v, d, k)).cloned()
    }

    pub(crate) fn cdc_memo_put(&self, q: u64, v: u32, d: u32, k: u32, result: BoundResult) {
        self.cdc_memo.borrow_mut().insert((q, v, d, k), result);
    }

    pub(crate) fn mdc_memo_get(&self, q: u64, v: u32, d: u32) -> Option<BoundResult> {
        self.mdc_memo.borrow().get(&(q, v, d)).cloned()
    }

    pub(crate) fn mdc_memo_put(&self, q: u64, v: u32, d: u32, result: BoundResult) {
        self.mdc_memo.borrow_mut().insert((q, v, d), result);
    }

    pub(crate) fn patterns_memo_get(
        &self,
        key: (u64, u32, u32, bool, u32),
    ) -> Option<Rc<Vec<Vec<BigInt>>>> {
        self.patterns.borrow().get(&key).cloned()
    }

    pub(crate) fn patterns_memo_put(
        &self,
        key: (u64, u32, u32, bool, u32),
        value: Rc<Vec<Vec<BigInt>>>,
    ) {
        self.patterns.borrow_mut().insert(key, value);
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{big, qnum};

    #[test]
    fn default_options() {
        let opts = EngineOptions::default();
        assert!(opts.paper_facts);
        assert!(opts.external_facts);
        assert_eq!(opts.refine_depth, 2);
        assert_eq!(opts.enumeration_guard, 100_000);
        assert_eq!(opts.ilp_node_limit, 1_000_000);
    }

    #[test]
    fn divisible_quotient_honors_admitted_lengths() {
        // 247 * [9]_3 divided by [4]_3 with 27-divisible remainders: the pure
        // generated monoid stops at 60763, but the admitted extra length 87
        // lets the quotient stop three steps earlier.
        let a = big(247) * qnum(9, 3);
        assert_eq!(a, big(2_430_727));

        let with_facts = Engine::new();
        assert_eq!(with_facts.divisible_quotient(&a, 4, 3), Some(big(60_766)));

        let bare = Engine::with_facts(crate::facts::FactStore::empty(), EngineOptions::default());
        assert_eq!(bare.divisible_quotient(&a, 4, 3), Some(big(60_763)));
    }

    #[test]
    fn memo_tables_are_consistent() {
        let eng = Engine::new();
        let first = eng.cdc_bound(2, 10, 6, 5);
        let second = eng.cdc_bound(2, 10, 6, 5);
        assert_eq!(first, second);
        assert_eq!(first.value, big(38_148));
    }
}
