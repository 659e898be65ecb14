//! Exact linear and integer programming over arbitrary-precision rationals.
//!
//! A dense two-phase simplex with Bland's anti-cycling rule solves the LP
//! relaxations; branch-and-bound with best-bound node selection handles
//! integrality. Every pivot and every comparison is exact `BigRational`
//! arithmetic, so results carry proofs-by-arithmetic rather than tolerances.
//!
//! Models are small (tens of variables) throughout this crate, so the dense
//! tableau and solve-from-scratch node strategy are deliberate: simple,
//! deterministic, and easy to audit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

type R = BigRational;

/// Shorthand: the rational `n/1`.
pub fn rq(n: i64) -> R {
    R::from_integer(BigInt::from(n))
}

/// Shorthand: the rational `n/1` from a big integer.
pub fn rq_big(n: &BigInt) -> R {
    R::from_integer(n.clone())
}

/// Handle to a model variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarId(pub usize);

/// Constraint comparison operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

/// Objective direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone)]
struct VarDef {
    name: String,
    lb: R,
    ub: Option<R>,
    integer: bool,
}

#[derive(Debug, Clone)]
struct Row {
    label: String,
    terms: Vec<(usize, R)>,
    cmp: Cmp,
    rhs: R,
}

/// Outcome of an LP or ILP solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Optimal(Solution),
    Infeasible,
    Unbounded,
}

impl Outcome {
    /// Unwraps the optimal solution; panics on infeasible/unbounded.
    pub fn expect_optimal(self, what: &str) -> Solution {
        match self {
            Outcome::Optimal(s) => s,
            other => panic!("{what}: expected optimal solution, got {other:?}"),
        }
    }
}

/// An optimal solution: objective value, variable values, nodes explored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub objective: R,
    pub values: Vec<R>,
    pub nodes: u64,
}

/// Errors from the integer solver.
#[derive(Debug, thiserror::Error)]
pub enum IlpError {
    #[error("branch-and-bound node limit of {0} exceeded")]
    NodeLimit(u64),
}

/// A linear/integer program under construction.
#[derive(Debug, Clone)]
pub struct Model {
    name: String,
    vars: Vec<VarDef>,
    rows: Vec<Row>,
    obj: Vec<(usize, R)>,
    sense: Sense,
}

impl Model {
    pub fn new(name: impl Into<String>) -> Self {
        Model { name: name.into(), vars: vec![], rows: vec![], obj: vec![], sense: Sense::Maximize }
    }

    /// Adds a variable with finite lower bound `lb`, optional upper bound, and integrality flag.
    pub fn add_var(&mut self, name: impl Into<String>, lb: R, ub: Option<R>, integer: bool) -> VarId {
        self.vars.push(VarDef { name: name.into(), lb, ub, integer });
        VarId(self.vars.len() - 1)
    }

    /// Adds a nonnegative variable (the common case).
    pub fn add_nonneg(&mut self, name: impl Into<String>, ub: Option<R>, integer: bool) -> VarId {
        self.add_var(name, R::zero(), ub, integer)
    }

    pub fn add_constraint(&mut self, label: impl Into<String>, terms: Vec<(VarId, R)>, cmp: Cmp, rhs: R) {
        let terms = terms.into_iter().map(|(v, c)| (v.0, c)).collect();
        self.rows.push(Row { label: label.into(), terms, cmp, rhs });
    }

    pub fn set_objective(&mut self, terms: Vec<(VarId, R)>, sense: Sense) {
        self.obj = terms.into_iter().map(|(v, c)| (v.0, c)).collect();
        self.sense = sense;
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Evaluates all constraints and variable bounds at `values` (exact check).
    pub fn is_feasible(&self, values: &[R]) -> bool {
        for (i, v) in self.vars.iter().enumerate() {
            if values[i] < v.lb {
                return false;
            }
            if let Some(ub) = &v.ub {
                if &values[i] > ub {
                    return false;
                }
            }
        }
        for row in &self.rows {
            let lhs: R = row.terms.iter().map(|(j, c)| c * &values[*j]).sum();
            let ok = match row.cmp {
                Cmp::Le => lhs <= row.rhs,
                Cmp::Ge => lhs >= row.rhs,
                Cmp::Eq => lhs == row.rhs,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Objective value at `values`, in the model's own sense.
    pub fn objective_at(&self, values: &[R]) -> R {
        self.obj.iter().map(|(j, c)| c * &values[*j]).sum()
    }

    /// Renders the model as text, with exact `p/q` coefficients.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "model {}", self.name);
        let dir = match self.sense {
            Sense::Maximize => "maximize",
            Sense::Minimize => "minimize",
        };
        let _ = writeln!(out, "{dir} {}", self.render_terms(&self.obj));
        let _ = writeln!(out, "subject to");
        for row in &self.rows {
            let op = match row.cmp {
                Cmp::Le => "<=",
                Cmp::Ge => ">=",
                Cmp::Eq => "=",
            };
            let _ = writeln!(out, "  {}: {} {} {}", row.label, self.render_terms(&row.terms), op, row.rhs);
        }
        let _ = writeln!(out, "bounds");
        for v in &self.vars {
            let kind = if v.integer { " integer" } else { "" };
            match &v.ub {
                Some(ub) => {
                    let _ = writeln!(out, "  {} in [{}, {}]{}", v.name, v.lb, ub, kind);
                }
                None => {
                    let _ = writeln!(out, "  {} >= {}{}", v.name, v.lb, kind);
                }
            }
        }
        out
    }

    fn render_terms(&self, terms: &[(usize, R)]) -> String {
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (j, c)) in terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "{} {}", c, self.vars[*j].name);
        }
        out
    }

    /// Solves the LP relaxation (integrality flags ignored).
    pub fn solve_lp(&self) -> Outcome {
        self.lp_with_extra(&[])
    }

    /// Solves the integer program with the default node limit.
    pub fn solve_ilp(&self) -> Result<Outcome, IlpError> {
        self.solve_ilp_with_limit(1_000_000)
    }

    /// Branch-and-bound: best-bound node order, most-fractional branching.
    pub fn solve_ilp_with_limit(&self, limit: u64) -> Result<Outcome, IlpError> {
        let root = match self.lp_with_extra(&[]) {
            Outcome::Optimal(s) => s,
            other => return Ok(other),
        };
        let max_sense = self.sense == Sense::Maximize;
        // Internally treat as maximization of the signed objective.
        let signed = |obj: &R| if max_sense { obj.clone() } else { -obj.clone() };

        let mut heap = BinaryHeap::new();
        let mut seq = 0u64;
        heap.push(Node { bound: signed(&root.objective), seq, extra: vec![] });
        let mut incumbent: Option<(R, Vec<R>)> = None;
        let mut nodes = 0u64;

        while let Some(node) = heap.pop() {
            if let Some((best, _)) = &incumbent {
                if node.bound <= *best {
                    continue; // cannot improve on the incumbent
                }
            }
            nodes += 1;
            if nodes > limit {
                return Err(IlpError::NodeLimit(limit));
            }
            let sol = match self.lp_with_extra(&node.extra) {
                Outcome::Optimal(s) => s,
                Outcome::Infeasible => continue,
                Outcome::Unbounded => return Ok(Outcome::Unbounded),
            };
            let bound = signed(&sol.objective);
            if let Some((best, _)) = &incumbent {
                if bound <= *best {
                    continue;
                }
            }
            match self.most_fractional(&sol.values) {
                None => {
                    // Integer-feasible: exact post-check, then update the incumbent.
                    debug_assert!(self.is_feasible(&sol.values));
                    for (i, v) in self.vars.iter().enumerate() {
                        debug_assert!(!v.integer || sol.values[i].is_integer());
                    }
                    incumbent = Some((bound, sol.values));
                }
                Some(j) => {
                    let val = &sol.values[j];
                    let down = val.floor();
                    let up = &down + R::one();
                    for (cmp, rhs) in [(Cmp::Le, down), (Cmp::Ge, up)] {
                        let mut extra = node.extra.clone();
                        extra.push(Row {
                            label: format!("branch_{}", self.vars[j].name),
                            terms: vec![(j, R::one())],
                            cmp,
                            rhs,
                        });
                        seq += 1;
                        heap.push(Node { bound: bound.clone(), seq, extra });
                    }
                }
            }
        }

        Ok(match incumbent {
            None => Outcome::Infeasible,
            Some((bound, values)) => {
                let objective = if max_sense { bound } else { -bound };
                Outcome::Optimal(Solution { objective, values, nodes })
            }
        })
    }

    /// Most-fractional integer variable, ties broken toward the lowest index.
    fn most_fractional(&self, values: &[R]) -> Option<usize> {
        let half = R::new(BigInt::one(), BigInt::from(2));
        let mut best: Option<(R, usize)> = None;
        for (j, v) in self.vars.iter().enumerate() {
            if !v.integer || values[j].is_integer() {
                continue;
            }
            let frac = &values[j] - values[j].floor();
            let dist = if frac <= half { frac } else { R::one() - frac };
            match &best {
                Some((d, _)) if *d >= dist => {}
                _ => best = Some((dist, j)),
            }
        }
        best.map(|(_, j)| j)
    }

    /// Two-phase simplex on the model plus extra branching rows.
    fn lp_with_extra(&self, extra: &[Row]) -> Outcome {
        let n = self.vars.len();
        // Shift x = y + lb so every structural variable is y >= 0; upper bounds become rows.
        let mut rows: Vec<(Vec<R>, Cmp, R)> = vec![];
        for row in self.rows.iter().chain(extra.iter()) {
            let mut dense = vec![R::zero(); n];
            let mut shift = R::zero();
            for (j, c) in &row.terms {
                dense[*j] = &dense[*j] + c;
                shift += c * &self.vars[*j].lb;
            }
            rows.push((dense, row.cmp, &row.rhs - shift));
        }
        for (j, v) in self.vars.iter().enumerate() {
            if let Some(ub) = &v.ub {
                let mut dense = vec![R::zero(); n];
                dense[j] = R::one();
                rows.push((dense, Cmp::Le, ub - &v.lb));
            }
        }
        // Normalize right-hand sides to be nonnegative.
        for (dense, cmp, rhs) in rows.iter_mut() {
            if rhs.is_negative() {
                for c in dense.iter_mut() {
                    *c = -c.clone();
                }
                *rhs = -rhs.clone();
                *cmp = match *cmp {
                    Cmp::Le => Cmp::Ge,
                    Cmp::Ge => Cmp::Le,
                    Cmp::Eq => Cmp::Eq,
                };
            }
        }
        let m = rows.len();
        let n_slack = rows.iter().filter(|(_, c, _)| *c != Cmp::Eq).count();
        let n_art = rows.iter().filter(|(_, c, _)| *c != Cmp::Le).count();
        let ncols = n + n_slack + n_art;

        let mut a: Vec<Vec<R>> = Vec::with_capacity(m);
        let mut rhs: Vec<R> = Vec::with_capacity(m);
        let mut basis: Vec<usize> = Vec::with_capacity(m);
        let mut next_slack = n;
        let mut next_art = n + n_slack;
        for (dense, cmp, b) in rows.into_iter() {
            let mut full = vec![R::zero(); ncols];
            full[..n].clone_from_slice(&dense);
            match cmp {
                Cmp::Le => {
                    full[next_slack] = R::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Cmp::Ge => {
                    full[next_slack] = -R::one();
                    next_slack += 1;
                    full[next_art] = R::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Cmp::Eq => {
                    full[next_art] = R::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            a.push(full);
            rhs.push(b);
        }

        // Phase 1: drive the artificial variables to zero.
        if n_art > 0 {
            let mut cost = vec![R::zero(); ncols];
            for c in cost.iter_mut().take(ncols).skip(n + n_slack) {
                *c = -R::one();
            }
            let mut obj = R::zero();
            price_out(&a, &rhs, &basis, &mut cost, &mut obj);
            if run_simplex(&mut a, &mut rhs, &mut basis, &mut cost, &mut obj).is_err() {
                unreachable!("phase-1 objective is bounded above by zero");
            }
            if !obj.is_zero() {
                return Outcome::Infeasible;
            }
            // Pivot any remaining (degenerate) artificial out of the basis; drop redundant rows.
            let art_start = n + n_slack;
            let mut row_idx = 0;
            while row_idx < a.len() {
                if basis[row_idx] >= art_start {
                    if let Some(col) = (0..art_start).find(|&j| !a[row_idx][j].is_zero()) {
                        pivot(&mut a, &mut rhs, &mut basis, &mut cost, &mut obj, row_idx, col);
                    } else {
                        a.remove(row_idx);
                        rhs.remove(row_idx);
                        basis.remove(row_idx);
                        continue;
                    }
                }
                row_idx += 1;
            }
            // Discard the artificial columns entirely.
            for row in a.iter_mut() {
                row.truncate(art_start);
            }
        }

        // Phase 2: the real objective over the shifted variables.
        let ncols = a.first().map_or(n + n_slack, |r| r.len());
        let mut cost = vec![R::zero(); ncols];
        for (j, c) in &self.obj {
            let signed = if self.sense == Sense::Maximize { c.clone() } else { -c.clone() };
            cost[*j] = &cost[*j] + signed;
        }
        let mut obj = R::zero();
        price_out(&a, &rhs, &basis, &mut cost, &mut obj);
        if run_simplex(&mut a, &mut rhs, &mut basis, &mut cost, &mut obj).is_err() {
            return Outcome::Unbounded;
        }

        let mut values = vec![R::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                values[b] = rhs[i].clone();
            }
        }
        for (j, v) in self.vars.iter().enumerate() {
            values[j] = &values[j] + &v.lb;
        }
        let objective = self.objective_at(&values);
        Outcome::Optimal(Solution { objective, values, nodes: 1 })
    }
}

/// Rewrites `cost`/`obj` as reduced costs relative to the current basis.
fn price_out(a: &[Vec<R>], rhs: &[R], basis: &[usize], cost: &mut [R], obj: &mut R) {
    for (i, &b) in basis.iter().enumerate() {
        if !cost[b].is_zero() {
            let f = cost[b].clone();
            *obj += &f * &rhs[i];
            for (c, av) in cost.iter_mut().zip(a[i].iter()) {
                *c = &*c - &(&f * av);
            }
        }
    }
}

/// Bland-rule simplex iterations until optimal (`Ok`) or unbounded (`Err`).
fn run_simplex(
    a: &mut Vec<Vec<R>>,
    rhs: &mut Vec<R>,
    basis: &mut Vec<usize>,
    cost: &mut [R],
    obj: &mut R,
) -> Result<(), ()> {
    loop {
        // Entering: lowest-index column with positive reduced cost (Bland).
        let Some(col) = cost.iter().position(|c| c.is_positive()) else {
            return Ok(());
        };
        // Leaving: minimum ratio; ties to the lowest basic-variable index (Bland).
        let mut pick: Option<(R, usize)> = None;
        for i in 0..a.len() {
            if a[i][col].is_positive() {
                let ratio = &rhs[i] / &a[i][col];
                let better = match &pick {
                    None => true,
                    Some((r, best_i)) => ratio < *r || (ratio == *r && basis[i] < basis[*best_i]),
                };
                if better {
                    pick = Some((ratio, i));
                }
            }
        }
        let Some((_, row)) = pick else {
            return Err(());
        };
        pivot(a, rhs, basis, cost, obj, row, col);
    }
}

/// Pivots the tableau on `(row, col)`, updating basis, cost row, and objective.
fn pivot(
    a: &mut [Vec<R>],
    rhs: &mut [R],
    basis: &mut [usize],
    cost: &mut [R],
    obj: &mut R,
    row: usize,
    col: usize,
) {
    let p = a[row][col].clone();
    for x in a[row].iter_mut() {
        *x = &*x / &p;
    }
    rhs[row] = &rhs[row] / &p;
    let pivot_row = a[row].clone();
    let pivot_rhs = rhs[row].clone();
    for i in 0..a.len() {
        if i != row && !a[i][col].is_zero() {
            let f = a[i][col].clone();
            for (x, pv) in a[i].iter_mut().zip(pivot_row.iter()) {
                *x = &*x - &(&f * pv);
            }
            rhs[i] = &rhs[i] - &(&f * &pivot_rhs);
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        *obj += &f * &pivot_rhs;
        for (c, pv) in cost.iter_mut().zip(pivot_row.iter()) {
            *c = &*c - &(&f * pv);
        }
    }
    basis[row] = col;
}

/// Branch-and-bound node: parent bound, insertion order, branching rows.
#[derive(Debug, Clone)]
struct Node {
    bound: R,
    seq: u64,
    extra: Vec<Row>,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.seq == other.seq
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        // Max-heap: highest bound first; ties pop the oldest node.
        self.bound.cmp(&other.bound).then(other.seq.cmp(&self.seq))
    }
}
