//! Instrumented memoized recursion over interval scheduling.
//!
//! The solver here computes the same optimum as the table-based dynamic
//! program, but top-down, keyed by the exact set of components still in
//! play, and — the point of the module — under a configurable rule for
//! which remaining component to branch on. The evaluation order decides
//! whether the reachable subproblem sets collapse to a few suffix-like
//! states or fan out exponentially, and the engine reports exactly how
//! many arose:
//!
//! * `distinct_subproblems`: sets actually evaluated (memo misses),
//!   counting the root and, when reached, the empty set;
//! * `recursive_calls`: every solver entry, memo hits included — each
//!   evaluated non-empty set makes exactly two child calls.
//!
//! [`count_scaling`] runs the engine across two fixed stress families at
//! a range of sizes and tabulates the growth, exportable as CSV.

use crate::instances::{gen_fig1, gen_fig2, IntervalInstance};
use crate::Error;
use std::collections::HashMap;

/// Largest component count [`memo_solve`] accepts (keys are `n`-bit
/// sets).
pub const MEMO_MAX_COMPONENTS: usize = 512;

/// Largest `m` [`count_scaling`] accepts in general.
pub const SCALING_MAX_M: usize = 200;

/// Largest `m` [`count_scaling`] accepts for the family/order
/// combination whose state space grows exponentially.
pub const SCALING_MAX_M_EXPONENTIAL: usize = 31;

/// Which remaining component the solver branches on at each set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderPolicy {
    /// Smallest start time first (ties by index).
    EarliestStart,
    /// Smallest finish time first (ties by index).
    EarliestFinish,
    /// An explicit evaluation order: `order[p]` is the component
    /// branched on at priority `p`. Must be a permutation of `0..n`.
    Given(Vec<usize>),
}

impl OrderPolicy {
    /// Per-component priority (lower branches earlier).
    fn ranks(&self, inst: &IntervalInstance) -> Result<Vec<usize>, Error> {
        let n = inst.len();
        let order: Vec<usize> = match self {
            OrderPolicy::EarliestStart => {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by(|&a, &b| {
                    inst.interval(a)
                        .start()
                        .total_cmp(&inst.interval(b).start())
                        .then(a.cmp(&b))
                });
                order
            }
            OrderPolicy::EarliestFinish => {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by(|&a, &b| {
                    inst.interval(a)
                        .finish()
                        .total_cmp(&inst.interval(b).finish())
                        .then(a.cmp(&b))
                });
                order
            }
            OrderPolicy::Given(order) => {
                if order.len() != n {
                    return Err(Error::Precondition(format!(
                        "evaluation order has {} entries for {n} components",
                        order.len()
                    )));
                }
                let mut seen = vec![false; n];
                for &i in order {
                    if i >= n {
                        return Err(Error::Precondition(format!(
                            "evaluation order entry {i} is out of range for {n} components"
                        )));
                    }
                    if seen[i] {
                        return Err(Error::Precondition(format!(
                            "evaluation order repeats component {i}"
                        )));
                    }
                    seen[i] = true;
                }
                order.clone()
            }
        };
        let mut rank = vec![0usize; n];
        for (p, &i) in order.iter().enumerate() {
            rank[i] = p;
        }
        Ok(rank)
    }
}

/// What one instrumented run observed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountReport {
    /// Component sets evaluated (root and reached-empty-set included).
    pub distinct_subproblems: u64,
    /// Solver entries, memo hits included.
    pub recursive_calls: u64,
    /// The optimum, identical to the table DP's.
    pub optimal_value: f64,
}

type Key = Box<[u64]>;

struct Engine<'a> {
    values: &'a [f64],
    rank: Vec<usize>,
    /// `remove_mask[i]`: bit `i` plus every component overlapping `i`.
    remove_mask: Vec<Key>,
    memo: HashMap<Key, f64>,
    calls: u64,
}

impl Engine<'_> {
    fn eval(&mut self, key: Key) -> f64 {
        self.calls += 1;
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let value = match self.min_rank_element(&key) {
            None => 0.0,
            Some(i) => {
                let mut skip_key = key.clone();
                skip_key[i / 64] &= !(1u64 << (i % 64));
                let mut take_key = key.clone();
                for (word, mask) in take_key.iter_mut().zip(self.remove_mask[i].iter()) {
                    *word &= !mask;
                }
                let skip = self.eval(skip_key);
                let take = self.values[i] + self.eval(take_key);
                skip.max(take)
            }
        };
        self.memo.insert(key, value);
        value
    }

    fn min_rank_element(&self, key: &[u64]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (w, &bits) in key.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let i = w * 64 + b.trailing_zeros() as usize;
                if best.is_none_or(|j| self.rank[i] < self.rank[j]) {
                    best = Some(i);
                }
                b &= b - 1;
            }
        }
        best
    }
}

/// Solves the instance by memoized recursion under `order`, reporting
/// the optimum together with exact subproblem and call counts.
pub fn memo_solve(inst: &IntervalInstance, order: &OrderPolicy) -> Result<CountReport, Error> {
    let n = inst.len();
    if n > MEMO_MAX_COMPONENTS {
        return Err(Error::Capacity(format!(
            "memoization keys are {n}-bit component sets; the cap is \
             {MEMO_MAX_COMPONENTS} components"
        )));
    }
    let rank = order.ranks(inst)?;
    let words = n.div_ceil(64).max(1);

    let empty: Key = vec![0u64; words].into_boxed_slice();
    let mut remove_mask = vec![empty.clone(); n];
    for i in 0..n {
        remove_mask[i][i / 64] |= 1 << (i % 64);
        for j in 0..n {
            if j != i && inst.interval(i).overlaps(&inst.interval(j)) {
                remove_mask[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut root = empty;
    for i in 0..n {
        root[i / 64] |= 1 << (i % 64);
    }

    let mut engine = Engine {
        values: inst.values(),
        rank,
        remove_mask,
        memo: HashMap::new(),
        calls: 0,
    };
    let optimal_value = engine.eval(root);
    Ok(CountReport {
        distinct_subproblems: engine.memo.len() as u64,
        recursive_calls: engine.calls,
        optimal_value,
    })
}

/// The two built-in stress families for [`count_scaling`], sized by a
/// parameter `m` (each has `n = 2m` components).
///
/// * [`Family::Fig1`]: `m` disjoint overlapping pairs. Identity order
///   interleaves the pairs and the reachable sets blow up as `2^m`;
///   start order keeps them suffix-shaped.
/// * [`Family::Fig2`]: `m` disjoint shorts and `m` mutually overlapping
///   longs, with short `x` overlapping exactly the first `x + 1` longs.
///   Finish order visits shorts first and the sets form a quadratic
///   two-suffix grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Fig1,
    Fig2,
}

/// Evaluation order for [`count_scaling`], resolved per instance size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderChoice {
    EarliestStart,
    EarliestFinish,
    /// Components in their original emission order.
    Identity,
}

impl OrderChoice {
    /// The concrete policy for an instance with `n` components.
    pub fn policy_for(self, n: usize) -> OrderPolicy {
        match self {
            OrderChoice::EarliestStart => OrderPolicy::EarliestStart,
            OrderChoice::EarliestFinish => OrderPolicy::EarliestFinish,
            OrderChoice::Identity => OrderPolicy::Given((0..n).collect()),
        }
    }
}

/// One size point of a scaling run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalingRow {
    pub m: usize,
    pub n: usize,
    pub distinct: u64,
    pub calls: u64,
}

/// Runs the engine on `family` at each size in `sizes` under `order`.
///
/// Sizes are capped at [`SCALING_MAX_M`], and at
/// [`SCALING_MAX_M_EXPONENTIAL`] for the pair family under identity
/// order, whose state count doubles with every size step.
pub fn count_scaling(
    family: Family,
    order: OrderChoice,
    sizes: &[usize],
) -> Result<Vec<ScalingRow>, Error> {
    let mut rows = Vec::with_capacity(sizes.len());
    for &m in sizes {
        let cap = if family == Family::Fig1 && order == OrderChoice::Identity {
            SCALING_MAX_M_EXPONENTIAL
        } else {
            SCALING_MAX_M
        };
        if m > cap {
            return Err(Error::Capacity(format!(
                "scaling size m = {m} exceeds the cap of {cap} for this family and order"
            )));
        }
        let inst = match family {
            Family::Fig1 => gen_fig1(m),
            Family::Fig2 => gen_fig2(m),
        };
        let report = memo_solve(&inst, &order.policy_for(inst.len()))?;
        rows.push(ScalingRow {
            m,
            n: inst.len(),
            distinct: report.distinct_subproblems,
            calls: report.recursive_calls,
        });
    }
    Ok(rows)
}

/// Renders scaling rows as CSV with a `m,n,distinct,calls` header.
pub fn scaling_csv(rows: &[ScalingRow]) -> String {
    let mut out = String::from("m,n,distinct,calls\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.m, r.n, r.distinct, r.calls));
    }
    out
}
