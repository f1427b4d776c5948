//! Weighted interval scheduling.
//!
//! The dynamic program works on the components sorted by start time and
//! solves one subproblem per suffix of that order: the best value for
//! suffix `k` either skips component `k` (suffix `k+1`) or takes it and
//! jumps to `next_of[k]`, the first component whose start clears its
//! finish. Retrieval replays the table's own comparisons, so the selected
//! set reproduces the table value exactly.
//!
//! On unit-value instances the take/skip choice degenerates into "always
//! take the interval with the earliest finish", which [`greedy_unit`]
//! implements directly; [`brute_force`] is the subset-enumeration oracle
//! both are checked against.

use crate::instances::IntervalInstance;
use crate::Error;

/// Largest component count [`brute_force`] will enumerate (`2^n` subsets).
pub const BRUTE_FORCE_MAX: usize = 24;

/// The permutation that sorts components by start time, ties by original
/// index: `order[k]` is the original index of the `k`-th earliest start.
pub fn sort_by_start(inst: &IntervalInstance) -> Vec<usize> {
    let mut order: Vec<usize> = (0..inst.len()).collect();
    order.sort_by(|&a, &b| {
        inst.interval(a)
            .start()
            .total_cmp(&inst.interval(b).start())
            .then(a.cmp(&b))
    });
    order
}

/// For a start-sorted instance: the least index `k >= i` whose start is at
/// or after the finish of component `i`, or `n` (one past the end) if no
/// component qualifies. Binary search over the sorted starts.
///
/// Returns an error if `i` is out of range. Sortedness is the caller's
/// contract (checked in debug builds).
pub fn next_index(inst: &IntervalInstance, i: usize) -> Result<usize, Error> {
    let n = inst.len();
    if i >= n {
        return Err(Error::Precondition(format!(
            "component index {i} out of range for {n} components"
        )));
    }
    debug_assert!(
        is_start_sorted(inst),
        "next_index requires a start-sorted instance"
    );
    let f_i = inst.interval(i).finish();
    let ivs = inst.intervals();
    // Starts are non-decreasing, so "start >= f_i" is upward-closed in k.
    Ok(i + ivs[i..].partition_point(|iv| iv.start() < f_i))
}

fn is_start_sorted(inst: &IntervalInstance) -> bool {
    inst.intervals()
        .windows(2)
        .all(|w| w[0].start() <= w[1].start())
}

/// The filled dynamic-programming table for one instance, in start-sorted
/// coordinates.
#[derive(Debug, Clone)]
pub struct DpTable {
    order: Vec<usize>,
    next_of: Vec<usize>,
    opt: Vec<f64>,
}

impl DpTable {
    /// Optimal total value of the whole instance (`opt()[0]`).
    pub fn optimum(&self) -> f64 {
        self.opt[0]
    }

    /// `opt()[k]` is the optimal value over the start-sorted suffix
    /// `k..n`; length `n + 1`, with `opt()[n] == 0`.
    pub fn opt(&self) -> &[f64] {
        &self.opt
    }

    /// Start-sorted permutation: `order()[k]` is the original index of the
    /// component in sorted position `k`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `next_of()[k]` is the first sorted position at or after `k` whose
    /// start clears the finish of position `k` (sentinel `n`).
    pub fn next_of(&self) -> &[usize] {
        &self.next_of
    }
}

/// Fills the suffix table bottom-up.
pub fn dp_value(inst: &IntervalInstance) -> DpTable {
    let n = inst.len();
    let order = sort_by_start(inst);
    let starts: Vec<f64> = order.iter().map(|&i| inst.interval(i).start()).collect();
    let values: Vec<f64> = order.iter().map(|&i| inst.value(i)).collect();

    let mut next_of = vec![n; n];
    for k in 0..n {
        let f_k = inst.interval(order[k]).finish();
        next_of[k] = k + starts[k..].partition_point(|&s| s < f_k);
    }

    let mut opt = vec![0.0; n + 1];
    for k in (0..n).rev() {
        let take = values[k] + opt[next_of[k]];
        let skip = opt[k + 1];
        opt[k] = skip.max(take);
    }
    DpTable {
        order,
        next_of,
        opt,
    }
}

/// A feasible schedule: pairwise-disjoint components, identified by their
/// original (pre-sort) 0-based indices in ascending order, and their
/// total value (summed in ascending index order).
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub selected: Vec<usize>,
    pub value: f64,
}

impl Solution {
    /// Checks feasibility against the instance: indices strictly
    /// increasing and in range, intervals pairwise disjoint, and `value`
    /// equal to the sum of selected values.
    pub fn validate(&self, inst: &IntervalInstance) -> Result<(), String> {
        for w in self.selected.windows(2) {
            if w[0] >= w[1] {
                return Err(format!("indices not strictly increasing: {:?}", self.selected));
            }
        }
        if let Some(&last) = self.selected.last() {
            if last >= inst.len() {
                return Err(format!("index {last} out of range for {}", inst.len()));
            }
        }
        for (a, &i) in self.selected.iter().enumerate() {
            for &j in &self.selected[a + 1..] {
                if inst.interval(i).overlaps(&inst.interval(j)) {
                    return Err(format!("selected components {i} and {j} overlap"));
                }
            }
        }
        let sum = selection_value(inst, &self.selected);
        if sum != self.value {
            return Err(format!("value {} != sum of selected values {sum}", self.value));
        }
        Ok(())
    }
}

/// Sum of the selected components' values in ascending index order — the
/// canonical accumulation order every solver in this module uses, so
/// values are comparable bit-for-bit.
fn selection_value(inst: &IntervalInstance, selected: &[usize]) -> f64 {
    selected.iter().map(|&i| inst.value(i)).sum()
}

/// Walks a filled table and extracts one optimal schedule: skip position
/// `k` when `opt[k] == opt[k+1]` (exclusion wins ties), otherwise take it
/// and jump to `next_of[k]`.
pub fn dp_retrieve(inst: &IntervalInstance, table: &DpTable) -> Solution {
    let n = inst.len();
    let mut selected = Vec::new();
    let mut k = 0;
    while k < n {
        if table.opt[k] == table.opt[k + 1] {
            k += 1;
        } else {
            // opt[k] was computed as max(skip, take) and differs from
            // skip, so it equals take exactly: position k is in some
            // optimal schedule for this suffix.
            selected.push(table.order[k]);
            k = table.next_of[k];
        }
    }
    selected.sort_unstable();
    let value = selection_value(inst, &selected);
    Solution { selected, value }
}

/// Earliest-finish greedy for unit-value instances: sweep components in
/// order of finish time (ties by index) and take each one whose start is
/// at or after the finish of the last taken.
///
/// Errors if any value differs from 1 — outside that class the greedy's
/// choice is not exchange-safe and this function refuses to guess.
pub fn greedy_unit(inst: &IntervalInstance) -> Result<Solution, Error> {
    if let Some(i) = inst.values().iter().position(|&v| v != 1.0) {
        return Err(Error::Precondition(format!(
            "greedy_unit requires unit values, got {} at index {i}",
            inst.value(i)
        )));
    }
    let mut order: Vec<usize> = (0..inst.len()).collect();
    order.sort_by(|&a, &b| {
        inst.interval(a)
            .finish()
            .total_cmp(&inst.interval(b).finish())
            .then(a.cmp(&b))
    });

    let mut selected = Vec::new();
    let mut frontier = f64::NEG_INFINITY;
    for &i in &order {
        if inst.interval(i).start() >= frontier {
            selected.push(i);
            frontier = inst.interval(i).finish();
        }
    }
    selected.sort_unstable();
    let value = selected.len() as f64;
    Ok(Solution { selected, value })
}

/// Exhaustive oracle: enumerates all `2^n` subsets (`n <= BRUTE_FORCE_MAX`)
/// and returns the optimum, breaking value ties toward the
/// lexicographically least ascending index sequence.
pub fn brute_force(inst: &IntervalInstance) -> Result<Solution, Error> {
    let n = inst.len();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::Capacity(format!(
            "brute force enumerates 2^n subsets; n = {n} exceeds the limit of {BRUTE_FORCE_MAX}"
        )));
    }

    // conflicts[i] has bit j set iff components i and j overlap.
    let mut conflicts = vec![0u32; n];
    for (i, conflict) in conflicts.iter_mut().enumerate() {
        for j in 0..n {
            if i != j && inst.interval(i).overlaps(&inst.interval(j)) {
                *conflict |= 1 << j;
            }
        }
    }

    let mut best: Vec<usize> = Vec::new();
    let mut best_value = 0.0f64;
    'masks: for mask in 1u32..(1u32 << n) {
        let mut value = 0.0f64;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            if conflicts[i] & mask != 0 {
                continue 'masks;
            }
            value += inst.value(i); // ascending index order
            bits &= bits - 1;
        }
        if value > best_value || (value == best_value && lex_less(mask, &best)) {
            best_value = value;
            best = indices_of(mask);
        }
    }
    Ok(Solution {
        selected: best,
        value: best_value,
    })
}

fn indices_of(mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut bits = mask;
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}

/// Is the index sequence of `mask` lexicographically less than `best`?
fn lex_less(mask: u32, best: &[usize]) -> bool {
    indices_of(mask).as_slice() < best
}
