//! 0/1 knapsack.
//!
//! The dynamic program fills the full `(n+1) x (W+1)` table of suffix
//! optima: `get(i, w)` is the best value using items `i..n` within weight
//! budget `w`, with row `n` identically zero. The table is kept whole (no
//! row rolling) because retrieval walks arbitrary rows. Being
//! pseudo-polynomial, construction is guarded by a cell cap so blowups
//! fail loudly instead of thrashing.
//!
//! On unit-value instances the optimum is simply "as many items as fit",
//! served by two greedy variants: [`greedy_unit`] sorts lightest-first and
//! takes the longest affordable prefix; [`greedy_unit_linear`] finds the
//! same prefix length without sorting, by binary search on the prefix
//! length where each probe is evaluated with linear-time selection —
//! the probed ranges halve, so the total work is linear.

use crate::instances::KnapsackInstance;
use crate::select::select_nth_by;
use crate::Error;

/// Largest item count [`brute_force`] will enumerate (`2^n` subsets).
pub const BRUTE_FORCE_MAX: usize = 24;

/// Default cap on `(n+1) * (W+1)` table cells.
pub const DEFAULT_CELL_CAP: u64 = 100_000_000;

/// The filled `(n+1) x (W+1)` table of suffix optima.
#[derive(Debug, Clone)]
pub struct DpTable {
    width: usize, // W + 1
    capacity: u64,
    cells: Vec<f64>,
}

impl DpTable {
    /// `get(i, w)`: optimal value over items `i..n` with budget `w`,
    /// for `i <= n` and `w <= W`.
    pub fn get(&self, i: usize, w: u64) -> f64 {
        self.cells[i * self.width + w as usize]
    }

    /// Optimal value for the whole instance: `get(0, W)`.
    pub fn optimum(&self) -> f64 {
        self.get(0, self.capacity)
    }

    /// Number of rows, `n + 1`.
    pub fn rows(&self) -> usize {
        self.cells.len() / self.width
    }

    /// Number of columns, `W + 1`.
    pub fn width(&self) -> usize {
        self.width
    }
}

/// Fills the table bottom-up with the default cell cap.
pub fn dp_table(inst: &KnapsackInstance) -> Result<DpTable, Error> {
    dp_table_with_cap(inst, DEFAULT_CELL_CAP)
}

/// Fills the table bottom-up: row `i` takes the better of skipping item
/// `i` (row `i+1`, same budget) and, when `w_i <= w`, taking it
/// (`v_i` plus row `i+1` at budget `w - w_i`).
pub fn dp_table_with_cap(inst: &KnapsackInstance, cell_cap: u64) -> Result<DpTable, Error> {
    let n = inst.len();
    let rows = n as u128 + 1;
    let width = inst.capacity() as u128 + 1;
    if rows * width > cell_cap as u128 {
        return Err(Error::Capacity(format!(
            "knapsack table needs {rows} x {width} cells, over the cap of {cell_cap}; \
             the table is pseudo-polynomial in W"
        )));
    }
    let width = width as usize;
    let mut cells = vec![0.0f64; rows as usize * width];
    for i in (0..n).rev() {
        let w_i = inst.weight(i);
        let v_i = inst.value(i);
        let (above, row) = cells[i * width..(i + 2) * width].split_at_mut(width);
        // `above` is row i being written, `row` is the finished row i+1.
        for w in 0..width {
            let skip = row[w];
            above[w] = if (w as u64) >= w_i {
                skip.max(v_i + row[w - w_i as usize])
            } else {
                skip
            };
        }
    }
    Ok(DpTable {
        width,
        capacity: inst.capacity(),
        cells,
    })
}

/// A feasible item selection: ascending 0-based indices, their total
/// weight (at most `W`), and total value (summed in ascending index
/// order — the canonical accumulation order all solvers here share).
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub selected: Vec<usize>,
    pub total_weight: u64,
    pub total_value: f64,
}

impl Solution {
    /// Checks feasibility against the instance: indices strictly
    /// increasing and in range, weight within capacity, and both totals
    /// consistent with the selection.
    pub fn validate(&self, inst: &KnapsackInstance) -> Result<(), String> {
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
        let weight: u128 = self.selected.iter().map(|&i| inst.weight(i) as u128).sum();
        if weight > inst.capacity() as u128 {
            return Err(format!(
                "selection weighs {weight}, over capacity {}",
                inst.capacity()
            ));
        }
        if weight != self.total_weight as u128 {
            return Err(format!(
                "total_weight {} != sum of selected weights {weight}",
                self.total_weight
            ));
        }
        let value: f64 = self.selected.iter().map(|&i| inst.value(i)).sum();
        if value != self.total_value {
            return Err(format!(
                "total_value {} != sum of selected values {value}",
                self.total_value
            ));
        }
        Ok(())
    }
}

fn solution_from(inst: &KnapsackInstance, mut selected: Vec<usize>) -> Solution {
    selected.sort_unstable();
    let total_weight: u64 = selected.iter().map(|&i| inst.weight(i)).sum();
    let total_value: f64 = selected.iter().map(|&i| inst.value(i)).sum();
    Solution {
        selected,
        total_weight,
        total_value,
    }
}

/// Walks a filled table and extracts one optimal selection: item `i` is
/// skipped when `get(i, w) == get(i+1, w)` (exclusion wins ties),
/// otherwise taken, spending `w_i` of the remaining budget.
pub fn dp_retrieve(inst: &KnapsackInstance, table: &DpTable) -> Solution {
    let mut selected = Vec::new();
    let mut w = inst.capacity();
    for i in 0..inst.len() {
        if table.get(i, w) != table.get(i + 1, w) {
            // get(i, w) was max(skip, take) and differs from skip, so the
            // take branch was strictly better; it also implies w_i <= w.
            selected.push(i);
            w -= inst.weight(i);
        }
    }
    solution_from(inst, selected)
}

fn require_unit_values(inst: &KnapsackInstance, who: &str) -> Result<(), Error> {
    if let Some(i) = inst.values().iter().position(|&v| v != 1.0) {
        return Err(Error::Precondition(format!(
            "{who} requires unit values, got {} at index {i}",
            inst.value(i)
        )));
    }
    Ok(())
}

/// Lightest-first greedy for unit-value instances: sort by weight (ties
/// by index) and take the longest prefix whose running weight fits.
pub fn greedy_unit(inst: &KnapsackInstance) -> Result<Solution, Error> {
    require_unit_values(inst, "greedy_unit")?;
    let mut order: Vec<usize> = (0..inst.len()).collect();
    order.sort_by(|&a, &b| inst.weight(a).cmp(&inst.weight(b)).then(a.cmp(&b)));

    let mut selected = Vec::new();
    let mut running: u128 = 0;
    for &i in &order {
        running += inst.weight(i) as u128;
        if running > inst.capacity() as u128 {
            break;
        }
        selected.push(i);
    }
    Ok(solution_from(inst, selected))
}

/// Sort-free variant of [`greedy_unit`]: computes the same prefix length
/// `k` (maximum number of lightest items that fit) by binary search on
/// `k`, evaluating each probe with worst-case linear selection. Each
/// probe halves the range still in play, so the whole computation is
/// `O(n)`. The witness is the set of `k` lightest items (ties by index),
/// identical in size to the sort-based greedy's.
pub fn greedy_unit_linear(inst: &KnapsackInstance) -> Result<Solution, Error> {
    require_unit_values(inst, "greedy_unit_linear")?;
    let mut idx: Vec<usize> = (0..inst.len()).collect();
    let mut selected = Vec::new();
    lightest_prefix(inst, &mut idx, inst.capacity() as u128, &mut selected);
    Ok(solution_from(inst, selected))
}

/// Extends `out` with the largest rank-prefix of `idx` (ordered by
/// weight, ties by index) whose total weight is at most `budget`.
fn lightest_prefix(
    inst: &KnapsackInstance,
    idx: &mut [usize],
    budget: u128,
    out: &mut Vec<usize>,
) {
    if idx.is_empty() {
        return;
    }
    if idx.len() == 1 {
        if inst.weight(idx[0]) as u128 <= budget {
            out.push(idx[0]);
        }
        return;
    }
    // Probe the median rank: either its whole left half fits (binary
    // search continues right with the leftover budget) or the answer
    // lies inside the left half.
    let cmp = |a: &usize, b: &usize| inst.weight(*a).cmp(&inst.weight(*b)).then(a.cmp(b));
    let r = (idx.len() - 1) / 2;
    select_nth_by(idx, r, &cmp);
    let left_sum: u128 = idx[..=r].iter().map(|&i| inst.weight(i) as u128).sum();
    if left_sum <= budget {
        out.extend_from_slice(&idx[..=r]);
        lightest_prefix(inst, &mut idx[r + 1..], budget - left_sum, out);
    } else {
        lightest_prefix(inst, &mut idx[..=r], budget, out);
    }
}

/// Exhaustive oracle: enumerates all `2^n` subsets (`n <= BRUTE_FORCE_MAX`)
/// and returns the optimum, breaking value ties toward the
/// lexicographically least ascending index sequence.
pub fn brute_force(inst: &KnapsackInstance) -> Result<Solution, Error> {
    let n = inst.len();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::Capacity(format!(
            "brute force enumerates 2^n subsets; n = {n} exceeds the limit of {BRUTE_FORCE_MAX}"
        )));
    }
    let capacity = inst.capacity() as u128;
    let mut best: Vec<usize> = Vec::new();
    let mut best_value = 0.0f64;
    'masks: for mask in 1u32..(1u32 << n) {
        let mut weight: u128 = 0;
        let mut value = 0.0f64;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            weight += inst.weight(i) as u128;
            if weight > capacity {
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
    Ok(solution_from(inst, best))
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

fn lex_less(mask: u32, best: &[usize]) -> bool {
    indices_of(mask).as_slice() < best
}
