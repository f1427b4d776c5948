//! Deterministic linear-time selection (median of medians).
//!
//! Used by the linear-variant knapsack greedy, which needs worst-case
//! linear selection rather than an expected-time guarantee.

use std::cmp::Ordering;

/// Reorders `xs` so that the element of rank `k` (0-based under `cmp`)
/// ends up at index `k`, with `xs[..k]` ordered at or below it and
/// `xs[k+1..]` at or above it. Worst-case `O(n)` comparisons and swaps,
/// in place.
///
/// # Panics
///
/// Panics if `k >= xs.len()`.
pub fn select_nth_by<T, F>(xs: &mut [T], k: usize, cmp: &F)
where
    F: Fn(&T, &T) -> Ordering,
{
    assert!(
        k < xs.len(),
        "rank {k} out of range for {} elements",
        xs.len()
    );
    let mut lo = 0;
    let mut hi = xs.len();
    loop {
        if hi - lo <= 5 {
            insertion_sort(&mut xs[lo..hi], cmp);
            return;
        }

        // Medians of groups of five, gathered at the front of the window.
        let mut medians = 0;
        let mut g = lo;
        while g < hi {
            let end = (g + 5).min(hi);
            insertion_sort(&mut xs[g..end], cmp);
            xs.swap(lo + medians, g + (end - g) / 2);
            medians += 1;
            g += 5;
        }

        // True median of the medians becomes the pivot.
        select_nth_by(&mut xs[lo..lo + medians], medians / 2, cmp);
        xs.swap(lo, lo + medians / 2);

        // Three-way partition of the window around the pivot at `lo`.
        let (lt, gt) = partition3(xs, lo, hi, cmp);
        if k < lt {
            hi = lt;
        } else if k < gt {
            return; // xs[k] equals the pivot
        } else {
            lo = gt;
        }
    }
}

/// Dutch-flag partition of `xs[lo..hi]` around the pivot at `xs[lo]`.
/// Returns `(lt, gt)` with `xs[lo..lt] < pivot`, `xs[lt..gt] == pivot`,
/// `xs[gt..hi] > pivot` (absolute indices).
fn partition3<T, F>(xs: &mut [T], lo: usize, hi: usize, cmp: &F) -> (usize, usize)
where
    F: Fn(&T, &T) -> Ordering,
{
    let mut lt = lo;
    let mut i = lo + 1;
    let mut gt = hi;
    while i < gt {
        match cmp(&xs[i], &xs[lt]) {
            Ordering::Less => {
                xs.swap(lt, i);
                lt += 1;
                i += 1;
            }
            Ordering::Equal => i += 1,
            Ordering::Greater => {
                gt -= 1;
                xs.swap(i, gt);
            }
        }
    }
    (lt, gt)
}

fn insertion_sort<T, F>(xs: &mut [T], cmp: &F)
where
    F: Fn(&T, &T) -> Ordering,
{
    for i in 1..xs.len() {
        let mut j = i;
        while j > 0 && cmp(&xs[j], &xs[j - 1]) == Ordering::Less {
            xs.swap(j, j - 1);
            j -= 1;
        }
    }
}
