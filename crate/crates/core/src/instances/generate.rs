//! Instance generators.
//!
//! The random generators are deterministic in their seed (ChaCha-based),
//! so every test that consumes them is reproducible. Random reals are
//! drawn on a dyadic grid (halves for times, quarters for values) so that
//! sums of values are exact in `f64` and solvers can be compared with
//! exact equality.
//!
//! `fig1` and `fig2` are the two named adversarial interval families used
//! by the subproblem-counting experiments; see their docs for structure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Digraph, Edge, Interval, IntervalInstance, KnapsackInstance};

/// The `fig1` family: `2m` unit-value intervals in `m` staggered pairs.
///
/// Component `x` (1-based, `x <= m`) is the short interval `[4x, 4x+2)`
/// and component `m+x` is its offset partner `[4x+1, 4x+3)`. Each interval
/// overlaps exactly its partner and nothing else, and the emission order
/// lists all first members before all partners. A memoized recursion that
/// processes components in emission order reaches at least `2^m` distinct
/// subproblems, while processing them sorted by start time collapses the
/// space to at most `n+1` suffixes.
pub fn gen_fig1(m: usize) -> IntervalInstance {
    let mut intervals = Vec::with_capacity(2 * m);
    for x in 1..=m {
        let s = 4.0 * x as f64;
        intervals.push(Interval::new(s, s + 2.0).expect("nonempty by construction"));
    }
    for x in 1..=m {
        let s = 4.0 * x as f64 + 1.0;
        intervals.push(Interval::new(s, s + 2.0).expect("nonempty by construction"));
    }
    IntervalInstance::new(intervals, vec![1.0; 2 * m]).expect("unit values")
}

/// The `fig2` family: `m` short intervals plus `m` long tails, emitted in
/// earliest-finish order.
///
/// Short component `x` (1-based, `x <= m`) is `[3x, 3x+2)`; long component
/// `m+x` is `[3x+1, B+x)` with `B = 3m+3`, so every long interval finishes
/// after every short one and the emission order is exactly earliest-finish.
/// Short `x` overlaps precisely the long intervals `m+1 ..= m+x`, and the
/// longs pairwise overlap. Under the earliest-finish processing order the
/// memoized recursion reaches a quadratic (in `n = 2m`) number of distinct
/// subproblems.
pub fn gen_fig2(m: usize) -> IntervalInstance {
    let b = 3.0 * m as f64 + 3.0;
    let mut intervals = Vec::with_capacity(2 * m);
    for x in 1..=m {
        let s = 3.0 * x as f64;
        intervals.push(Interval::new(s, s + 2.0).expect("nonempty by construction"));
    }
    for x in 1..=m {
        let s = 3.0 * x as f64 + 1.0;
        intervals.push(Interval::new(s, b + x as f64).expect("nonempty by construction"));
    }
    IntervalInstance::new(intervals, vec![1.0; 2 * m]).expect("unit values")
}

/// A seeded random interval instance: starts on the half-integer grid in
/// `[0, 3n]`, lengths in `[0.5, 12]`, and values either all 1
/// (`unit_values`) or on the quarter-integer grid in `[0, 10]`.
pub fn gen_random_is(n: usize, seed: u64, unit_values: bool) -> IntervalInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut intervals = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let start = rng.gen_range(0..=6 * n.max(1) as u64) as f64 / 2.0;
        let len = rng.gen_range(1..=24u64) as f64 / 2.0;
        intervals.push(Interval::new(start, start + len).expect("positive length"));
        values.push(if unit_values {
            1.0
        } else {
            rng.gen_range(0..=40u64) as f64 / 4.0
        });
    }
    IntervalInstance::new(intervals, values).expect("values in range")
}

/// A seeded random knapsack instance: weights uniform in `[0, capacity]`,
/// values either all 1 (`unit_values`) or on the quarter-integer grid in
/// `[0, 10]`.
pub fn gen_random_ks(n: usize, capacity: u64, seed: u64, unit_values: bool) -> KnapsackInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        weights.push(rng.gen_range(0..=capacity));
        values.push(if unit_values {
            1.0
        } else {
            rng.gen_range(0..=40u64) as f64 / 4.0
        });
    }
    KnapsackInstance::new(weights, values, capacity).expect("values in range")
}

/// A seeded random digraph on `n >= 1` vertices with `m` edges, integer
/// lengths uniform in `[min_len, max_len]` (stored as reals, so sums stay
/// exact), uniform endpoints, and source 0. Self-loops and parallel edges
/// may occur.
///
/// # Panics
///
/// Panics if `n == 0` or `min_len > max_len`.
pub fn gen_random_graph(n: usize, m: usize, seed: u64, min_len: i64, max_len: i64) -> Digraph {
    assert!(n >= 1, "graph must have at least one vertex");
    assert!(
        min_len <= max_len,
        "empty length range [{min_len}, {max_len}]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let tail = rng.gen_range(0..n);
        let head = rng.gen_range(0..n);
        let length = rng.gen_range(min_len..=max_len) as f64;
        edges.push(Edge { tail, head, length });
    }
    Digraph::new(n, edges, 0).expect("endpoints in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_small_coordinates() {
        let inst = gen_fig1(2);
        let coords: Vec<(f64, f64)> = inst
            .intervals()
            .iter()
            .map(|iv| (iv.start(), iv.finish()))
            .collect();
        assert_eq!(
            coords,
            vec![(4.0, 6.0), (8.0, 10.0), (5.0, 7.0), (9.0, 11.0)]
        );
        assert!(inst.has_unit_values());
        assert!(gen_fig1(0).is_empty());
    }

    #[test]
    fn fig1_overlap_structure_is_partner_pairs_only() {
        // Checked by direct enumeration of the overlap predicate: component
        // x overlaps exactly its partner m+x, and nothing else (besides
        // itself — every nonempty interval overlaps itself).
        for m in 1..=6 {
            let inst = gen_fig1(m);
            for i in 0..2 * m {
                for j in 0..2 * m {
                    let expected = i == j || i + m == j || j + m == i;
                    assert_eq!(
                        inst.interval(i).overlaps(&inst.interval(j)),
                        expected,
                        "m={m} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn fig1_start_order_interleaves_pairs() {
        for m in 1..=10 {
            let inst = gen_fig1(m);
            let mut idx: Vec<usize> = (0..2 * m).collect();
            idx.sort_by(|&a, &b| {
                inst.interval(a)
                    .start()
                    .total_cmp(&inst.interval(b).start())
            });
            let expected: Vec<usize> = (0..m).flat_map(|x| [x, m + x]).collect();
            assert_eq!(idx, expected, "m={m}");
        }
    }

    #[test]
    fn fig2_small_coordinates() {
        let inst = gen_fig2(2);
        let coords: Vec<(f64, f64)> = inst
            .intervals()
            .iter()
            .map(|iv| (iv.start(), iv.finish()))
            .collect();
        assert_eq!(
            coords,
            vec![(3.0, 5.0), (6.0, 8.0), (4.0, 10.0), (7.0, 11.0)]
        );
    }

    #[test]
    fn fig2_emission_order_is_earliest_finish() {
        for m in 1..=8 {
            let inst = gen_fig2(m);
            let finishes: Vec<f64> = inst.intervals().iter().map(|iv| iv.finish()).collect();
            for w in finishes.windows(2) {
                assert!(w[0] < w[1], "m={m}: finishes must strictly increase");
            }
        }
    }

    #[test]
    fn fig2_short_x_overlaps_exactly_first_x_longs() {
        for m in 1..=6 {
            let inst = gen_fig2(m);
            // 0-based: shorts are 0..m (short x = index x-1), longs are m..2m.
            for s in 0..m {
                for l in 0..m {
                    let expected = l <= s;
                    assert_eq!(
                        inst.interval(s).overlaps(&inst.interval(m + l)),
                        expected,
                        "m={m} short={s} long={l}"
                    );
                }
                // Shorts are pairwise disjoint.
                for t in 0..m {
                    assert_eq!(inst.interval(s).overlaps(&inst.interval(t)), s == t);
                }
            }
            // Longs pairwise overlap.
            for a in m..2 * m {
                for b in m..2 * m {
                    assert!(inst.interval(a).overlaps(&inst.interval(b)));
                }
            }
        }
    }

    #[test]
    fn fig2_surviving_components_form_the_expected_subsets() {
        // After selecting short l (1-based) and moving to suffix start i
        // (1-based, l < i <= m), the components at or after i whose start
        // clears f_l are exactly the shorts i..=m plus the longs with
        // 1-based index > l. This is the structure that forces a quadratic
        // number of distinct subproblems under earliest-finish order.
        for m in 1..=8usize {
            let inst = gen_fig2(m);
            for l in 1..=m {
                let f_l = inst.interval(l - 1).finish();
                for i in (l + 1)..=m {
                    let survivors: Vec<usize> = (i - 1..2 * m)
                        .filter(|&j| inst.interval(j).start() >= f_l)
                        .collect();
                    let expected: Vec<usize> =
                        (i - 1..m).chain(m + l..2 * m).collect();
                    assert_eq!(survivors, expected, "m={m} l={l} i={i}");
                }
            }
        }
    }

    #[test]
    fn random_generators_are_seed_deterministic() {
        assert_eq!(gen_random_is(12, 7, false), gen_random_is(12, 7, false));
        assert_ne!(gen_random_is(12, 7, false), gen_random_is(12, 8, false));
        assert_eq!(
            gen_random_ks(9, 40, 3, true),
            gen_random_ks(9, 40, 3, true)
        );
        assert_eq!(
            gen_random_graph(8, 20, 5, -3, 5),
            gen_random_graph(8, 20, 5, -3, 5)
        );
        assert_ne!(
            gen_random_graph(8, 20, 5, -3, 5),
            gen_random_graph(8, 20, 6, -3, 5)
        );
    }

    #[test]
    fn random_instances_respect_their_ranges() {
        let inst = gen_random_is(50, 11, true);
        assert!(inst.has_unit_values());
        for iv in inst.intervals() {
            assert!(iv.start() >= 0.0 && iv.finish() - iv.start() <= 12.0);
        }
        let inst = gen_random_is(50, 11, false);
        for &v in inst.values() {
            assert!((0.0..=10.0).contains(&v));
            assert_eq!(v, (v * 4.0).round() / 4.0, "values sit on the 1/4 grid");
        }

        let ks = gen_random_ks(40, 17, 2, false);
        assert!(ks.weights().iter().all(|&w| w <= 17));

        let g = gen_random_graph(10, 60, 1, -3, 5);
        assert_eq!(g.edge_count(), 60);
        for e in g.edges() {
            assert!((-3.0..=5.0).contains(&e.length));
            assert_eq!(e.length, e.length.round(), "lengths are integers");
        }

        assert!(gen_random_is(0, 0, true).is_empty());
        assert!(gen_random_ks(0, 9, 0, true).is_empty());
        assert_eq!(gen_random_graph(1, 0, 0, 0, 0).vertex_count(), 1);
    }
}
