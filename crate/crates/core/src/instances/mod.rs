//! Problem instances: core types and their invariants, plain-text formats,
//! and deterministic generators (seeded random families plus the two
//! adversarial interval families `fig1` and `fig2`).

mod format;
mod generate;

pub use format::{
    parse_graph, parse_is, parse_ks, serialize_graph, serialize_is, serialize_ks, ParseError,
};
pub use generate::{gen_fig1, gen_fig2, gen_random_graph, gen_random_is, gen_random_ks};

use crate::Error;

/// A half-open interval `[start, finish)` on the real line, with
/// `start < finish` (intervals are nonempty).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    start: f64,
    finish: f64,
}

impl Interval {
    /// Creates `[start, finish)`. Both endpoints must be finite and
    /// `start < finish`.
    pub fn new(start: f64, finish: f64) -> Result<Self, Error> {
        if !start.is_finite() || !finish.is_finite() {
            return Err(Error::Precondition(format!(
                "interval endpoints must be finite, got [{start}, {finish})"
            )));
        }
        if start >= finish {
            return Err(Error::Precondition(format!(
                "interval must be nonempty, got [{start}, {finish})"
            )));
        }
        Ok(Interval { start, finish })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn finish(&self) -> f64 {
        self.finish
    }

    /// Whether two half-open intervals intersect:
    /// `[a, b)` and `[c, d)` overlap iff `a < d` and `c < b`.
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.start < other.finish && other.start < self.finish
    }
}

/// A weighted interval scheduling instance: `n` intervals with one
/// nonnegative value per interval. Components are identified by their
/// 0-based position in the input sequence throughout the crate.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalInstance {
    intervals: Vec<Interval>,
    values: Vec<f64>,
}

impl IntervalInstance {
    /// Builds an instance from parallel sequences of intervals and values.
    /// Values must be finite and nonnegative, one per interval.
    pub fn new(intervals: Vec<Interval>, values: Vec<f64>) -> Result<Self, Error> {
        if intervals.len() != values.len() {
            return Err(Error::Precondition(format!(
                "{} intervals but {} values",
                intervals.len(),
                values.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Precondition(format!(
                    "value at index {i} must be finite and nonnegative, got {v}"
                )));
            }
        }
        Ok(IntervalInstance { intervals, values })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn interval(&self, i: usize) -> Interval {
        self.intervals[i]
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    /// True iff every value is exactly 1, the input class on which the
    /// earliest-finish greedy is exact.
    pub fn has_unit_values(&self) -> bool {
        self.values.iter().all(|&v| v == 1.0)
    }
}

/// A 0/1 knapsack instance: integer weights, nonnegative real values,
/// and an integer weight capacity.
#[derive(Debug, Clone, PartialEq)]
pub struct KnapsackInstance {
    weights: Vec<u64>,
    values: Vec<f64>,
    capacity: u64,
}

impl KnapsackInstance {
    /// Builds an instance from parallel weight/value sequences and a capacity.
    /// Values must be finite and nonnegative.
    pub fn new(weights: Vec<u64>, values: Vec<f64>, capacity: u64) -> Result<Self, Error> {
        if weights.len() != values.len() {
            return Err(Error::Precondition(format!(
                "{} weights but {} values",
                weights.len(),
                values.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Precondition(format!(
                    "value at index {i} must be finite and nonnegative, got {v}"
                )));
            }
        }
        Ok(KnapsackInstance {
            weights,
            values,
            capacity,
        })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    /// True iff every value is exactly 1, the input class on which the
    /// lightest-first greedy is exact.
    pub fn has_unit_values(&self) -> bool {
        self.values.iter().all(|&v| v == 1.0)
    }
}

/// A directed edge with a finite real length (which may be negative).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub length: f64,
}

/// A directed multigraph on vertices `0..vertex_count` with a designated
/// source vertex. Parallel edges and self-loops are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct Digraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    source: usize,
}

impl Digraph {
    /// Builds a graph, checking that endpoints and the source are in range
    /// and that all edge lengths are finite.
    pub fn new(vertex_count: usize, edges: Vec<Edge>, source: usize) -> Result<Self, Error> {
        if vertex_count == 0 {
            return Err(Error::Precondition(
                "graph must have at least one vertex".to_string(),
            ));
        }
        if source >= vertex_count {
            return Err(Error::Precondition(format!(
                "source {source} out of range for {vertex_count} vertices"
            )));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.tail >= vertex_count || e.head >= vertex_count {
                return Err(Error::Precondition(format!(
                    "edge {i} ({} -> {}) out of range for {vertex_count} vertices",
                    e.tail, e.head
                )));
            }
            if !e.length.is_finite() {
                return Err(Error::Precondition(format!(
                    "edge {i} ({} -> {}) has non-finite length {}",
                    e.tail, e.head, e.length
                )));
            }
        }
        Ok(Digraph {
            vertex_count,
            edges,
            source,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    /// Out-adjacency lists: for each vertex, the `(head, length)` pairs of
    /// its outgoing edges, in input order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.tail].push((e.head, e.length));
        }
        adj
    }

    pub fn min_edge_length(&self) -> Option<f64> {
        self.edges
            .iter()
            .map(|e| e.length)
            .min_by(|a, b| a.total_cmp(b))
    }
}
