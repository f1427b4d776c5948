//! Single-source shortest paths on directed graphs.
//!
//! Distances live in [`ExtLength`], the reals extended with `+inf`
//! (unreachable) and `-inf` (walks of arbitrarily small total length
//! exist, i.e. a negative cycle lies between the source and the target).
//! [`bellman_ford`] handles arbitrary edge lengths and classifies every
//! vertex into one of the three regimes; [`dijkstra`] requires
//! nonnegative lengths and reports operation counts alongside the tree;
//! [`oracle_distances`] is an exhaustive reference for tiny graphs.
//!
//! Both solvers produce a [`ShortestPathTree`]: per-vertex distances
//! plus a predecessor function defined exactly on the finite-distance
//! vertices other than the source, under which predecessor chains walk
//! back to the source along tight edges.

mod heap;
mod oracle;

pub use oracle::{oracle_distances, ORACLE_MAX_VERTICES};

use crate::instances::Digraph;
use crate::Error;
use heap::IndexedMinHeap;
use std::cmp::Ordering;
use std::fmt;

/// A path length in the extended reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtLength {
    /// Arbitrarily light walks exist; no shortest path.
    NegInfinite,
    /// An ordinary shortest-path distance.
    Finite(f64),
    /// No walk at all reaches the vertex.
    PosInfinite,
}

impl ExtLength {
    /// Total order: `-inf < finite (by value) < +inf`.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        use ExtLength::*;
        match (self, other) {
            (NegInfinite, NegInfinite) | (PosInfinite, PosInfinite) => Ordering::Equal,
            (NegInfinite, _) | (_, PosInfinite) => Ordering::Less,
            (_, NegInfinite) | (PosInfinite, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.total_cmp(b),
        }
    }

    /// The finite value, if any.
    pub fn as_finite(&self) -> Option<f64> {
        match self {
            ExtLength::Finite(d) => Some(*d),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtLength::Finite(_))
    }

    /// Adds a finite edge length; both infinities absorb it.
    pub fn add_finite(self, len: f64) -> Self {
        debug_assert!(len.is_finite());
        match self {
            ExtLength::Finite(d) => ExtLength::Finite(d + len),
            other => other,
        }
    }
}

impl PartialOrd for ExtLength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.total_cmp(other))
    }
}

impl fmt::Display for ExtLength {
    /// `-inf`, `inf`, or the plain decimal of the finite value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtLength::NegInfinite => f.write_str("-inf"),
            ExtLength::Finite(d) => write!(f, "{d}"),
            ExtLength::PosInfinite => f.write_str("inf"),
        }
    }
}

/// Distances from a fixed source plus the tight-edge predecessor
/// function over finite-distance vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPathTree {
    source: usize,
    dist: Vec<ExtLength>,
    pred: Vec<Option<usize>>,
}

impl ShortestPathTree {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    /// Distance from the source to `t` (`t < n`).
    pub fn dist(&self, t: usize) -> ExtLength {
        self.dist[t]
    }

    /// Predecessor of `t` on a shortest path, defined exactly when
    /// `dist(t)` is finite and `t` is not the source.
    pub fn pred(&self, t: usize) -> Option<usize> {
        self.pred[t]
    }

    pub fn dists(&self) -> &[ExtLength] {
        &self.dist
    }

    /// Checks the tree's internal invariants against the graph it was
    /// computed from: predecessors defined exactly on finite non-source
    /// vertices, each predecessor edge present and tight, and every
    /// predecessor chain reaching the source within `n` steps.
    pub fn validate(&self, graph: &Digraph) -> Result<(), String> {
        let n = graph.vertex_count();
        if self.dist.len() != n || self.pred.len() != n {
            return Err("tree size does not match the graph".into());
        }
        if self.source != graph.source() {
            return Err("tree source does not match the graph".into());
        }
        match self.dist[self.source] {
            ExtLength::Finite(d) => {
                if d != 0.0 {
                    return Err(format!("source distance is {d}"));
                }
            }
            ExtLength::NegInfinite => {}
            other => return Err(format!("source distance is {other}")),
        }
        for t in 0..n {
            let want_pred = self.dist[t].is_finite() && t != self.source;
            if self.pred[t].is_some() != want_pred {
                return Err(format!(
                    "vertex {t}: pred {:?} inconsistent with distance {}",
                    self.pred[t], self.dist[t]
                ));
            }
            if let Some(u) = self.pred[t] {
                let du = match self.dist[u].as_finite() {
                    Some(d) => d,
                    None => return Err(format!("pred {u} of {t} has non-finite distance")),
                };
                let dt = self.dist[t].as_finite().unwrap();
                let tight = graph
                    .edges()
                    .iter()
                    .any(|e| e.tail == u && e.head == t && du + e.length == dt);
                if !tight {
                    return Err(format!("no tight edge {u} -> {t} for distance {dt}"));
                }
            }
        }
        // Every finite vertex must walk back to the source acyclically.
        for t in 0..n {
            if !self.dist[t].is_finite() {
                continue;
            }
            let mut cur = t;
            let mut steps = 0;
            while cur != self.source {
                cur = match self.pred[cur] {
                    Some(u) => u,
                    None => return Err(format!("pred chain from {t} dies at {cur}")),
                };
                steps += 1;
                if steps > n {
                    return Err(format!("pred chain from {t} does not terminate"));
                }
            }
        }
        Ok(())
    }
}

/// Shortest paths with arbitrary edge lengths.
///
/// Runs `n - 1` rounds of relaxing every edge (stopping early once a
/// round changes nothing), then one detection round: any edge that could
/// still improve marks its head, and everything forward-reachable from a
/// marked vertex has walks of unbounded negative length, so its distance
/// is `-inf`. Vertices no walk reaches stay at `+inf`.
pub fn bellman_ford(graph: &Digraph) -> ShortestPathTree {
    let n = graph.vertex_count();
    let s = graph.source();
    let mut dist = vec![ExtLength::PosInfinite; n];
    let mut pred = vec![None; n];
    dist[s] = ExtLength::Finite(0.0);

    for _ in 1..n {
        let mut changed = false;
        for e in graph.edges() {
            if let ExtLength::Finite(du) = dist[e.tail] {
                let cand = ExtLength::Finite(du + e.length);
                if cand.total_cmp(&dist[e.head]).is_lt() {
                    dist[e.head] = cand;
                    pred[e.head] = Some(e.tail);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    // Detection round: a still-improvable head lies on or behind a
    // negative cycle, and so does everything it can reach.
    let mut negative = vec![false; n];
    let mut queue: Vec<usize> = Vec::new();
    for e in graph.edges() {
        if let ExtLength::Finite(du) = dist[e.tail] {
            if ExtLength::Finite(du + e.length).total_cmp(&dist[e.head]).is_lt()
                && !negative[e.head]
            {
                negative[e.head] = true;
                queue.push(e.head);
            }
        }
    }
    let adjacency = graph.adjacency();
    while let Some(u) = queue.pop() {
        for &(v, _) in &adjacency[u] {
            if !negative[v] {
                negative[v] = true;
                queue.push(v);
            }
        }
    }
    for v in 0..n {
        if negative[v] {
            dist[v] = ExtLength::NegInfinite;
        }
        if !dist[v].is_finite() || v == s {
            pred[v] = None;
        }
    }

    ShortestPathTree { source: s, dist, pred }
}

/// Operation counts from one [`dijkstra`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DijkstraStats {
    /// Vertices removed from the heap with a finite key.
    pub extractions: usize,
    /// Out-edges scanned from extracted vertices (finalized heads
    /// included).
    pub relaxations: usize,
    /// Strict key improvements applied to the heap.
    pub key_decreases: usize,
}

/// Shortest paths with nonnegative edge lengths, with operation counts.
///
/// All vertices start in the heap at key `+inf` (the source at `0`);
/// extraction order finalizes distances in non-decreasing order. The run
/// stops once the minimum remaining key is `+inf` — those vertices are
/// unreachable. Negative edges are rejected up front.
pub fn dijkstra(graph: &Digraph) -> Result<(ShortestPathTree, DijkstraStats), Error> {
    let (tree, stats, _) = dijkstra_traced(graph)?;
    Ok((tree, stats))
}

/// Each extracted vertex with the key it was extracted at, in extraction
/// order.
pub type FinalizationTrace = Vec<(usize, f64)>;

/// [`dijkstra`] plus the finalization trace.
pub fn dijkstra_traced(
    graph: &Digraph,
) -> Result<(ShortestPathTree, DijkstraStats, FinalizationTrace), Error> {
    if let Some(i) = graph.edges().iter().position(|e| e.length < 0.0) {
        let e = &graph.edges()[i];
        return Err(Error::Precondition(format!(
            "dijkstra requires nonnegative lengths; edge {i} ({} -> {}) has length {}",
            e.tail, e.head, e.length
        )));
    }
    let n = graph.vertex_count();
    let s = graph.source();
    let adjacency = graph.adjacency();

    let mut heap = IndexedMinHeap::new(n);
    heap.decrease_key(s, 0.0);
    let mut dist = vec![ExtLength::PosInfinite; n];
    let mut pred = vec![None; n];
    let mut stats = DijkstraStats {
        extractions: 0,
        relaxations: 0,
        key_decreases: 0,
    };
    let mut trace = Vec::new();

    while let Some((_, key)) = heap.peek_min() {
        if key == f64::INFINITY {
            break; // everything left is unreachable
        }
        let (u, key) = heap.pop_min().unwrap();
        stats.extractions += 1;
        trace.push((u, key));
        dist[u] = ExtLength::Finite(key);
        for &(v, len) in &adjacency[u] {
            stats.relaxations += 1;
            if heap.contains(v) {
                let cand = key + len;
                if cand.total_cmp(&heap.key(v)).is_lt() {
                    heap.decrease_key(v, cand);
                    pred[v] = Some(u);
                    stats.key_decreases += 1;
                }
            }
        }
    }
    pred[s] = None;

    Ok((ShortestPathTree { source: s, dist, pred }, stats, trace))
}

/// Why [`retrieve_path`] could not produce a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathError {
    /// Distance is `+inf`: no walk reaches the vertex.
    Unreachable(usize),
    /// Distance is `-inf`: walks exist but none is shortest.
    NoShortestPath(usize),
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::Unreachable(t) => {
                write!(f, "vertex {t} is unreachable from the source (distance inf)")
            }
            PathError::NoShortestPath(t) => write!(
                f,
                "vertex {t} has no shortest path (distance -inf: arbitrarily light walks exist)"
            ),
        }
    }
}

impl std::error::Error for PathError {}

/// Reads one shortest path `source .. t` out of a tree by following
/// predecessors (`t < n`). Fails with the reason when `dist(t)` is not
/// finite, distinguishing the two infinite regimes.
pub fn retrieve_path(tree: &ShortestPathTree, t: usize) -> Result<Vec<usize>, PathError> {
    match tree.dist(t) {
        ExtLength::PosInfinite => return Err(PathError::Unreachable(t)),
        ExtLength::NegInfinite => return Err(PathError::NoShortestPath(t)),
        ExtLength::Finite(_) => {}
    }
    let mut path = vec![t];
    let mut cur = t;
    while cur != tree.source() {
        cur = tree.pred(cur).expect("finite vertex with no predecessor");
        path.push(cur);
    }
    path.reverse();
    Ok(path)
}
