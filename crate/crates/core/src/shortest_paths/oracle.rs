//! Exhaustive shortest-path reference for tiny graphs.
//!
//! Enumerates every simple path from the source (any walk prefix-trims
//! to one, and cycles that can't pay for themselves only hurt) and every
//! simple cycle, so the result is trustworthy for every edge-length sign
//! pattern: a vertex is `-inf` exactly when some negative simple cycle
//! sits on a walk from the source to it, `+inf` exactly when no walk
//! reaches it, and otherwise its best simple-path length. Exponential by
//! nature, hence hard-capped at [`ORACLE_MAX_VERTICES`] vertices.

use super::ExtLength;
use crate::instances::Digraph;
use crate::Error;

/// Largest vertex count [`oracle_distances`] accepts.
pub const ORACLE_MAX_VERTICES: usize = 10;

/// Reference distances from the graph's source to every vertex
/// (`n <= ORACLE_MAX_VERTICES`).
pub fn oracle_distances(graph: &Digraph) -> Result<Vec<ExtLength>, Error> {
    let n = graph.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "the exhaustive oracle enumerates simple paths; n = {n} exceeds \
             the limit of {ORACLE_MAX_VERTICES}"
        )));
    }
    let s = graph.source();

    // Parallel edges collapse to their minimum length: shortest walks
    // never use the others, and a negative cycle through heavier copies
    // forces one through the light copies too.
    let mut min_len = vec![vec![f64::INFINITY; n]; n];
    for e in graph.edges() {
        if e.length < min_len[e.tail][e.head] {
            min_len[e.tail][e.head] = e.length;
        }
    }
    let adjacency: Vec<Vec<(usize, f64)>> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| min_len[u][v].is_finite())
                .map(|v| (v, min_len[u][v]))
                .collect()
        })
        .collect();

    let mut best = vec![f64::INFINITY; n];
    best[s] = 0.0;
    enumerate_paths(&adjacency, s, 0.0, 1u32 << s, &mut best);

    let mut on_negative_cycle = vec![false; n];
    let mut stack = Vec::with_capacity(n);
    for start in 0..n {
        stack.push(start);
        enumerate_cycles(
            &adjacency,
            start,
            start,
            0.0,
            1u32 << start,
            &mut stack,
            &mut on_negative_cycle,
        );
        stack.pop();
    }

    let reach_source = reachable(&adjacency, n, &[s]);
    let seeds: Vec<usize> = (0..n)
        .filter(|&v| on_negative_cycle[v] && reach_source[v])
        .collect();
    let dragged_down = reachable(&adjacency, n, &seeds);

    Ok((0..n)
        .map(|t| {
            if dragged_down[t] {
                ExtLength::NegInfinite
            } else if !reach_source[t] {
                ExtLength::PosInfinite
            } else {
                debug_assert!(best[t].is_finite());
                ExtLength::Finite(best[t])
            }
        })
        .collect())
}

/// Walks every simple path extending the current one, recording the best
/// arrival length at each vertex. Worse prefixes still recurse: a costly
/// detour can open the only route somewhere.
fn enumerate_paths(
    adjacency: &[Vec<(usize, f64)>],
    u: usize,
    length: f64,
    visited: u32,
    best: &mut [f64],
) {
    for &(v, len) in &adjacency[u] {
        if visited & (1 << v) != 0 {
            continue;
        }
        let arrival = length + len;
        if arrival < best[v] {
            best[v] = arrival;
        }
        enumerate_paths(adjacency, v, arrival, visited | (1 << v), best);
    }
}

/// Enumerates each simple cycle once, from its minimum vertex: paths may
/// only pass through vertices above `start`, and an edge back to `start`
/// closes a cycle. Negative ones mark everything on the current stack.
fn enumerate_cycles(
    adjacency: &[Vec<(usize, f64)>],
    start: usize,
    u: usize,
    length: f64,
    visited: u32,
    stack: &mut Vec<usize>,
    marked: &mut [bool],
) {
    for &(v, len) in &adjacency[u] {
        if v == start {
            if length + len < 0.0 {
                for &w in stack.iter() {
                    marked[w] = true;
                }
            }
        } else if v > start && visited & (1 << v) == 0 {
            stack.push(v);
            enumerate_cycles(
                adjacency,
                start,
                v,
                length + len,
                visited | (1 << v),
                stack,
                marked,
            );
            stack.pop();
        }
    }
}

fn reachable(adjacency: &[Vec<(usize, f64)>], n: usize, seeds: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue: Vec<usize> = Vec::new();
    for &v in seeds {
        if !seen[v] {
            seen[v] = true;
            queue.push(v);
        }
    }
    while let Some(u) = queue.pop() {
        for &(v, _) in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push(v);
            }
        }
    }
    seen
}
