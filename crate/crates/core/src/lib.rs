//! Exact combinatorial optimization on three classic problems — weighted
//! interval scheduling, 0/1 knapsack, and single-source shortest paths —
//! each solved three ways:
//!
//! * a dynamic program over a small space of subproblems,
//! * a greedy algorithm that is valid on a restricted input class
//!   (unit values, or nonnegative edge lengths) and is checked against
//!   the dynamic program,
//! * a brute-force oracle used to validate both.
//!
//! The [`subproblems`] module additionally instruments a memoized
//! interval-scheduling recursion so the number of distinct subproblems
//! reached under different component orderings can be measured: a bad
//! order visits exponentially many sets, sorting by start time collapses
//! them to suffixes, and sorting by finish time yields a quadratic family.
//!
//! Instance types, text formats, and generators (including the two
//! adversarial families `fig1` and `fig2`) live in [`instances`].

pub mod instances;
pub mod interval;
pub mod knapsack;
pub mod select;
pub mod shortest_paths;
pub mod subproblems;

pub use instances::{Digraph, Edge, Interval, IntervalInstance, KnapsackInstance, ParseError};

use std::fmt;

/// Errors reported by solvers and generators.
///
/// `Precondition` means the input is outside an algorithm's contract
/// (e.g. a negative edge length passed to Dijkstra, or non-unit values
/// passed to a unit-value greedy). `Capacity` means the input is valid
/// but too large for the chosen method (e.g. brute force beyond its
/// enumeration limit, or a knapsack table that would exceed the cell cap).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Precondition(String),
    Capacity(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::Capacity(what) => write!(f, "capacity exceeded: {what}"),
        }
    }
}

impl std::error::Error for Error {}
