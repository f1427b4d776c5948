//! Plain-text instance formats.
//!
//! All three formats are line-oriented with `\n` endings and
//! whitespace-separated fields:
//!
//! * intervals — line 1 is `n`, followed by `n` lines `start finish value`;
//! * knapsack — line 1 is `n W`, followed by `n` lines `weight value`;
//! * graph — line 1 is `n m s` (vertex count, edge count, 0-indexed
//!   source), followed by `m` lines `tail head length`.
//!
//! Serializers print reals with Rust's shortest round-tripping decimal
//! representation, so `parse(serialize(x)) == x` exactly, and
//! `serialize(parse(text)) == text` for files in canonical form.

use std::fmt;

use super::{Digraph, Edge, Interval, IntervalInstance, KnapsackInstance};

/// A parse failure, reported with the 1-based line number it occurred on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// The human-readable reason inside a construction error.
fn reason(e: crate::Error) -> String {
    match e {
        crate::Error::Precondition(w) | crate::Error::Capacity(w) => w,
    }
}

/// Line-by-line cursor that tracks 1-based line numbers.
struct Cursor<'a> {
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            lines: text.lines(),
            line_no: 0,
        }
    }

    /// Next line, or an error naming what was expected.
    fn expect_line(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        match self.lines.next() {
            Some(l) => {
                self.line_no += 1;
                Ok((self.line_no, l))
            }
            None => Err(ParseError::new(
                self.line_no + 1,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    /// After the declared records, only blank lines may remain.
    fn expect_end(&mut self) -> Result<(), ParseError> {
        for l in self.lines.by_ref() {
            self.line_no += 1;
            if !l.trim().is_empty() {
                return Err(ParseError::new(self.line_no, "unexpected trailing content"));
            }
        }
        Ok(())
    }
}

fn fields<'a>(
    line: &'a str,
    line_no: usize,
    expected: usize,
    what: &str,
) -> Result<Vec<&'a str>, ParseError> {
    let f: Vec<&str> = line.split_whitespace().collect();
    if f.len() != expected {
        return Err(ParseError::new(
            line_no,
            format!("expected {expected} fields ({what}), found {}", f.len()),
        ));
    }
    Ok(f)
}

fn parse_count(tok: &str, line_no: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::new(line_no, format!("invalid {what} '{tok}'")))
}

fn parse_u64(tok: &str, line_no: usize, what: &str) -> Result<u64, ParseError> {
    tok.parse::<u64>()
        .map_err(|_| ParseError::new(line_no, format!("invalid {what} '{tok}'")))
}

fn parse_real(tok: &str, line_no: usize, what: &str) -> Result<f64, ParseError> {
    let x: f64 = tok
        .parse()
        .map_err(|_| ParseError::new(line_no, format!("invalid {what} '{tok}'")))?;
    if !x.is_finite() {
        return Err(ParseError::new(
            line_no,
            format!("{what} '{tok}' is not finite"),
        ));
    }
    Ok(x)
}

/// Parses the interval scheduling format.
pub fn parse_is(text: &str) -> Result<IntervalInstance, ParseError> {
    let mut cur = Cursor::new(text);
    let (ln, header) = cur.expect_line("header line with the interval count")?;
    let n = parse_count(fields(header, ln, 1, "n")?[0], ln, "interval count")?;

    let mut intervals = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, line) = cur.expect_line("an interval line 'start finish value'")?;
        let f = fields(line, ln, 3, "start finish value")?;
        let start = parse_real(f[0], ln, "start")?;
        let finish = parse_real(f[1], ln, "finish")?;
        let value = parse_real(f[2], ln, "value")?;
        if value < 0.0 {
            return Err(ParseError::new(ln, format!("negative value {value}")));
        }
        intervals.push(Interval::new(start, finish).map_err(|e| ParseError::new(ln, reason(e)))?);
        values.push(value);
    }
    cur.expect_end()?;
    Ok(IntervalInstance::new(intervals, values).expect("fields validated per line"))
}

/// Serializes to the interval scheduling format (canonical form).
pub fn serialize_is(inst: &IntervalInstance) -> String {
    let mut out = format!("{}\n", inst.len());
    for (iv, v) in inst.intervals().iter().zip(inst.values()) {
        out.push_str(&format!("{} {} {}\n", iv.start(), iv.finish(), v));
    }
    out
}

/// Parses the knapsack format.
pub fn parse_ks(text: &str) -> Result<KnapsackInstance, ParseError> {
    let mut cur = Cursor::new(text);
    let (ln, header) = cur.expect_line("header line 'n W'")?;
    let f = fields(header, ln, 2, "n W")?;
    let n = parse_count(f[0], ln, "item count")?;
    let capacity = parse_u64(f[1], ln, "capacity")?;

    let mut weights = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, line) = cur.expect_line("an item line 'weight value'")?;
        let f = fields(line, ln, 2, "weight value")?;
        weights.push(parse_u64(f[0], ln, "weight")?);
        let value = parse_real(f[1], ln, "value")?;
        if value < 0.0 {
            return Err(ParseError::new(ln, format!("negative value {value}")));
        }
        values.push(value);
    }
    cur.expect_end()?;
    Ok(KnapsackInstance::new(weights, values, capacity).expect("fields validated per line"))
}

/// Serializes to the knapsack format (canonical form).
pub fn serialize_ks(inst: &KnapsackInstance) -> String {
    let mut out = format!("{} {}\n", inst.len(), inst.capacity());
    for (w, v) in inst.weights().iter().zip(inst.values()) {
        out.push_str(&format!("{w} {v}\n"));
    }
    out
}

/// Parses the graph format.
pub fn parse_graph(text: &str) -> Result<Digraph, ParseError> {
    let mut cur = Cursor::new(text);
    let (ln, header) = cur.expect_line("header line 'n m s'")?;
    let f = fields(header, ln, 3, "n m s")?;
    let n = parse_count(f[0], ln, "vertex count")?;
    let m = parse_count(f[1], ln, "edge count")?;
    let source = parse_count(f[2], ln, "source")?;
    if n == 0 {
        return Err(ParseError::new(ln, "graph must have at least one vertex"));
    }
    if source >= n {
        return Err(ParseError::new(
            ln,
            format!("source {source} out of range for {n} vertices"),
        ));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = cur.expect_line("an edge line 'tail head length'")?;
        let f = fields(line, ln, 3, "tail head length")?;
        let tail = parse_count(f[0], ln, "tail")?;
        let head = parse_count(f[1], ln, "head")?;
        if tail >= n || head >= n {
            return Err(ParseError::new(
                ln,
                format!("edge {tail} -> {head} out of range for {n} vertices"),
            ));
        }
        let length = parse_real(f[2], ln, "length")?;
        edges.push(Edge { tail, head, length });
    }
    cur.expect_end()?;
    Ok(Digraph::new(n, edges, source).expect("fields validated per line"))
}

/// Serializes to the graph format (canonical form).
pub fn serialize_graph(g: &Digraph) -> String {
    let mut out = format!("{} {} {}\n", g.vertex_count(), g.edge_count(), g.source());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.tail, e.head, e.length));
    }
    out
}
