//! Text formats: edge lists, event streams, and centrality CSV output.
//!
//! Edge lists hold one `u v` pair per line. Event streams hold `+ u v [t]`
//! (insert) or `- u v [t]` (delete) per line. In both, blank lines and lines
//! starting with `#` or `%` are ignored.

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::closeness::{closeness_from_farness, CentralityState};
use crate::error::{Error, Result};
use crate::graph::{DynamicGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeOp {
    Insert,
    Delete,
}

impl EdgeOp {
    pub fn symbol(self) -> char {
        match self {
            EdgeOp::Insert => '+',
            EdgeOp::Delete => '-',
        }
    }
}

/// One edge insertion or deletion, optionally timestamped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeEvent {
    pub op: EdgeOp,
    pub u: VertexId,
    pub v: VertexId,
    pub timestamp: Option<u64>,
}

impl EdgeEvent {
    pub fn insert(u: VertexId, v: VertexId) -> Self {
        EdgeEvent { op: EdgeOp::Insert, u, v, timestamp: None }
    }

    pub fn delete(u: VertexId, v: VertexId) -> Self {
        EdgeEvent { op: EdgeOp::Delete, u, v, timestamp: None }
    }

    pub fn at(mut self, timestamp: u64) -> Self {
        self.timestamp = Some(timestamp);
        self
    }
}

impl fmt::Display for EdgeEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.op.symbol(), self.u, self.v)?;
        if let Some(t) = self.timestamp {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

/// Lines dropped while symmetrizing an edge list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EdgeListStats {
    pub edges: usize,
    pub duplicates: usize,
    pub self_loops: usize,
}

impl EdgeListStats {
    pub fn warnings(&self) -> usize {
        self.duplicates + self.self_loops
    }
}

fn is_skipped(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('#') || t.starts_with('%')
}

fn parse_field<T: FromStr>(field: Option<&str>, line: usize, what: &str) -> Result<T> {
    let raw = field.ok_or_else(|| Error::malformed(line, format!("missing {what}")))?;
    raw.parse()
        .map_err(|_| Error::malformed(line, format!("invalid {what} `{raw}`")))
}

fn read_pairs<R: BufRead, T: FromStr>(reader: R) -> Result<Vec<(T, T)>> {
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if is_skipped(&line) {
            continue;
        }
        let lineno = idx + 1;
        let mut fields = line.split_whitespace();
        let u = parse_field(fields.next(), lineno, "vertex id")?;
        let v = parse_field(fields.next(), lineno, "vertex id")?;
        pairs.push((u, v));
    }
    Ok(pairs)
}

fn build_simple(pairs: &[(VertexId, VertexId)]) -> (DynamicGraph, EdgeListStats) {
    let n = pairs.iter().map(|&(u, v)| u.max(v) as usize + 1).max().unwrap_or(0);
    let mut g = DynamicGraph::new(n);
    let mut stats = EdgeListStats::default();
    for &(u, v) in pairs {
        if u == v {
            stats.self_loops += 1;
        } else if g.add_edge(u, v).is_err() {
            stats.duplicates += 1;
        } else {
            stats.edges += 1;
        }
    }
    (g, stats)
}

/// Parses a whitespace-separated edge list with dense 0-based ids.
///
/// The result is symmetrized: reversed or repeated pairs and self-loops are
/// dropped and counted. Extra columns (weights, timestamps) are ignored.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<(DynamicGraph, EdgeListStats)> {
    let pairs: Vec<(VertexId, VertexId)> = read_pairs(reader)?;
    Ok(build_simple(&pairs))
}

/// Like [`parse_edge_list`] but accepts arbitrary non-negative ids, mapping them
/// to dense ids in order of first appearance. Returns the external id of every
/// dense id.
pub fn parse_edge_list_relabeled<R: BufRead>(
    reader: R,
) -> Result<(DynamicGraph, EdgeListStats, Vec<u64>)> {
    let raw: Vec<(u64, u64)> = read_pairs(reader)?;
    let mut dense: HashMap<u64, VertexId> = HashMap::new();
    let mut external = Vec::new();
    let mut id = |x: u64| {
        *dense.entry(x).or_insert_with(|| {
            external.push(x);
            (external.len() - 1) as VertexId
        })
    };
    let pairs: Vec<(VertexId, VertexId)> = raw.iter().map(|&(u, v)| (id(u), id(v))).collect();
    let (g, stats) = build_simple(&pairs);
    Ok((g, stats, external))
}

/// Parses `+ u v [t]` / `- u v [t]` lines. Present timestamps must not decrease.
pub fn parse_event_stream<R: BufRead>(reader: R) -> Result<Vec<EdgeEvent>> {
    let mut events = Vec::new();
    let mut last_ts: Option<u64> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if is_skipped(&line) {
            continue;
        }
        let lineno = idx + 1;
        let mut fields = line.split_whitespace();
        let op = match fields.next() {
            Some("+") => EdgeOp::Insert,
            Some("-") => EdgeOp::Delete,
            Some(other) => {
                return Err(Error::malformed(lineno, format!("unknown operation `{other}`")))
            }
            None => unreachable!("blank lines are skipped"),
        };
        let u = parse_field(fields.next(), lineno, "vertex id")?;
        let v = parse_field(fields.next(), lineno, "vertex id")?;
        let timestamp = match fields.next() {
            Some(raw) => Some(parse_field::<u64>(Some(raw), lineno, "timestamp")?),
            None => None,
        };
        if let Some(extra) = fields.next() {
            return Err(Error::malformed(lineno, format!("unexpected field `{extra}`")));
        }
        if let Some(t) = timestamp {
            if last_ts.is_some_and(|prev| t < prev) {
                return Err(Error::DecreasingTimestamp { line: lineno });
            }
            last_ts = Some(t);
        }
        events.push(EdgeEvent { op, u, v, timestamp });
    }
    Ok(events)
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path, e))
}

pub fn read_edge_list(path: &Path) -> Result<(DynamicGraph, EdgeListStats)> {
    parse_edge_list(open(path)?).map_err(|e| with_path(e, path))
}

pub fn read_edge_list_relabeled(path: &Path) -> Result<(DynamicGraph, EdgeListStats, Vec<u64>)> {
    parse_edge_list_relabeled(open(path)?).map_err(|e| with_path(e, path))
}

pub fn read_event_stream(path: &Path) -> Result<Vec<EdgeEvent>> {
    parse_event_stream(open(path)?).map_err(|e| with_path(e, path))
}

fn with_path(e: Error, path: &Path) -> Error {
    match e {
        Error::Stream(io) => Error::io(path, io),
        other => other,
    }
}

pub fn write_edge_list<W: Write>(g: &DynamicGraph, mut w: W) -> std::io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_event_stream<W: Write>(events: &[EdgeEvent], mut w: W) -> std::io::Result<()> {
    for e in events {
        writeln!(w, "{e}")?;
    }
    Ok(())
}

/// `x` with 12 significant digits in plain decimal notation.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// CSV with header `vertex,far,closeness`; farness is exact, closeness has 12 significant digits.
pub fn write_centrality_csv<W: Write>(state: &CentralityState, mut w: W) -> std::io::Result<()> {
    writeln!(w, "vertex,far,closeness")?;
    for (v, &far) in state.far().iter().enumerate() {
        let cc = format_significant(closeness_from_farness(far), 12);
        writeln!(w, "{v},{far},{cc}")?;
    }
    Ok(())
}

/// Creates `path` and hands a buffered writer to `body`, attaching the path to any I/O error.
pub fn write_file<F>(path: &Path, body: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
{
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    body(&mut w)
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))
}
