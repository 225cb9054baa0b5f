//! Graph dumps and exploration-trace CSVs.
//!
//! Graph dump: a header line `n d simple_flag seed` followed by one line per
//! edge, `u v weight`. The weight column is optional on input; a dump
//! without weights reads back as an unweighted multigraph.
//!
//! Trace CSV: header `k,T_k,S_k,X_k,H_k`, one row per exploration step.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use fpp_core::exploration::ExplorationTrace;
use fpp_core::{RegularMultigraph, WeightedGraph};

use crate::{Error, Result};

/// A parsed graph dump.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphDump {
    /// The multigraph.
    pub graph: RegularMultigraph,
    /// Per-edge weights in edge-index order, if every line had one.
    pub weights: Option<Vec<f64>>,
    /// Header flag: 1 if the graph was simple.
    pub simple: bool,
    /// Header seed.
    pub seed: u64,
}

impl GraphDump {
    /// Weighted graph, if the dump carried weights.
    pub fn weighted(&self) -> Option<Result<WeightedGraph>> {
        self.weights
            .clone()
            .map(|w| WeightedGraph::new(self.graph.clone(), w).map_err(Error::from))
    }
}

/// Writes `wg` in dump format.
pub fn write_graph<W: Write>(
    out: &mut W,
    wg: &WeightedGraph,
    simple: bool,
    seed: u64,
) -> Result<()> {
    let g = wg.graph();
    writeln!(out, "{} {} {} {}", g.n(), g.d(), u8::from(simple), seed)?;
    for ((u, v), w) in g.edges().zip(wg.weights()) {
        writeln!(out, "{u} {v} {w}")?;
    }
    Ok(())
}

/// Writes a dump file.
pub fn write_graph_dump(path: &Path, wg: &WeightedGraph, simple: bool, seed: u64) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_graph(&mut out, wg, simple, seed)?;
    out.flush()?;
    Ok(())
}

fn parse<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?
    .parse()
    .map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what}"),
    })
}

/// Parses a dump. Half-edges are assigned to each vertex in the order its
/// edges appear, which reproduces the pairing of a dump written by
/// [`write_graph`].
pub fn read_graph<R: BufRead>(input: R) -> Result<GraphDump> {
    let mut lines = input.lines().enumerate().filter(|(_, l)| {
        l.as_ref()
            .map(|s| !s.trim().is_empty() && !s.starts_with('#'))
            .unwrap_or(true)
    });
    let (idx, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty file".into(),
    })?;
    let header = header?;
    let mut toks = header.split_whitespace();
    let n: usize = parse(toks.next(), idx + 1, "n")?;
    let d: usize = parse(toks.next(), idx + 1, "d")?;
    let simple: u8 = parse(toks.next(), idx + 1, "simple flag")?;
    let seed: u64 = parse(toks.next(), idx + 1, "seed")?;

    let mut next_free: Vec<usize> = (0..n).map(|v| v * d).collect();
    let mut pairing = vec![usize::MAX; n * d];
    let mut weights = Vec::new();
    let mut all_weighted = true;
    for (idx, line) in lines {
        let line = line?;
        let lineno = idx + 1;
        let mut toks = line.split_whitespace();
        let u: usize = parse(toks.next(), lineno, "u")?;
        let v: usize = parse(toks.next(), lineno, "v")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex out of range for n={n}"),
            });
        }
        match toks.next() {
            Some(t) => weights.push(parse::<f64>(Some(t), lineno, "weight")?),
            None => all_weighted = false,
        }
        let hu = next_free[u];
        next_free[u] += 1;
        let hv = next_free[v];
        next_free[v] += 1;
        if next_free[u] > (u + 1) * d || next_free[v] > (v + 1) * d {
            return Err(Error::Parse {
                line: lineno,
                msg: "vertex degree exceeds d".into(),
            });
        }
        pairing[hu] = hv;
        pairing[hv] = hu;
    }
    let graph = RegularMultigraph::from_pairing(n, d, pairing)?;
    Ok(GraphDump {
        graph,
        weights: all_weighted.then_some(weights),
        simple: simple == 1,
        seed,
    })
}

/// Reads a dump file.
pub fn read_graph_dump(path: &Path) -> Result<GraphDump> {
    read_graph(BufReader::new(File::open(path)?))
}

/// Writes a trace as CSV.
pub fn write_trace<W: Write>(out: &mut W, trace: &ExplorationTrace) -> Result<()> {
    writeln!(out, "k,T_k,S_k,X_k,H_k")?;
    for k in 0..trace.times.len() {
        writeln!(
            out,
            "{},{},{},{},{}",
            k, trace.times[k], trace.boundary[k], trace.excess[k], trace.hops[k]
        )?;
    }
    Ok(())
}

/// Writes a trace CSV file.
pub fn write_trace_csv(path: &Path, trace: &ExplorationTrace) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_trace(&mut out, trace)?;
    out.flush()?;
    Ok(())
}
