//! Census of every small graph: one [`CensusRecord`] per isomorphism class.
//!
//! Records are computed on a worker pool and emitted sorted by `(n, graph6)`,
//! so output is byte-identical regardless of the worker count.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{diameter, enumerate_graphs, graph6_decode, graph6_encode, twin_partition, Graph, ENUMERATE_MAX_ORDER};
use crate::solver::{
    adjacency_dimension, is_adjacency_resolving, lower_bound_population, lower_bound_twins, metric_dimension,
    upper_bound_diameter, SolveMode,
};

/// Per-graph invariants. Undefined integer fields are stored as `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub diameter: i64,
    pub dim2: usize,
    pub dim: i64,
    pub twin_class_sizes: Vec<usize>,
    pub basis2: Vec<usize>,
    pub lb_population: i64,
    pub lb_twins: i64,
    pub ub_diameter: i64,
}

fn defined(x: Option<usize>) -> i64 {
    x.map_or(-1, |v| v as i64)
}

impl CensusRecord {
    /// Computes every field for `g` as labelled (callers pass canonical graphs).
    pub fn compute(g: &Graph, mode: SolveMode) -> Result<Self> {
        let dim2 = adjacency_dimension(g, mode)?;
        let diam = diameter(g)?.finite();
        let connected = diam.is_some() && g.order() >= 2;
        let dim = if connected { Some(metric_dimension(g)?.value) } else { None };
        let ub = if connected { Some(upper_bound_diameter(g)?) } else { None };
        Ok(CensusRecord {
            graph6: graph6_encode(g),
            n: g.order(),
            m: g.edge_count(),
            diameter: diam.map_or(-1, i64::from),
            dim2: dim2.value,
            dim: defined(dim),
            twin_class_sizes: twin_partition(g).sorted_sizes(),
            basis2: dim2.basis,
            lb_population: lower_bound_population(g.order()) as i64,
            lb_twins: lower_bound_twins(g) as i64,
            ub_diameter: defined(ub),
        })
    }

    /// Checks the record against its own graph6 and the bound ordering.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRecord(format!("{}: {msg}", self.graph6)));
        let g = graph6_decode(&self.graph6)?;
        if g.order() != self.n || g.edge_count() != self.m {
            return bad(format!("graph6 has n={} m={}, record says n={} m={}", g.order(), g.edge_count(), self.n, self.m));
        }
        if self.basis2.len() != self.dim2 || self.basis2.is_empty() || !is_adjacency_resolving(&g, &self.basis2)? {
            return bad(format!("basis {:?} does not certify dim2 = {}", self.basis2, self.dim2));
        }
        if self.twin_class_sizes.iter().sum::<usize>() != self.n {
            return bad("twin classes do not cover the vertex set".into());
        }
        let dim2 = self.dim2 as i64;
        for (name, lb) in [("lb_population", self.lb_population), ("lb_twins", self.lb_twins)] {
            if lb > dim2 {
                return bad(format!("{name} = {lb} exceeds dim2 = {dim2}"));
            }
        }
        if self.ub_diameter >= 0 && dim2 > self.ub_diameter {
            return bad(format!("dim2 = {dim2} exceeds ub_diameter = {}", self.ub_diameter));
        }
        if self.dim >= 0 && self.dim > dim2 {
            return bad(format!("dim = {} exceeds dim2 = {dim2}", self.dim));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub max_n: usize,
    pub connected_only: bool,
    /// Worker threads; `0` uses the global pool.
    pub workers: usize,
    pub mode: SolveMode,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_n: 6,
            connected_only: false,
            workers: 0,
            mode: SolveMode::Pruned,
        }
    }
}

/// Runs `f` on a pool of `workers` threads, or on the global pool for `0`.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(f))
}

pub fn run_census(opts: &CensusOptions) -> Result<Vec<CensusRecord>> {
    if opts.max_n == 0 {
        return Err(Error::InvalidParameters("max_n must be at least 1".into()));
    }
    if opts.max_n > ENUMERATE_MAX_ORDER {
        return Err(Error::ScopeTooLarge(format!("census supports max_n <= {ENUMERATE_MAX_ORDER}, got {}", opts.max_n)));
    }
    let mut graphs = Vec::new();
    for n in 1..=opts.max_n {
        graphs.extend(enumerate_graphs(n, opts.connected_only)?);
    }
    let mut records = with_workers(opts.workers, || {
        graphs
            .par_iter()
            .map(|g| CensusRecord::compute(g, opts.mode))
            .collect::<Result<Vec<_>>>()
    })??;
    records.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
    Ok(records)
}

/// Writes one JSON object per line, validating each record first.
pub fn write_jsonl<W: Write>(records: &[CensusRecord], mut out: W) -> Result<()> {
    for r in records {
        r.validate()?;
        let line = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<CensusRecord>> {
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r: CensusRecord =
            serde_json::from_str(&line).map_err(|e| Error::InvalidRecord(format!("line {}: {e}", i + 1)))?;
        r.validate()?;
        records.push(r);
    }
    Ok(records)
}

/// `n -> (dim2 -> count)`.
pub fn dim2_distribution(records: &[CensusRecord]) -> BTreeMap<usize, BTreeMap<usize, usize>> {
    let mut dist: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for r in records {
        *dist.entry(r.n).or_default().entry(r.dim2).or_default() += 1;
    }
    dist
}

pub fn format_summary(records: &[CensusRecord]) -> String {
    let dist = dim2_distribution(records);
    let max_dim = dist.values().flat_map(|d| d.keys()).copied().max().unwrap_or(0);
    let mut out = String::from("  n  graphs");
    for k in 1..=max_dim {
        let _ = write!(out, " {:>6}", format!("dim2={k}"));
    }
    out.push('\n');
    for (n, counts) in &dist {
        let total: usize = counts.values().sum();
        let _ = write!(out, "{n:>3} {total:>7}");
        for k in 1..=max_dim {
            let _ = write!(out, " {:>6}", counts.get(&k).copied().unwrap_or(0));
        }
        out.push('\n');
    }
    out
}
