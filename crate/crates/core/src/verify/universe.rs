use rayon::prelude::*;

use crate::census::with_workers;
use crate::error::{Error, Result};
use crate::graph::{diameter, enumerate_graphs, graph6_encode, Diameter, Graph, ENUMERATE_MAX_ORDER};
use crate::solver::{adjacency_dimension, metric_dimension, DimensionResult, SolveMode};

/// Everything the checks need about one isomorphism class.
#[derive(Debug, Clone)]
pub struct Analysis {
    /// Canonical representative.
    pub graph: Graph,
    pub graph6: String,
    pub dim2: DimensionResult,
    /// Value from the unpruned reference solver, used wherever a bound is under
    /// test so the bound cannot influence the value it is checked against.
    pub dim2_naive: DimensionResult,
    pub complement_dim2: usize,
    pub diameter: Diameter,
    /// Metric dimension for connected graphs of order at least 2.
    pub dim: Option<usize>,
}

impl Analysis {
    pub fn analyse(g: &Graph) -> Result<Self> {
        let diam = diameter(g)?;
        let dim = match diam {
            Diameter::Finite(_) if g.order() >= 2 => Some(metric_dimension(g)?.value),
            _ => None,
        };
        Ok(Analysis {
            graph: *g,
            graph6: graph6_encode(g),
            dim2: adjacency_dimension(g, SolveMode::Pruned)?,
            dim2_naive: adjacency_dimension(g, SolveMode::Naive)?,
            complement_dim2: adjacency_dimension(&g.complement(), SolveMode::Pruned)?.value,
            diameter: diam,
            dim,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// All isomorphism classes of order `1..=max_n`, analysed.
#[derive(Debug, Clone)]
pub struct Universe {
    pub max_n: usize,
    /// Sorted by `(order, graph6)`.
    pub entries: Vec<Analysis>,
}

impl Universe {
    pub fn build(max_n: usize, workers: usize) -> Result<Self> {
        if max_n > ENUMERATE_MAX_ORDER {
            return Err(Error::ScopeTooLarge(format!(
                "exhaustive checks support max_n <= {ENUMERATE_MAX_ORDER}, got {max_n}"
            )));
        }
        let mut graphs = Vec::new();
        for n in 1..=max_n {
            graphs.extend(enumerate_graphs(n, false)?);
        }
        let entries = with_workers(workers, || graphs.par_iter().map(Analysis::analyse).collect::<Result<Vec<_>>>())??;
        Ok(Universe { max_n, entries })
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &Analysis> {
        self.entries.iter().filter(move |a| a.order() == n)
    }

    pub fn scope(&self) -> String {
        format!("all {} graphs of order 1..={}", self.entries.len(), self.max_n)
    }
}
