use std::collections::BTreeSet;

use crate::error::Result;
use crate::families::{make_named, omega_members, FamilySpec};
use crate::graph::{canonical_form, Graph};

/// The explicit graph lists that the characterizations name. Kept as data so
/// that tests can perturb a list and watch the matching check fail.
#[derive(Debug, Clone)]
pub struct Characterizations {
    /// Graphs with adjacency dimension 1.
    pub dim_one: Vec<Graph>,
    /// `K_n` and its complement for each order `2..=max_n`.
    pub dim_n_minus_one: Vec<Graph>,
    /// Graphs (and complements) with adjacency dimension `n - 2`, orders `4..=max_n`.
    pub dim_n_minus_two: Vec<Graph>,
    /// Order 3 graphs with adjacency dimension 2.
    pub dim_two_order_three: Vec<Graph>,
    /// Order 4 graphs whose adjacency dimension is not 2.
    pub not_dim_two_order_four: Vec<Graph>,
    /// Order 5 graphs (and complements) whose adjacency dimension is not 2.
    pub not_dim_two_order_five: Vec<Graph>,
    /// Labelled members of the order-6 family with dimension 2.
    pub dim_two_order_six: Vec<Graph>,
}

fn named(specs: &[FamilySpec]) -> Result<Vec<Graph>> {
    specs.iter().map(make_named).collect()
}

fn with_complements(graphs: Vec<Graph>) -> Vec<Graph> {
    let comps: Vec<Graph> = graphs.iter().map(Graph::complement).collect();
    graphs.into_iter().chain(comps).collect()
}

/// Every graph of order `n` named by the `n - 2` characterization, before complements.
pub fn n_minus_two_candidates(n: usize) -> Result<Vec<Graph>> {
    use FamilySpec::*;
    let mut specs = Vec::new();
    if n == 4 {
        specs.push(Path(4));
    }
    for s in 1..n {
        let t = n - s;
        specs.push(CompleteBipartite { s, t });
        if t >= 2 {
            specs.push(JoinCompleteEmpty { s, t });
            specs.push(JoinCompleteCliquePlusOne { s, t: t - 1 });
        }
    }
    named(&specs)
}

impl Characterizations {
    pub fn standard(max_n: usize) -> Result<Self> {
        use FamilySpec::*;
        let dim_one = named(&[Path(1), Path(2), Path(3), Empty(2)])?
            .into_iter()
            .chain([make_named(&Path(3))?.complement()])
            .collect();
        let mut dim_n_minus_one = Vec::new();
        for n in 2..=max_n {
            dim_n_minus_one.extend(named(&[Complete(n), Empty(n)])?);
        }
        let mut n_minus_two = Vec::new();
        for n in 4..=max_n {
            n_minus_two.extend(n_minus_two_candidates(n)?);
        }
        let order_five = named(&[
            Complete(5),
            CompleteBipartite { s: 1, t: 4 },
            CompleteBipartite { s: 2, t: 3 },
            JoinCompleteEmpty { s: 3, t: 2 },
            JoinCompleteEmpty { s: 2, t: 3 },
            JoinCompleteCliquePlusOne { s: 1, t: 3 },
            JoinCompleteCliquePlusOne { s: 2, t: 2 },
        ])?;
        Ok(Characterizations {
            dim_one,
            dim_n_minus_one,
            dim_n_minus_two: with_complements(n_minus_two),
            dim_two_order_three: named(&[Complete(3), Empty(3)])?,
            not_dim_two_order_four: named(&[Complete(4), Empty(4)])?,
            not_dim_two_order_five: with_complements(order_five),
            dim_two_order_six: omega_members(2)?,
        })
    }
}

/// Canonical forms of `graphs`, for isomorphism-class membership tests.
pub fn class_set(graphs: &[Graph]) -> Result<BTreeSet<Vec<u8>>> {
    graphs.iter().map(canonical_form).collect()
}
