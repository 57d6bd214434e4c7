//! Exhaustive generation of small graphs.
//!
//! Non-isomorphic classes of order `n` are produced by attaching one new vertex,
//! with every possible neighbourhood, to each class representative of order
//! `n - 1`, then deduplicating by canonical form. Every graph of order `n`
//! arises this way since deleting its last vertex leaves a graph isomorphic to
//! some smaller representative.

use std::sync::OnceLock;

use rayon::prelude::*;

use super::{canonical_graph, graph6_encode, Graph};
use crate::error::{order_range, Result};

pub const ENUMERATE_MAX_ORDER: usize = 7;
pub const LABELED_MAX_ORDER: usize = 6;

static CLASSES: [OnceLock<Vec<Graph>>; ENUMERATE_MAX_ORDER + 1] = [const { OnceLock::new() }; ENUMERATE_MAX_ORDER + 1];

/// All `2^C(n,2)` labelled graphs on `n` vertices, in order of their edge bit masks.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    order_range(n, 0, LABELED_MAX_ORDER)?;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are valid")
    }))
}

fn extend(base: &Graph, neighbourhood: u32) -> Graph {
    let n = base.order();
    let edges = base
        .edges()
        .chain((0..n).filter(|&v| neighbourhood >> v & 1 == 1).map(|v| (v, n)));
    Graph::from_edges(n + 1, edges).expect("order within range")
}

fn classes(n: usize) -> &'static [Graph] {
    CLASSES[n].get_or_init(|| {
        if n <= 1 {
            return vec![Graph::empty(n).expect("small order")];
        }
        let smaller = classes(n - 1);
        let mut reps: Vec<(String, Graph)> = smaller
            .par_iter()
            .flat_map_iter(|base| (0u32..1 << (n - 1)).map(move |nb| extend(base, nb)))
            .map(|g| {
                let c = canonical_graph(&g).expect("order within canonical range");
                (graph6_encode(&c), c)
            })
            .collect();
        reps.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        reps.dedup_by(|a, b| a.0 == b.0);
        reps.into_iter().map(|(_, g)| g).collect()
    })
}

/// One canonical representative per isomorphism class of order `n`, sorted by
/// canonical graph6.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    order_range(n, 1, ENUMERATE_MAX_ORDER)?;
    Ok(classes(n)
        .iter()
        .filter(|g| !connected_only || g.is_connected())
        .copied()
        .collect())
}
