//! Exact adjacency and metric dimension.
//!
//! Two adjacency solvers are provided. [`SolveMode::Naive`] walks every vertex
//! subset by increasing size and compares full representations; it is the
//! reference. [`SolveMode::Pruned`] starts at the best lower bound, only visits
//! subsets that keep all but one vertex of every twin class, and tests
//! resolution by neighbourhood traces. Both return the lexicographically least
//! basis among minimum resolving sets, so their outputs must agree exactly.

mod bounds;
mod representation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, mask_vertices, twin_partition, Graph, VertexMask};

pub use bounds::{
    diametral_path, lower_bound_population, lower_bound_twins, path_cycle_dimension_formula,
    resolving_set_from_diametral_path, upper_bound_diameter,
};
pub use representation::{
    adjacency_representation, is_adjacency_resolving, is_metric_resolving, metric_representation,
    truncated_adjacency, AdjacencyRepresentation,
};
pub(crate) use representation::{resolves_by_representations, resolves_by_traces};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMode {
    #[default]
    Pruned,
    Naive,
}

impl fmt::Display for SolveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveMode::Pruned => "pruned",
            SolveMode::Naive => "naive",
        })
    }
}

impl FromStr for SolveMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pruned" => Ok(SolveMode::Pruned),
            "naive" => Ok(SolveMode::Naive),
            _ => Err(Error::InvalidParameters(format!("unknown solve mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Adjacency,
    Metric,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    /// Candidate sets handed to the resolution test.
    pub sets_tested: u64,
    /// Cardinality the search started from.
    pub lower_bound: usize,
    /// Best known upper bound, when one applies.
    pub upper_bound: Option<usize>,
}

/// Certified dimension: `basis` resolves and no smaller set does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionResult {
    pub value: usize,
    pub basis: Vec<usize>,
    pub kind: InvariantKind,
    pub stats: SearchStats,
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

/// First `k`-subset in lexicographic order accepted by `resolves`.
fn first_resolving<F>(n: usize, k: usize, tested: &mut u64, mut resolves: F) -> Option<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    if k > n {
        return None;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        *tested += 1;
        if resolves(&combo) {
            return Some(combo);
        }
        if !next_combination(&mut combo, n) {
            return None;
        }
    }
}

fn naive(g: &Graph) -> DimensionResult {
    let n = g.order();
    let mut tested = 0;
    for k in 1..=n {
        if let Some(basis) = first_resolving(n, k, &mut tested, |w| resolves_by_representations(g, w)) {
            return DimensionResult {
                value: k,
                basis,
                kind: InvariantKind::Adjacency,
                stats: SearchStats {
                    sets_tested: tested,
                    lower_bound: 1,
                    upper_bound: None,
                },
            };
        }
    }
    unreachable!("the full vertex set always resolves")
}

/// Depth-first walk over `k`-subsets in lexicographic order that drops any
/// branch unable to keep `need` members of each twin class.
struct PrunedSearch<'a> {
    g: &'a Graph,
    /// (class mask, members every resolving set must contain)
    twin_classes: Vec<(VertexMask, u32)>,
    k: usize,
    tested: u64,
}

impl PrunedSearch<'_> {
    fn feasible(&self, chosen: VertexMask, undecided: VertexMask, slots: usize) -> bool {
        let mut deficit = 0;
        for &(class, need) in &self.twin_classes {
            let have = (class & chosen).count_ones();
            if have + (class & undecided).count_ones() < need {
                return false;
            }
            deficit += need.saturating_sub(have) as usize;
        }
        deficit <= slots
    }

    fn run(&mut self, start: usize, chosen: VertexMask, size: usize) -> Option<VertexMask> {
        if size == self.k {
            self.tested += 1;
            return resolves_by_traces(self.g, chosen).then_some(chosen);
        }
        let n = self.g.order();
        let slots = self.k - size - 1;
        for v in start..=n - (slots + 1) {
            let next = chosen | (1 << v);
            let undecided = self.g.vertex_mask() & !((2u32 << v).wrapping_sub(1));
            if !self.feasible(next, undecided, slots) {
                continue;
            }
            if let Some(found) = self.run(v + 1, next, size + 1) {
                return Some(found);
            }
        }
        None
    }
}

fn pruned(g: &Graph) -> DimensionResult {
    let n = g.order();
    let twin_classes: Vec<(VertexMask, u32)> = twin_partition(g)
        .class_masks()
        .into_iter()
        .filter(|c| c.count_ones() > 1)
        .map(|c| (c, c.count_ones() - 1))
        .collect();
    let twin_bound: u32 = twin_classes.iter().map(|&(_, need)| need).sum();
    let lower = lower_bound_population(n).max(twin_bound as usize).max(1);
    let upper = if n < 2 {
        1
    } else if g.is_connected() {
        (n - 1).min(upper_bound_diameter(g).expect("connected graph of order >= 2"))
    } else {
        n - 1
    };
    let mut search = PrunedSearch {
        g,
        twin_classes,
        k: 0,
        tested: 0,
    };
    // The loop runs past `upper` on purpose: a bound that was too small would
    // surface as a larger value rather than a missed basis.
    for k in lower..=n {
        search.k = k;
        if let Some(mask) = search.run(0, 0, 0) {
            return DimensionResult {
                value: k,
                basis: mask_vertices(mask),
                kind: InvariantKind::Adjacency,
                stats: SearchStats {
                    sets_tested: search.tested,
                    lower_bound: lower,
                    upper_bound: Some(upper),
                },
            };
        }
    }
    unreachable!("the full vertex set always resolves")
}

/// Adjacency dimension with its lexicographically least basis.
///
/// A single vertex has dimension 1 with basis `{0}`: resolving sets are never empty.
pub fn adjacency_dimension(g: &Graph, mode: SolveMode) -> Result<DimensionResult> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(match mode {
        SolveMode::Pruned => pruned(g),
        SolveMode::Naive => naive(g),
    })
}

/// Metric dimension of a connected graph of order at least 2.
pub fn metric_dimension(g: &Graph) -> Result<DimensionResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if n < 2 {
        return Err(Error::InvalidParameters("metric dimension needs order at least 2".into()));
    }
    let dist = distance_matrix(g);
    let mut tested = 0;
    for k in 1..n {
        if let Some(basis) = first_resolving(n, k, &mut tested, |w| representation::metric_resolves(&dist, w)) {
            return Ok(DimensionResult {
                value: k,
                basis,
                kind: InvariantKind::Metric,
                stats: SearchStats {
                    sets_tested: tested,
                    lower_bound: 1,
                    upper_bound: Some(n - 1),
                },
            });
        }
    }
    unreachable!("all but one vertex always resolve")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn kst(s: usize, t: usize) -> Graph {
        Graph::empty(s).unwrap().join(&Graph::empty(t).unwrap()).unwrap()
    }

    fn dim2(g: &Graph) -> usize {
        adjacency_dimension(g, SolveMode::Pruned).unwrap().value
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn named_values() {
        assert_eq!(dim2(&path(3)), 1);
        assert_eq!(dim2(&Graph::complete(5).unwrap()), 4);
        assert_eq!(dim2(&kst(2, 3)), 3);
        assert_eq!(dim2(&path(10)), 4);
        assert_eq!(dim2(&cycle(6)), 2);
    }

    #[test]
    fn single_vertex_convention() {
        for mode in [SolveMode::Pruned, SolveMode::Naive] {
            let r = adjacency_dimension(&Graph::empty(1).unwrap(), mode).unwrap();
            assert_eq!((r.value, r.basis), (1, vec![0]));
        }
        assert_eq!(adjacency_dimension(&Graph::empty(0).unwrap(), SolveMode::Pruned), Err(Error::EmptyGraph));
    }

    #[test]
    fn basis_is_lexicographically_least() {
        // in P_4 the set {0} fails; {0, 1} resolves and is the least 2-set
        let r = adjacency_dimension(&path(4), SolveMode::Pruned).unwrap();
        assert_eq!(r.basis, vec![0, 1]);
        let r = adjacency_dimension(&Graph::complete(4).unwrap(), SolveMode::Naive).unwrap();
        assert_eq!(r.basis, vec![0, 1, 2]);
    }

    #[test]
    fn pruned_matches_naive_on_all_labelled_graphs_of_order_five() {
        for g in crate::graph::enumerate_labeled(5).unwrap() {
            let a = adjacency_dimension(&g, SolveMode::Pruned).unwrap();
            let b = adjacency_dimension(&g, SolveMode::Naive).unwrap();
            assert_eq!((a.value, &a.basis), (b.value, &b.basis), "{g}");
            assert!(a.stats.sets_tested <= b.stats.sets_tested);
        }
    }

    #[test]
    fn pruned_skips_sets_missing_twins() {
        let k = Graph::complete(8).unwrap();
        let r = adjacency_dimension(&k, SolveMode::Pruned).unwrap();
        assert_eq!(r.value, 7);
        assert_eq!(r.stats.lower_bound, 7);
        assert_eq!(r.stats.sets_tested, 1);
    }

    #[test]
    fn metric_values() {
        for n in 2..8 {
            assert_eq!(metric_dimension(&path(n)).unwrap().value, 1);
        }
        for (s, t) in [(1, 3), (2, 2), (2, 3), (3, 3), (1, 5)] {
            assert_eq!(metric_dimension(&kst(s, t)).unwrap().value, s + t - 2);
        }
        assert_eq!(metric_dimension(&cycle(6)).unwrap().value, 2);
        assert_eq!(metric_dimension(&Graph::empty(3).unwrap()), Err(Error::DisconnectedGraph));
        assert_eq!(metric_dimension(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph));
        assert!(metric_dimension(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("naive".parse::<SolveMode>().unwrap(), SolveMode::Naive);
        assert_eq!(SolveMode::Pruned.to_string(), "pruned");
        assert!("fast".parse::<SolveMode>().is_err());
    }
}
