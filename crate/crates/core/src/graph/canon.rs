//! Canonical labelling by exhaustive search for the lexicographically least
//! adjacency string, with vertices pre-bucketed by colour refinement.
//!
//! Colours start from degrees and are refined by neighbour-colour multisets
//! until stable. Only labellings that list colour classes in ascending colour
//! order are searched; since colours are isomorphism invariant the minimum over
//! that restricted set is still a canonical form.

use super::{graph6_encode, mask_vertices, Graph};
use crate::error::{order_range, Result};

pub const CANONICAL_MAX_ORDER: usize = 10;

fn refined_colours(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colours: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<usize> = mask_vertices(g.neighbors(v)).into_iter().map(|w| colours[w]).collect();
                nbrs.sort_unstable();
                (colours[v], nbrs)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colours = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return colours;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Allowed vertices for each position.
    cells: Vec<u32>,
    total_bits: usize,
    placed: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, used: u32, prefix: u64) {
        let n = self.g.order();
        if pos == n {
            if self.best.as_ref().is_none_or(|(code, _)| prefix < *code) {
                self.best = Some((prefix, self.placed.clone()));
            }
            return;
        }
        let len = pos * (pos + 1) / 2;
        for v in mask_vertices(self.cells[pos] & !used) {
            let column = self.placed.iter().fold(0u64, |acc, &u| (acc << 1) | self.g.has_edge(u, v) as u64);
            let next = (prefix << pos) | column;
            if let Some((code, _)) = &self.best {
                if next > code >> (self.total_bits - len) {
                    continue;
                }
            }
            self.placed.push(v);
            self.run(pos + 1, used | (1 << v), next);
            self.placed.pop();
        }
    }
}

/// Returns the canonical relabelling of `g` together with the permutation
/// used (`perm[v]` is the new label of `v`).
pub(crate) fn canonical_labeling(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.order();
    order_range(n, 0, CANONICAL_MAX_ORDER)?;
    let colours = refined_colours(g);
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| colours[v]);
    let cells = by_colour
        .iter()
        .map(|&v| (0..n).filter(|&w| colours[w] == colours[v]).fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let mut search = Search {
        g,
        cells,
        total_bits: n * n.saturating_sub(1) / 2,
        placed: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, 0);
    let (_, order) = search.best.expect("at least one labelling");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((g.relabel(&perm)?, perm))
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// graph6 bytes of the canonical representative: equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(graph6_encode(&canonical_graph(g)?).into_bytes())
}
