//! Small simple graphs stored as bit-packed adjacency rows.
//!
//! A [`Graph`] holds at most [`MAX_ORDER`] vertices, so every neighbourhood
//! fits in one `u32` and vertex sets are passed around as bit masks.

mod canon;
mod distance;
mod enumerate;
mod graph6;
mod twins;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_graph, CANONICAL_MAX_ORDER};
pub use distance::{bfs_distances, diameter, distance_matrix, Diameter, DistanceVector};
pub use enumerate::{enumerate_graphs, enumerate_labeled, ENUMERATE_MAX_ORDER, LABELED_MAX_ORDER};
pub use graph6::{graph6_decode, graph6_encode};
pub use twins::{are_twins, twin_partition, TwinPartition};

pub const MAX_ORDER: usize = 32;

/// Vertex set as a bit mask: bit `v` set iff `v` is a member.
pub type VertexMask = u32;

/// Undirected simple graph on vertices `0..order`.
///
/// Row `v` has bit `w` set iff `vw` is an edge. Rows are symmetric, loop-free,
/// and carry no bits at positions `>= order`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u8,
    rows: [u32; MAX_ORDER],
}

pub(crate) fn full_mask(n: usize) -> VertexMask {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn mask_of(vertices: &[usize]) -> VertexMask {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

pub fn mask_vertices(mask: VertexMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::order(n));
        }
        Ok(Graph {
            order: n as u8,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from an edge list. Pairs are symmetrized and duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (v, w) in edges {
            if v >= n || w >= n || v == w {
                return Err(Error::InvalidEdge(v, w));
            }
            g.rows[v] |= 1 << w;
            g.rows[w] |= 1 << v;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating the structural invariants.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let full = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 || row & (1 << v) != 0 {
                return Err(Error::InvalidEdge(v, v));
            }
            g.rows[v] = row;
        }
        for v in 0..n {
            for w in mask_vertices(g.rows[v]) {
                if g.rows[w] & (1 << v) == 0 {
                    return Err(Error::InvalidEdge(v, w));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.order())
    }

    /// Open neighbourhood of `v` as a mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows[..self.order()]
    }

    #[inline]
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.rows[v] & (1 << w) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, ordered by `j` then `i`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.order()).flat_map(move |j| (0..j).filter(move |&i| self.has_edge(i, j)).map(move |i| (i, j)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let mut g = *self;
        for v in 0..self.order() {
            g.rows[v] = !self.rows[v] & full & !(1 << v);
        }
        g
    }

    /// `self ∪ other` with `other`'s vertices shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order() + other.order();
        let mut g = Graph::empty(n)?;
        let shift = self.order();
        g.rows[..shift].copy_from_slice(self.rows());
        for (v, &row) in other.rows().iter().enumerate() {
            g.rows[shift + v] = row << shift;
        }
        Ok(g)
    }

    /// `self ∨ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = g.vertex_mask() & !left;
        for v in 0..g.order() {
            g.rows[v] |= if left & (1 << v) != 0 { right } else { left };
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for &v in vertices {
            self.check_vertex(v)?;
        }
        for (i, &v) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate() {
                if i != j && self.has_edge(v, w) {
                    g.rows[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n || mask_of(perm) != full_mask(n) {
            return Err(Error::InvalidParameters(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut g = Graph::empty(n)?;
        for (v, w) in self.edges() {
            g.rows[perm[v]] |= 1 << perm[w];
            g.rows[perm[w]] |= 1 << perm[v];
        }
        Ok(g)
    }

    /// Vertices reachable from `source`, as a mask.
    pub fn component_of(&self, source: usize) -> VertexMask {
        let mut seen = 1u32 << source;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_vertices(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(0) == self.vertex_mask()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", graph6_encode(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn from_edges_builds_p4() {
        let g = path(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn no_edges_is_complement_of_k3() {
        let g = Graph::from_edges(3, []).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g, Graph::complete(3).unwrap().complement());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(33, []), Err(Error::order(33)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::InvalidEdge(0, 3)));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::InvalidEdge(1, 1)));
    }

    #[test]
    fn order_32_uses_every_bit() {
        let k = Graph::complete(32).unwrap();
        assert_eq!(k.edge_count(), 32 * 31 / 2);
        assert_eq!(k.complement().edge_count(), 0);
        assert!(k.is_connected());
    }

    #[test]
    fn complement_of_k4_is_empty() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
        let e0 = Graph::empty(0).unwrap();
        assert_eq!(e0.complement(), e0);
    }

    #[test]
    fn p4_complement_is_p4_relabelled() {
        // complement of a-b-c-d is the path b-d-a-c
        let g = path(4);
        let expected = Graph::from_edges(4, [(1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(g.complement(), expected);
    }

    #[test]
    fn join_and_union_counts() {
        let k1 = Graph::complete(1).unwrap();
        let star = k1.join(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(star.order(), 5);
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(0), 4);

        let k3k1 = Graph::complete(3).unwrap().disjoint_union(&k1).unwrap();
        assert_eq!(k3k1.order(), 4);
        assert_eq!(k3k1.edge_count(), 3);
        assert!(!k3k1.is_connected());

        let k2 = Graph::complete(2).unwrap();
        let g = k2.join(&k2.disjoint_union(&k1).unwrap()).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 1 + 1 + 6);

        let e0 = Graph::empty(0).unwrap();
        assert_eq!(e0.join(&k3k1).unwrap(), k3k1);
        assert_eq!(e0.disjoint_union(&k3k1).unwrap(), k3k1);
        assert!(Graph::complete(21).unwrap().join(&k3k1.join(&k3k1).unwrap().join(&k3k1).unwrap()).is_err());
    }

    #[test]
    fn from_rows_validates() {
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert!(Graph::from_rows(&[0b100, 0b000]).is_err());
    }

    #[test]
    fn induced_and_relabel() {
        let g = path(5);
        let sub = g.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(sub, path(3));
        let r = g.relabel(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(r, g);
        assert!(g.relabel(&[0, 0, 1, 2, 3]).is_err());
    }
}
