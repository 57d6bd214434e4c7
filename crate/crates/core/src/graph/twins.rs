use super::{mask_vertices, Graph, VertexMask};

/// Partition of the vertex set into maximal twin classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes ordered by smallest member; members ascending.
    pub classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    pub fn class_masks(&self) -> Vec<VertexMask> {
        self.classes.iter().map(|c| super::mask_of(c)).collect()
    }

    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Every unordered twin pair `(u, v)` with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.classes
            .iter()
            .flat_map(|c| c.iter().enumerate().flat_map(move |(i, &u)| c[i + 1..].iter().map(move |&v| (u, v))))
    }
}

/// `N(u) \ {v} == N(v) \ {u}` for distinct `u`, `v`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    u != v && (g.neighbors(u) & !(1 << v)) == (g.neighbors(v) & !(1 << u))
}

/// The twin relation is an equivalence on vertices, so each class is grown
/// from its smallest unassigned member.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut unassigned = g.vertex_mask();
    let mut classes = Vec::new();
    while unassigned != 0 {
        let v = unassigned.trailing_zeros() as usize;
        let mut class = 1u32 << v;
        for u in mask_vertices(unassigned & !(1 << v)) {
            if are_twins(g, u, v) {
                class |= 1 << u;
            }
        }
        unassigned &= !class;
        classes.push(mask_vertices(class));
    }
    TwinPartition { classes }
}
