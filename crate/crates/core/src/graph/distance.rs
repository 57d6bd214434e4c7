use std::fmt;

use super::{mask_vertices, Graph};
use crate::error::{Error, Result};

/// Shortest-path distances from one source; `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: usize,
    pub distances: Vec<Option<u32>>,
}

impl DistanceVector {
    pub fn get(&self, v: usize) -> Option<u32> {
        self.distances[v]
    }

    /// Largest finite distance.
    pub fn eccentricity(&self) -> u32 {
        self.distances.iter().flatten().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(u32),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => f.write_str("disconnected"),
        }
    }
}

/// Level-synchronous BFS over bit masks.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<DistanceVector> {
    g.check_vertex(source)?;
    let mut distances = vec![None; g.order()];
    distances[source] = Some(0);
    let mut seen = 1u32 << source;
    let mut frontier = seen;
    let mut level = 0;
    while frontier != 0 {
        level += 1;
        let mut next = 0;
        for v in mask_vertices(frontier) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        for v in mask_vertices(next) {
            distances[v] = Some(level);
        }
        seen |= next;
        frontier = next;
    }
    Ok(DistanceVector { source, distances })
}

/// All-pairs distances, row `v` being `bfs_distances(g, v)`.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<Option<u32>>> {
    (0..g.order())
        .map(|v| bfs_distances(g, v).expect("vertex in range").distances)
        .collect()
}

/// Maximum pairwise distance. A single vertex has diameter 0.
pub fn diameter(g: &Graph) -> Result<Diameter> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(Diameter::Disconnected);
    }
    let d = (0..g.order())
        .map(|v| bfs_distances(g, v).expect("vertex in range").eccentricity())
        .max()
        .unwrap_or(0);
    Ok(Diameter::Finite(d))
}
