use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, mask_of, Graph, VertexMask};

/// `0` for the vertex itself, `1` for a neighbour, `2` for anything else,
/// including vertices in other components.
pub fn truncated_adjacency(g: &Graph, v: usize, w: usize) -> Result<u8> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    Ok(truncated(g, v, w))
}

#[inline]
fn truncated(g: &Graph, v: usize, w: usize) -> u8 {
    if v == w {
        0
    } else if g.has_edge(v, w) {
        1
    } else {
        2
    }
}

/// Vector of truncated adjacencies to an ordered landmark list, packed two bits
/// per entry (entry `i` at bits `2i..2i+2`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjacencyRepresentation {
    len: u8,
    packed: u64,
}

impl AdjacencyRepresentation {
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        (self.packed >> (2 * i) & 0b11) as u8
    }

    pub fn entries(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn packed(&self) -> u64 {
        self.packed
    }
}

impl fmt::Debug for AdjacencyRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AdjacencyRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_landmarks(g: &Graph, landmarks: &[usize]) -> Result<()> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarkSet);
    }
    let mut seen: VertexMask = 0;
    for &w in landmarks {
        g.check_vertex(w)?;
        if seen & (1 << w) != 0 {
            return Err(Error::DuplicateLandmark(w));
        }
        seen |= 1 << w;
    }
    Ok(())
}

pub fn adjacency_representation(g: &Graph, v: usize, landmarks: &[usize]) -> Result<AdjacencyRepresentation> {
    g.check_vertex(v)?;
    check_landmarks(g, landmarks)?;
    Ok(pack(g, v, landmarks))
}

pub(crate) fn pack(g: &Graph, v: usize, landmarks: &[usize]) -> AdjacencyRepresentation {
    let packed = landmarks
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &w)| acc | (truncated(g, v, w) as u64) << (2 * i));
    AdjacencyRepresentation {
        len: landmarks.len() as u8,
        packed,
    }
}

/// Resolution test that compares full representations of every vertex,
/// landmarks included.
pub(crate) fn resolves_by_representations(g: &Graph, landmarks: &[usize]) -> bool {
    let mut reps: Vec<u64> = (0..g.order()).map(|v| pack(g, v, landmarks).packed).collect();
    reps.sort_unstable();
    reps.windows(2).all(|w| w[0] != w[1])
}

/// Resolution test on non-landmarks only: outside `W` a representation is
/// determined by the neighbourhood trace `N(v) ∩ W`, and each landmark is
/// singled out by its own zero entry.
#[inline]
pub(crate) fn resolves_by_traces(g: &Graph, landmarks: VertexMask) -> bool {
    let mut traces = [0u32; crate::graph::MAX_ORDER];
    let mut len = 0;
    let mut outside = g.vertex_mask() & !landmarks;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        traces[len] = g.neighbors(v) & landmarks;
        len += 1;
    }
    let traces = &mut traces[..len];
    traces.sort_unstable();
    traces.windows(2).all(|w| w[0] != w[1])
}

pub fn is_adjacency_resolving(g: &Graph, landmarks: &[usize]) -> Result<bool> {
    check_landmarks(g, landmarks)?;
    Ok(resolves_by_traces(g, mask_of(landmarks)))
}

/// Exact-distance representation `r(v|W)`; requires a connected graph.
pub fn metric_representation(g: &Graph, v: usize, landmarks: &[usize]) -> Result<Vec<u32>> {
    g.check_vertex(v)?;
    check_landmarks(g, landmarks)?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let dist = distance_matrix(g);
    Ok(landmarks.iter().map(|&w| dist[v][w].expect("connected")).collect())
}

pub fn is_metric_resolving(g: &Graph, landmarks: &[usize]) -> Result<bool> {
    check_landmarks(g, landmarks)?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(metric_resolves(&distance_matrix(g), landmarks))
}

pub(crate) fn metric_resolves(dist: &[Vec<Option<u32>>], landmarks: &[usize]) -> bool {
    let mut reps: Vec<Vec<Option<u32>>> = dist
        .iter()
        .map(|row| landmarks.iter().map(|&w| row[w]).collect())
        .collect();
    reps.sort_unstable();
    reps.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::example_six_vertex;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    const F: usize = 5;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn truncated_values() {
        let p4 = path(4);
        assert_eq!(truncated_adjacency(&p4, 2, 2).unwrap(), 0);
        assert_eq!(truncated_adjacency(&p4, 1, 2).unwrap(), 1);
        assert_eq!(truncated_adjacency(&p4, 0, 3).unwrap(), 2);
        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(truncated_adjacency(&g, 0, 3).unwrap(), 2);
        assert!(truncated_adjacency(&g, 0, 4).is_err());
    }

    #[test]
    fn six_vertex_example_representations() {
        let g = example_six_vertex(0, 0).unwrap();
        let rep = |v| adjacency_representation(&g, v, &[A, B]).unwrap().entries();
        assert_eq!(rep(C), vec![1, 2]);
        assert_eq!(rep(D), vec![1, 1]);
        assert_eq!(rep(E), vec![2, 1]);
        assert_eq!(rep(F), vec![2, 2]);
        assert_eq!(rep(A), vec![0, 2]);
        assert!(is_adjacency_resolving(&g, &[A, B]).unwrap());
        assert_eq!(adjacency_representation(&g, D, &[A, B]).unwrap().to_string(), "(1,1)");
    }

    #[test]
    fn self_representation_is_zero() {
        let g = path(5);
        for w in 0..5 {
            assert_eq!(adjacency_representation(&g, w, &[w]).unwrap().entries(), vec![0]);
        }
    }

    #[test]
    fn landmark_errors() {
        let g = path(3);
        assert_eq!(adjacency_representation(&g, 0, &[]), Err(Error::EmptyLandmarkSet));
        assert_eq!(adjacency_representation(&g, 0, &[1, 1]), Err(Error::DuplicateLandmark(1)));
        assert_eq!(is_adjacency_resolving(&g, &[]), Err(Error::EmptyLandmarkSet));
        assert!(is_adjacency_resolving(&g, &[3]).is_err());
    }

    #[test]
    fn resolving_examples() {
        let k4 = Graph::complete(4).unwrap();
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(!is_adjacency_resolving(&k4, &[a, b]).unwrap());
            }
        }
        assert!(is_adjacency_resolving(&path(3), &[0]).unwrap());
    }

    #[test]
    fn metric_examples() {
        let p4 = path(4);
        assert_eq!(metric_representation(&p4, 3, &[0]).unwrap(), vec![3]);
        assert!(is_metric_resolving(&p4, &[0]).unwrap());
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_metric_resolving(&c4, &[0]).unwrap());
        let k23 = Graph::empty(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        for v in 0..5 {
            assert!(!is_metric_resolving(&k23, &[v]).unwrap());
        }
        let disconnected = Graph::empty(2).unwrap();
        assert_eq!(is_metric_resolving(&disconnected, &[0]), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn trace_and_representation_checks_agree_on_small_graphs() {
        for g in crate::graph::enumerate_labeled(4).unwrap() {
            for mask in 1u32..16 {
                let w = crate::graph::mask_vertices(mask);
                assert_eq!(resolves_by_traces(&g, mask), resolves_by_representations(&g, &w));
            }
        }
    }
}
