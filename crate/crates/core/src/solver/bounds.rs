use super::{adjacency_dimension, SolveMode};
use crate::error::{order_range, Error, Result};
use crate::graph::{distance_matrix, twin_partition, Diameter, Graph};

/// Least `k >= 1` with `k + 2^k >= n`. A graph of order `n` has adjacency
/// dimension at least this, since non-landmarks read only 1/2 vectors.
pub fn lower_bound_population(n: usize) -> usize {
    (1..).find(|&k: &usize| k + (1usize << k.min(40)) >= n).expect("bounded search")
}

/// Each twin class of size `s` forces `s - 1` of its members into every
/// resolving set.
pub fn lower_bound_twins(g: &Graph) -> usize {
    twin_partition(g).classes.iter().map(|c| c.len() - 1).sum()
}

fn path_term(d: usize) -> usize {
    (2 * d + 4) / 5
}

fn connected_diameter(g: &Graph) -> Result<usize> {
    match crate::graph::diameter(g)? {
        Diameter::Disconnected => Err(Error::DisconnectedGraph),
        Diameter::Finite(_) if g.order() < 2 => Err(Error::InvalidParameters("order must be at least 2".into())),
        Diameter::Finite(d) => Ok(d as usize),
    }
}

/// `n - D - 1 + floor((2D + 4) / 5)` for a connected graph of order `n >= 2`
/// and diameter `D`.
pub fn upper_bound_diameter(g: &Graph) -> Result<usize> {
    let d = connected_diameter(g)?;
    Ok(g.order() - d - 1 + path_term(d))
}

/// `floor((2n + 2) / 5)`, the adjacency dimension of `P_n` and `C_n` for `n >= 4`.
pub fn path_cycle_dimension_formula(n: usize) -> Result<usize> {
    order_range(n, 4, usize::MAX)?;
    Ok((2 * n + 2) / 5)
}

/// Vertices of the first shortest path between the lexicographically first
/// pair at maximum distance, listed from one end to the other.
pub fn diametral_path(g: &Graph) -> Result<Vec<usize>> {
    let d = connected_diameter(g)? as u32;
    let dist = distance_matrix(g);
    let n = g.order();
    let (u, v) = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| dist[u][v] == Some(d))
        .expect("diameter is attained");
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        let step = dist[u][cur].expect("connected") - 1;
        cur = (0..n)
            .find(|&p| g.has_edge(cur, p) && dist[u][p] == Some(step))
            .expect("a predecessor on a shortest path");
        path.push(cur);
    }
    path.reverse();
    Ok(path)
}

/// Every vertex off a diametral path together with an adjacency basis of the
/// path itself. Shortest paths are induced, so the path basis still separates
/// the remaining path vertices inside `g`.
pub fn resolving_set_from_diametral_path(g: &Graph) -> Result<Vec<usize>> {
    let path = diametral_path(g)?;
    let sub = g.induced_subgraph(&path)?;
    let basis = adjacency_dimension(&sub, SolveMode::Pruned)?.basis;
    let on_path = crate::graph::mask_of(&path);
    let mut set: Vec<usize> = (0..g.order()).filter(|&v| on_path & (1 << v) == 0).collect();
    set.extend(basis.iter().map(|&i| path[i]));
    set.sort_unstable();
    Ok(set)
}
