//! Generators for the named graph families.
//!
//! Edge-choice masks use the same pair order as graph6: bit `p` selects the
//! `p`-th pair of `(0,1), (0,2), (1,2), (0,3), ...` among the vertices involved.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// A parameterised family member. Expansion is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// `K_{s,t}`
    CompleteBipartite { s: usize, t: usize },
    /// `K_s ∨ complement(K_t)`
    JoinCompleteEmpty { s: usize, t: usize },
    /// `K_s ∨ (K_t ∪ K_1)`
    JoinCompleteCliquePlusOne { s: usize, t: usize },
    ExtremalDiameter { n: usize, diameter: usize },
    OmegaMember { k: usize, v_edges: u64, u_edges: u128 },
    ExampleSix { h_edges: u8, k_edges: u8 },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Edges among `vertices` selected by `mask`, in graph6 pair order.
fn masked_edges(vertices: &[usize], mask: u128) -> impl Iterator<Item = (usize, usize)> + '_ {
    pairs(vertices.len())
        .enumerate()
        .filter(move |(p, _)| mask >> p & 1 == 1)
        .map(|(_, (i, j))| (vertices[i], vertices[j]))
}

fn check_mask(mask: u128, width: usize, what: &str) -> Result<()> {
    if width < 128 && mask >> width != 0 {
        return Err(invalid(format!("{what} mask {mask} wider than {width} bits")));
    }
    Ok(())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `v_0 .. v_D` plus a clique `u_1 .. u_{n-D-1}` joined to `v_0`, `v_1`, `v_2`.
/// With `n = D + 1` this is just the path.
pub fn extremal_diameter_graph(n: usize, diameter: usize) -> Result<Graph> {
    if diameter < 3 {
        return Err(invalid("extremal construction needs D >= 3"));
    }
    if n < diameter + 1 || n > MAX_ORDER {
        return Err(invalid(format!("extremal construction needs D + 1 <= n <= {MAX_ORDER}")));
    }
    let spine = (1..=diameter).map(|i| (i - 1, i));
    let extra: Vec<usize> = (diameter + 1..n).collect();
    let attach = extra.iter().flat_map(|&u| (0..3).map(move |v| (v, u)));
    let clique = masked_edges(&extra, u128::MAX);
    Graph::from_edges(n, spine.chain(attach).chain(clique))
}

/// Member of the order-`k + 2^k` family with landmarks `0..k`.
///
/// Vertex `k + j` stands for the `j`-th vector in lexicographic order of
/// `{1,2}^k`, and is adjacent to landmark `i` iff entry `i` of that vector is 1.
pub fn omega_member(k: usize, v_edges: u64, u_edges: u128) -> Result<Graph> {
    if k == 0 || k + (1 << k.min(6)) > MAX_ORDER {
        return Err(invalid(format!("omega family needs 1 <= k and k + 2^k <= {MAX_ORDER}")));
    }
    let m = 1usize << k;
    check_mask(v_edges as u128, choose2(k), "landmark")?;
    check_mask(u_edges, choose2(m), "profile")?;
    let landmarks: Vec<usize> = (0..k).collect();
    let profiles: Vec<usize> = (k..k + m).collect();
    // entry i of vector j is 1 iff bit (k - 1 - i) of j is clear
    let cross = (0..m).flat_map(|j| (0..k).filter(move |&i| j >> (k - 1 - i) & 1 == 0).map(move |i| (i, k + j)));
    let edges: Vec<(usize, usize)> = masked_edges(&landmarks, v_edges as u128)
        .chain(masked_edges(&profiles, u_edges))
        .chain(cross)
        .collect();
    Graph::from_edges(k + m, edges)
}

/// Number of labelled edge choices in the order-`k + 2^k` family.
pub fn omega_labeled_count(k: usize) -> u128 {
    1u128 << (choose2(k) + choose2(1 << k))
}

/// Every labelled member for `k <= 2`.
pub fn omega_members(k: usize) -> Result<Vec<Graph>> {
    if !(1..=2).contains(&k) {
        return Err(invalid("labelled omega enumeration supports k in 1..=2"));
    }
    let (vw, uw) = (choose2(k), choose2(1 << k));
    (0..1u64 << vw)
        .flat_map(|v| (0..1u128 << uw).map(move |u| (v, u)))
        .map(|(v, u)| omega_member(k, v, u))
        .collect()
}

/// Vertices `a..f` = `0..6` with fixed edges `ac, ad, bd, be`; `h_edges` picks
/// the edge `ab`, `k_edges` picks edges among `c, d, e, f`.
pub fn example_six_vertex(h_edges: u8, k_edges: u8) -> Result<Graph> {
    check_mask(h_edges as u128, 1, "H")?;
    check_mask(k_edges as u128, 6, "K")?;
    let fixed = [(0, 2), (0, 3), (1, 3), (1, 4)];
    let edges: Vec<(usize, usize)> = fixed
        .into_iter()
        .chain(masked_edges(&[0, 1], h_edges as u128))
        .chain(masked_edges(&[2, 3, 4, 5], k_edges as u128))
        .collect();
    Graph::from_edges(6, edges)
}

pub fn make_named(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match *spec {
        Path(n) => path(n),
        Cycle(n) => cycle(n),
        Complete(n) if n >= 1 => Graph::complete(n),
        Empty(n) if n >= 1 => Graph::empty(n),
        Complete(_) | Empty(_) => Err(invalid("needs n >= 1")),
        CompleteBipartite { s, t } if s >= 1 && t >= 1 => Graph::empty(s)?.join(&Graph::empty(t)?),
        CompleteBipartite { .. } => Err(invalid("K_{s,t} needs s, t >= 1")),
        JoinCompleteEmpty { s, t } if s >= 1 && t >= 2 => Graph::complete(s)?.join(&Graph::empty(t)?),
        JoinCompleteEmpty { .. } => Err(invalid("K_s join empty(t) needs s >= 1, t >= 2")),
        JoinCompleteCliquePlusOne { s, t } if s >= 1 && t >= 1 => {
            Graph::complete(s)?.join(&Graph::complete(t)?.disjoint_union(&Graph::complete(1)?)?)
        }
        JoinCompleteCliquePlusOne { .. } => Err(invalid("K_s join (K_t + K_1) needs s, t >= 1")),
        ExtremalDiameter { n, diameter } => extremal_diameter_graph(n, diameter),
        OmegaMember { k, v_edges, u_edges } => omega_member(k, v_edges, u_edges),
        ExampleSix { h_edges, k_edges } => example_six_vertex(h_edges, k_edges),
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        make_named(self)
    }

    fn kind(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path(_) => "path",
            Cycle(_) => "cycle",
            Complete(_) => "complete",
            Empty(_) => "empty",
            CompleteBipartite { .. } => "kst",
            JoinCompleteEmpty { .. } => "join-empty",
            JoinCompleteCliquePlusOne { .. } => "join-clique-k1",
            ExtremalDiameter { .. } => "extremal",
            OmegaMember { .. } => "omega",
            ExampleSix { .. } => "example6",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        write!(f, "{}:", self.kind())?;
        match self {
            Path(n) | Cycle(n) | Complete(n) | Empty(n) => write!(f, "{n}"),
            CompleteBipartite { s, t } | JoinCompleteEmpty { s, t } | JoinCompleteCliquePlusOne { s, t } => {
                write!(f, "{s},{t}")
            }
            ExtremalDiameter { n, diameter } => write!(f, "{n},{diameter}"),
            OmegaMember { k, v_edges, u_edges } => write!(f, "{k},{v_edges},{u_edges}"),
            ExampleSix { h_edges, k_edges } => write!(f, "{h_edges},{k_edges}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `kind:a,b,...`, e.g. `path:10`, `kst:2,3`, `extremal:8,5`, `omega:2,0,17`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid(format!("cannot parse family spec {s:?}"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<u128> = args
            .split(',')
            .map(|a| a.trim().parse::<u128>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let small = |i: usize| usize::try_from(nums[i]).map_err(|_| bad());
        let arity = |k: usize| if nums.len() == k { Ok(()) } else { Err(bad()) };
        use FamilySpec::*;
        let spec = match kind.trim() {
            "path" | "cycle" | "complete" | "empty" => {
                arity(1)?;
                let n = small(0)?;
                match kind.trim() {
                    "path" => Path(n),
                    "cycle" => Cycle(n),
                    "complete" => Complete(n),
                    _ => Empty(n),
                }
            }
            "kst" | "join-empty" | "join-clique-k1" => {
                arity(2)?;
                let (s, t) = (small(0)?, small(1)?);
                match kind.trim() {
                    "kst" => CompleteBipartite { s, t },
                    "join-empty" => JoinCompleteEmpty { s, t },
                    _ => JoinCompleteCliquePlusOne { s, t },
                }
            }
            "extremal" => {
                arity(2)?;
                ExtremalDiameter {
                    n: small(0)?,
                    diameter: small(1)?,
                }
            }
            "omega" => {
                arity(3)?;
                OmegaMember {
                    k: small(0)?,
                    v_edges: u64::try_from(nums[1]).map_err(|_| bad())?,
                    u_edges: nums[2],
                }
            }
            "example6" => {
                arity(2)?;
                ExampleSix {
                    h_edges: u8::try_from(nums[0]).map_err(|_| bad())?,
                    k_edges: u8::try_from(nums[1]).map_err(|_| bad())?,
                }
            }
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

impl TryFrom<String> for FamilySpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FamilySpec> for String {
    fn from(spec: FamilySpec) -> String {
        spec.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, diameter, graph6_encode, twin_partition, Diameter};
    use crate::solver::{adjacency_dimension, is_adjacency_resolving, SolveMode};

    fn dim2(g: &Graph) -> usize {
        adjacency_dimension(g, SolveMode::Pruned).unwrap().value
    }

    #[test]
    fn named_examples() {
        let k23 = make_named(&"kst:2,3".parse().unwrap()).unwrap();
        assert_eq!((k23.order(), k23.edge_count()), (5, 6));
        let j = make_named(&FamilySpec::JoinCompleteEmpty { s: 3, t: 2 }).unwrap();
        assert_eq!((j.order(), j.edge_count()), (5, 3 + 6));
        let c4 = make_named(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(c4, Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap());
        let star = make_named(&FamilySpec::CompleteBipartite { s: 1, t: 4 }).unwrap();
        assert_eq!(star, Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap());
        let g = make_named(&FamilySpec::JoinCompleteCliquePlusOne { s: 2, t: 2 }).unwrap();
        assert_eq!(dim2(&g), 3);
    }

    #[test]
    fn invalid_parameters() {
        assert!(make_named(&FamilySpec::Cycle(2)).is_err());
        assert!(make_named(&FamilySpec::JoinCompleteEmpty { s: 1, t: 1 }).is_err());
        assert!(make_named(&FamilySpec::CompleteBipartite { s: 0, t: 3 }).is_err());
        assert!(extremal_diameter_graph(5, 5).is_err());
        assert!(extremal_diameter_graph(5, 2).is_err());
        assert!(omega_member(5, 0, 0).is_err());
        assert!(omega_member(2, 2, 0).is_err());
        assert!(omega_member(2, 0, 64).is_err());
        assert!(example_six_vertex(2, 0).is_err());
        assert!(example_six_vertex(0, 64).is_err());
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["path:4", "cycle:9", "complete:3", "empty:2", "kst:2,3", "join-empty:1,4", "join-clique-k1:2,2", "extremal:8,5", "omega:2,0,17", "example6:1,63"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        for s in ["path", "path:", "path:1,2", "blob:3", "kst:2", "omega:2,x,1", "example6:1,300"] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s}");
        }
        let json = serde_json::to_string(&FamilySpec::Path(4)).unwrap();
        assert_eq!(json, "\"path:4\"");
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), FamilySpec::Path(4));
    }

    #[test]
    fn path_four_graph6() {
        assert_eq!(graph6_encode(&path(4).unwrap()), "Ch");
    }

    #[test]
    fn extremal_degenerates_to_a_path() {
        for d in 3..9 {
            assert_eq!(extremal_diameter_graph(d + 1, d).unwrap(), path(d + 1).unwrap());
        }
    }

    #[test]
    fn extremal_order_and_diameter() {
        for d in 3..=8 {
            for n in d + 1..=12 {
                let g = extremal_diameter_graph(n, d).unwrap();
                assert_eq!(g.order(), n);
                assert_eq!(diameter(&g).unwrap(), Diameter::Finite(d as u32));
            }
        }
    }

    #[test]
    fn extremal_twin_class() {
        // v_1 and every u_j share the closed neighbourhood {v_0, v_1, v_2, u_*}
        let g = extremal_diameter_graph(9, 5).unwrap();
        assert!(twin_partition(&g).classes.contains(&vec![1, 6, 7, 8]));
    }

    #[test]
    fn extremal_dimensions() {
        assert_eq!(dim2(&extremal_diameter_graph(8, 5).unwrap()), 4);
        assert_eq!(dim2(&extremal_diameter_graph(9, 7).unwrap()), 4);
    }

    #[test]
    fn omega_k1_members() {
        let members = omega_members(1).unwrap();
        assert_eq!(members.len(), 2);
        // v ~ u_(1); u_(2) isolated or attached to u_(1)
        assert_eq!(members[0], Graph::from_edges(3, [(0, 1)]).unwrap());
        assert_eq!(members[1], Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        for g in &members {
            assert_eq!(dim2(g), 1);
        }
    }

    #[test]
    fn omega_k2_matches_six_vertex_example() {
        // lexicographic profiles (1,1),(1,2),(2,1),(2,2) play the roles of d, c, e, f
        let omega = omega_member(2, 0, 0).unwrap();
        let example = example_six_vertex(0, 0).unwrap();
        assert_eq!(canonical_form(&omega).unwrap(), canonical_form(&example).unwrap());
        assert_eq!(dim2(&omega), 2);
        assert_eq!(omega_labeled_count(2), 128);
        assert_eq!(omega_labeled_count(1), 2);
        assert_eq!(omega_members(2).unwrap().len(), 128);
    }

    #[test]
    fn omega_landmarks_resolve() {
        for (v, u) in [(0, 0), (1, 63), (0, 17)] {
            let g = omega_member(2, v, u).unwrap();
            assert!(is_adjacency_resolving(&g, &[0, 1]).unwrap());
        }
        let g = omega_member(3, 5, (1 << 28) - 1).unwrap();
        assert_eq!(g.order(), 11);
        assert!(is_adjacency_resolving(&g, &[0, 1, 2]).unwrap());
        assert_eq!(dim2(&g), 3);
        let g = omega_member(4, 0, 0).unwrap();
        assert_eq!(g.order(), 20);
        assert!(is_adjacency_resolving(&g, &[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn six_vertex_example_all_masks() {
        for h in 0..2 {
            for k in 0..64 {
                let g = example_six_vertex(h, k).unwrap();
                let r = adjacency_dimension(&g, SolveMode::Pruned).unwrap();
                assert_eq!(r.value, 2);
                assert!(is_adjacency_resolving(&g, &[0, 1]).unwrap());
            }
        }
    }
}
