use std::collections::HashMap;

use serde::Serialize;

use super::canon::{canon_masks, masks};
use super::distance::graph_girth;
use super::{DistanceInfo, Graph};
use crate::error::Result;

pub const MAX_PLANARITY_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Planarity {
    Planar,
    Nonplanar,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub edges: usize,
    pub diameter: u64,
    pub girth: Option<u64>,
    pub planar: Planarity,
    pub degree_sequence: Vec<usize>,
    pub transmission_sequence: Vec<u64>,
    pub transmission_regular: bool,
    pub complement_component_count: usize,
}

pub fn structural_report(g: &Graph) -> Result<StructuralReport> {
    let info = DistanceInfo::of_graph(g)?;
    Ok(StructuralReport {
        edges: g.size(),
        diameter: info.diameter,
        girth: graph_girth(g),
        planar: planarity(g),
        degree_sequence: g.degree_sequence(),
        transmission_sequence: info.sorted_transmissions(),
        transmission_regular: info.transmission_regular().is_some(),
        complement_component_count: g.complement().component_count(),
    })
}

/// A block with its vertices in the host graph; `graph` uses ids
/// `0..vertices.len()` in the order of `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Maximal 2-connected pieces (bridges are blocks of order two).
pub fn biconnected_blocks(g: &Graph) -> Vec<Block> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    fn dfs(
        g: &Graph,
        u: usize,
        parent: usize,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<(usize, usize)>,
        blocks: &mut Vec<Vec<usize>>,
    ) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        for &v in g.neighbors(u) {
            if disc[v] == usize::MAX {
                stack.push((u, v));
                dfs(g, v, u, disc, low, time, stack, blocks);
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut verts = Vec::new();
                    while let Some((a, b)) = stack.pop() {
                        verts.push(a);
                        verts.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    blocks.push(verts);
                }
            } else if v != parent && disc[v] < disc[u] {
                stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        }
    }

    let mut raw = Vec::new();
    for s in 0..n {
        if disc[s] == usize::MAX {
            dfs(g, s, usize::MAX, &mut disc, &mut low, &mut time, &mut stack, &mut raw);
        }
    }
    raw.sort();
    for verts in raw {
        let graph = g.induced(&verts);
        blocks.push(Block { vertices: verts, graph });
    }
    blocks
}

pub fn planarity(g: &Graph) -> Planarity {
    if g.order() > MAX_PLANARITY_ORDER {
        return Planarity::Unknown;
    }
    let mut memo = HashMap::new();
    let planar = biconnected_blocks(g)
        .iter()
        .all(|b| planar_rec(masks(&b.graph), &mut memo));
    if planar {
        Planarity::Planar
    } else {
        Planarity::Nonplanar
    }
}

fn remove_vertex(adj: &mut Vec<u32>, v: usize) {
    adj.remove(v);
    let lo = (1u32 << v) - 1;
    for row in adj.iter_mut() {
        *row = (*row & lo) | ((*row >> (v + 1)) << v);
    }
}

// Drop vertices of degree at most one and suppress degree-two vertices.
fn reduce(mut adj: Vec<u32>) -> Vec<u32> {
    loop {
        let Some(v) = (0..adj.len()).find(|&v| adj[v].count_ones() <= 2) else {
            return adj;
        };
        if adj[v].count_ones() == 2 {
            let a = adj[v].trailing_zeros() as usize;
            let b = 31 - adj[v].leading_zeros() as usize;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        for row in adj.iter_mut() {
            *row &= !(1 << v);
        }
        remove_vertex(&mut adj, v);
    }
}

fn edge_count(adj: &[u32]) -> usize {
    adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
}

fn is_k5_or_k33(adj: &[u32]) -> bool {
    match adj.len() {
        5 => adj.iter().all(|r| r.count_ones() == 4),
        6 => {
            if !adj.iter().all(|r| r.count_ones() == 3) {
                return false;
            }
            // Bipartite 3-regular on six vertices is K3,3.
            let side = adj[0];
            (0..6).all(|v| {
                let in_side = side >> v & 1 == 1;
                let nb = adj[v];
                if in_side {
                    nb & side == 0
                } else {
                    nb & side == nb
                }
            })
        }
        _ => false,
    }
}

fn planar_rec(adj: Vec<u32>, memo: &mut HashMap<(usize, u128), bool>) -> bool {
    let adj = reduce(adj);
    let n = adj.len();
    let m = edge_count(&adj);
    if n <= 4 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    if is_k5_or_k33(&adj) {
        return false;
    }
    let key = (n, canon_masks(&adj, None).code);
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let mut result = true;
    'edges: for u in 0..n {
        let mut m = adj[u] >> (u + 1);
        while m != 0 {
            let v = u + 1 + m.trailing_zeros() as usize;
            m &= m - 1;
            let mut del = adj.clone();
            del[u] &= !(1 << v);
            del[v] &= !(1 << u);
            if !planar_rec(del, memo) {
                result = false;
                break 'edges;
            }
            let mut con = adj.clone();
            con[u] |= con[v];
            for row in con.iter_mut() {
                if *row >> v & 1 == 1 {
                    *row |= 1 << u;
                }
                *row &= !(1 << v);
            }
            con[u] &= !(1 << u);
            remove_vertex(&mut con, v);
            if !planar_rec(con, memo) {
                result = false;
                break 'edges;
            }
        }
    }
    memo.insert(key, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn planarity_small() {
        assert_eq!(planarity(&complete(5)), Planarity::Nonplanar);
        assert_eq!(planarity(&complete(4)), Planarity::Planar);
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(planarity(&k33), Planarity::Nonplanar);
        assert_eq!(planarity(&petersen()), Planarity::Nonplanar);
        // Cube graph is planar.
        let q3 = Graph::from_edges(
            8,
            &[
                (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3),
                (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7),
            ],
        )
        .unwrap();
        assert_eq!(planarity(&q3), Planarity::Planar);
        // K6 minus a perfect matching (octahedron) is planar.
        let mut e = complete(6).edges();
        e.retain(|&(a, b)| b != a + 3);
        assert_eq!(planarity(&Graph::from_edges(6, &e).unwrap()), Planarity::Planar);
    }

    #[test]
    fn subdivided_k5_is_nonplanar() {
        let mut e: Vec<(usize, usize)> = complete(5).edges();
        e.retain(|&x| x != (0, 1));
        e.push((0, 5));
        e.push((5, 1));
        assert_eq!(planarity(&Graph::from_edges(6, &e).unwrap()), Planarity::Nonplanar);
    }

    #[test]
    fn report_examples() {
        let k4 = complete(4);
        let r = structural_report(&k4).unwrap();
        assert_eq!((r.planar, r.diameter, r.girth), (Planarity::Planar, 1, Some(3)));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = structural_report(&star).unwrap();
        assert_eq!(r.degree_sequence, vec![1, 1, 1, 3]);
        assert_eq!(r.transmission_sequence, vec![3, 5, 5, 5]);
        assert!(!r.transmission_regular);
        assert_eq!(r.girth, None);
        assert_eq!(r.complement_component_count, 2);
    }

    #[test]
    fn blocks() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = biconnected_blocks(&p4);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|x| x.graph.order() == 2));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(biconnected_blocks(&c5).len(), 1);
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let b = biconnected_blocks(&bowtie);
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|x| x.graph.order() == 3 && x.graph.size() == 3));
    }
}
