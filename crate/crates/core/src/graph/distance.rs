use std::collections::VecDeque;

use serde::Serialize;

use super::{Digraph, Graph};
use crate::error::{Error, Result};

/// All-pairs distances and the scalars derived from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceInfo {
    pub dist: Vec<Vec<u64>>,
    /// Row sums of `dist`.
    pub transmissions: Vec<u64>,
    /// Column sums; only for digraphs.
    pub in_transmissions: Option<Vec<u64>>,
    pub diameter: u64,
    /// Shortest cycle (graphs) or dicycle (digraphs); `None` for forests.
    pub girth: Option<u64>,
    /// Only for graphs.
    pub wiener: Option<u64>,
    pub directed: bool,
}

fn bfs_from<'a>(n: usize, src: usize, next: impl Fn(usize) -> &'a [usize]) -> Vec<Option<u64>> {
    let mut d = vec![None; n];
    d[src] = Some(0);
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        let du = d[u].unwrap();
        for &v in next(u) {
            if d[v].is_none() {
                d[v] = Some(du + 1);
                q.push_back(v);
            }
        }
    }
    d
}

fn collect_rows(rows: Vec<Vec<Option<u64>>>) -> Result<Vec<Vec<u64>>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|x| x.ok_or(Error::Disconnected)).collect())
        .collect()
}

impl DistanceInfo {
    pub fn of_graph(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n == 0 {
            return Err(Error::InvalidInput("empty graph".into()));
        }
        let dist = collect_rows((0..n).map(|s| bfs_from(n, s, |u| g.neighbors(u))).collect())?;
        let transmissions: Vec<u64> = dist.iter().map(|r| r.iter().sum()).collect();
        let total: u64 = transmissions.iter().sum();
        Ok(DistanceInfo {
            diameter: dist.iter().flatten().copied().max().unwrap_or(0),
            girth: graph_girth(g),
            wiener: Some(total / 2),
            transmissions,
            in_transmissions: None,
            dist,
            directed: false,
        })
    }

    pub fn of_digraph(d: &Digraph) -> Result<Self> {
        let n = d.order();
        if n == 0 {
            return Err(Error::InvalidInput("empty digraph".into()));
        }
        let dist =
            collect_rows((0..n).map(|s| bfs_from(n, s, |u| d.out_neighbors(u))).collect())?;
        let transmissions = dist.iter().map(|r| r.iter().sum()).collect();
        let in_transmissions = (0..n).map(|j| (0..n).map(|i| dist[i][j]).sum()).collect();
        // A shortest dicycle through v closes with an arc u -> v.
        let girth = (0..n)
            .flat_map(|v| d.in_neighbors(v).iter().map(move |&u| (u, v)))
            .map(|(u, v)| dist[v][u] + 1)
            .min();
        Ok(DistanceInfo {
            diameter: dist.iter().flatten().copied().max().unwrap_or(0),
            girth,
            wiener: None,
            transmissions,
            in_transmissions: Some(in_transmissions),
            dist,
            directed: true,
        })
    }

    pub fn order(&self) -> usize {
        self.dist.len()
    }

    /// `Some(t)` when every vertex has transmission `t`.
    pub fn transmission_regular(&self) -> Option<u64> {
        let t = self.transmissions[0];
        self.transmissions.iter().all(|&x| x == t).then_some(t)
    }

    pub fn sorted_transmissions(&self) -> Vec<u64> {
        let mut t = self.transmissions.clone();
        t.sort_unstable();
        t
    }
}

/// Shortest cycle length by BFS from every vertex.
pub(crate) fn graph_girth(g: &Graph) -> Option<u64> {
    let n = g.order();
    let mut best: Option<u64> = None;
    for s in 0..n {
        let mut d = vec![u64::MAX; n];
        let mut parent = vec![usize::MAX; n];
        d[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in g.neighbors(u) {
                if d[v] == u64::MAX {
                    d[v] = d[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    let len = d[u] + d[v] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_p3() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let info = DistanceInfo::of_graph(&g).unwrap();
        assert_eq!(info.dist, vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        assert_eq!(info.transmissions, vec![3, 2, 3]);
        assert_eq!(info.wiener, Some(4));
        assert_eq!(info.girth, None);
    }

    #[test]
    fn complete_k3() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let info = DistanceInfo::of_graph(&g).unwrap();
        assert_eq!(info.wiener, Some(3));
        assert_eq!(info.girth, Some(3));
        assert_eq!(info.transmission_regular(), Some(2));
    }

    #[test]
    fn table_digraph() {
        let d = Digraph::from_arcs(
            4,
            &[(0, 1), (0, 3), (1, 0), (1, 2), (2, 0), (2, 1), (3, 0), (3, 2)],
        )
        .unwrap();
        let info = DistanceInfo::of_digraph(&d).unwrap();
        assert_eq!(
            info.dist,
            vec![
                vec![0, 1, 2, 1],
                vec![1, 0, 1, 2],
                vec![1, 1, 0, 2],
                vec![1, 2, 1, 0]
            ]
        );
        assert_eq!(info.girth, Some(2));
        assert_eq!(info.wiener, None);
    }

    #[test]
    fn disconnected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(DistanceInfo::of_graph(&g), Err(Error::Disconnected)));
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert!(matches!(DistanceInfo::of_digraph(&d), Err(Error::Disconnected)));
    }

    #[test]
    fn girth_of_petersen_like_cycle() {
        let c7 = Graph::from_edges(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(graph_girth(&c7), Some(7));
        let c6 = Graph::from_edges(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(graph_girth(&c6), Some(6));
    }
}
