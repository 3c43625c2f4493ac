//! Simple graphs and digraphs on contiguous vertex ids `0..n`.
//!
//! Both types are immutable once built. Operations that "modify" a graph
//! (adding an edge, reversing arcs, taking a complement) return a new value.

mod canon;
mod distance;
mod enumerate;
mod graph6;
mod structure;

pub use canon::{canonical_form, canonical_graph, is_isomorphic, CanonicalForm, MAX_CANON_ORDER};
pub use distance::DistanceInfo;
pub use enumerate::{
    enumerate_connected_graphs, enumerate_trees, read_catalog, MAX_ENUM_ORDER, MAX_TREE_ORDER,
};
pub use graph6::{
    encode_digraph6, encode_graph6, parse_digraph6, parse_edge_list, parse_graph6,
};
pub use structure::{biconnected_blocks, structural_report, Block, Planarity, StructuralReport};


use crate::error::{Error, Result};

/// An undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            nbrs: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, adj))
    }

    fn from_matrix(n: usize, adj: Vec<bool>) -> Self {
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        Graph { n, adj, nbrs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_regular(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!("cannot add edge ({u},{v})")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidInput(format!("({u},{v}) is already an edge")));
        }
        let mut adj = self.adj.clone();
        adj[u * self.n + v] = true;
        adj[v * self.n + u] = true;
        Ok(Self::from_matrix(self.n, adj))
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![false; k * k];
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                adj[i * k + j] = self.has_edge(a, b);
            }
        }
        Self::from_matrix(k, adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let adj = (0..n * n)
            .map(|idx| idx / n != idx % n && !self.adj[idx])
            .collect();
        Self::from_matrix(n, adj)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidInput("relabelling is not a permutation".into()));
        }
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for &v in &self.nbrs[u] {
                adj[perm[u] * n + perm[v]] = true;
            }
        }
        Ok(Self::from_matrix(n, adj))
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &v in &self.nbrs[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// The doubly directed digraph with the same distance matrix.
    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_matrix(self.n, self.adj.clone())
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

/// A simple digraph: arcs are ordered pairs of distinct vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "arc ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop arc at vertex {u}")));
            }
            adj[u * n + v] = true;
        }
        Ok(Self::from_matrix(n, adj))
    }

    fn from_matrix(n: usize, adj: Vec<bool>) -> Self {
        let out = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        let inn = (0..n)
            .map(|v| (0..n).filter(|&u| adj[u * n + v]).collect())
            .collect();
        Digraph { n, adj, out, inn }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out[u].iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn non_arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_arc(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        if u == v || u >= self.n || v >= self.n || self.has_arc(u, v) {
            return Err(Error::InvalidInput(format!("cannot add arc ({u},{v})")));
        }
        let mut adj = self.adj.clone();
        adj[u * self.n + v] = true;
        Ok(Self::from_matrix(self.n, adj))
    }

    /// Arc reversal.
    pub fn reverse(&self) -> Digraph {
        let n = self.n;
        let adj = (0..n * n).map(|idx| self.adj[(idx % n) * n + idx / n]).collect();
        Self::from_matrix(n, adj)
    }

    fn reaches_all(&self, from: usize, forward: bool) -> bool {
        let mut seen = vec![false; self.n];
        seen[from] = true;
        let mut stack = vec![from];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            let next = if forward { &self.out[u] } else { &self.inn[u] };
            for &v in next {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n > 0 && self.reaches_all(0, true) && self.reaches_all(0, false)
    }

    pub fn is_doubly_directed(&self) -> bool {
        self.arcs().iter().all(|&(u, v)| self.has_arc(v, u))
    }

    /// `Some(k)` when every vertex has out-degree `k`.
    pub fn out_regular(&self) -> Option<usize> {
        let k = self.out.first().map_or(0, Vec::len);
        self.out.iter().all(|o| o.len() == k).then_some(k)
    }

    /// `Some(k)` when every vertex has in-degree and out-degree `k`.
    pub fn regular(&self) -> Option<usize> {
        let k = self.out_regular()?;
        self.inn.iter().all(|i| i.len() == k).then_some(k)
    }

    /// True when every vertex lies on some doubly directed arc.
    pub fn every_vertex_on_doubly_directed_arc(&self) -> bool {
        (0..self.n).all(|u| self.out[u].iter().any(|&v| self.has_arc(v, u)))
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_arc(u, v) as i64).collect())
            .collect()
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph({}, {:?})", self.n, self.arcs())
    }
}

/// Either kind of input, for operations defined on both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Graph(Graph),
    Digraph(Digraph),
}

impl AnyGraph {
    pub fn order(&self) -> usize {
        match self {
            AnyGraph::Graph(g) => g.order(),
            AnyGraph::Digraph(d) => d.order(),
        }
    }

    pub fn distances(&self) -> Result<DistanceInfo> {
        match self {
            AnyGraph::Graph(g) => DistanceInfo::of_graph(g),
            AnyGraph::Digraph(d) => DistanceInfo::of_digraph(d),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self, AnyGraph::Graph(_))
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        match self {
            AnyGraph::Graph(g) => g.adjacency_matrix(),
            AnyGraph::Digraph(d) => d.adjacency_matrix(),
        }
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            AnyGraph::Graph(g) => Some(g),
            AnyGraph::Digraph(_) => None,
        }
    }

    pub fn as_digraph(&self) -> Option<&Digraph> {
        match self {
            AnyGraph::Graph(_) => None,
            AnyGraph::Digraph(d) => Some(d),
        }
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Graph(g)
    }
}

impl From<Digraph> for AnyGraph {
    fn from(d: Digraph) -> Self {
        AnyGraph::Digraph(d)
    }
}
