//! Canonical labelling by partition refinement and a pruned search tree.
//!
//! The canonical form is the smallest upper-triangle bit string (graph6
//! column order) over all leaves of the search tree. Leaves that give the same
//! string yield automorphisms, which are used to prune sibling subtrees.

use std::fmt;

use super::{encode_graph6, Graph};
use crate::error::{Error, Result};

pub const MAX_CANON_ORDER: usize = 16;

/// Canonical graph6 bytes; equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        super::parse_graph6(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

pub(crate) fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect()
}

/// Result of a canonical search on a (possibly vertex-coloured) graph.
pub(crate) struct Canon {
    pub code: u128,
    /// `lab[i]` is the original vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// Automorphisms found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    /// Orbits of the group generated by the found automorphisms, as a
    /// representative per vertex.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.lab.len();
        let mut uf: Vec<usize> = (0..n).collect();
        for g in &self.generators {
            for v in 0..n {
                union(&mut uf, v, g[v]);
            }
        }
        (0..n).map(|v| find(&mut uf, v)).collect()
    }
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        uf[ra.max(rb)] = ra.min(rb);
    }
}

/// Refine an ordered partition to the coarsest equitable one below it.
/// Splits are ordered by neighbour count, so the result commutes with
/// relabelling.
fn refine(adj: &[u32], cells: &mut Vec<u32>) {
    let mut counts = [0u32; 32];
    'restart: loop {
        for s in 0..cells.len() {
            let smask = cells[s];
            for c in 0..cells.len() {
                let cm = cells[c];
                if cm.count_ones() == 1 {
                    continue;
                }
                let mut m = cm;
                let mut lo = u32::MAX;
                let mut hi = 0;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let k = (adj[v] & smask).count_ones();
                    counts[v] = k;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    continue;
                }
                let mut parts: Vec<(u32, u32)> = Vec::new();
                let mut m = cm;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    match parts.iter_mut().find(|(k, _)| *k == counts[v]) {
                        Some((_, pm)) => *pm |= 1 << v,
                        None => parts.push((counts[v], 1 << v)),
                    }
                }
                parts.sort_unstable_by_key(|&(k, _)| k);
                cells.splice(c..=c, parts.into_iter().map(|(_, pm)| pm));
                continue 'restart;
            }
        }
        return;
    }
}

fn leaf_code(adj: &[u32], lab: &[usize]) -> u128 {
    let n = lab.len();
    let mut code = 0u128;
    for j in 1..n {
        let row = adj[lab[j]];
        for &li in &lab[..j] {
            code = (code << 1) | ((row >> li) & 1) as u128;
        }
    }
    code
}

struct Search<'a> {
    adj: &'a [u32],
    n: usize,
    first: Option<(u128, Vec<usize>, Vec<usize>)>,
    best: Option<(u128, Vec<usize>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    // Returns `Some(level)` to abandon every node deeper than `level`.
    fn visit(&mut self, cells: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .unwrap();
        let cm = cells[target];
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut m = cm;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if !explored.is_empty() && self.equivalent_to_explored(path, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            child.splice(target..=target, [1u32 << v, cm & !(1 << v)]);
            refine(self.adj, &mut child);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let mut uf: Vec<usize> = (0..self.n).collect();
        for g in &self.generators {
            if path.iter().all(|&p| g[p] == p) {
                for x in 0..self.n {
                    union(&mut uf, x, g[x]);
                }
            }
        }
        let rv = find(&mut uf, v);
        explored.iter().any(|&e| find(&mut uf, e) == rv)
    }

    fn leaf(&mut self, cells: &[u32], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(self.adj, &lab);
        if self.first.is_none() {
            self.first = Some((code, lab.clone(), path.to_vec()));
            self.best = Some((code, lab, path.to_vec()));
            return None;
        }
        for which in [&self.first, &self.best] {
            let (c, other_lab, other_path) = which.as_ref().unwrap();
            if *c == code {
                let mut gamma = vec![0; self.n];
                for i in 0..self.n {
                    gamma[other_lab[i]] = lab[i];
                }
                let common = other_path
                    .iter()
                    .zip(path)
                    .take_while(|(a, b)| a == b)
                    .count();
                if gamma.iter().enumerate().any(|(i, &g)| g != i) {
                    self.generators.push(gamma);
                }
                return Some(common);
            }
        }
        if code < self.best.as_ref().unwrap().0 {
            self.best = Some((code, lab, path.to_vec()));
        }
        None
    }
}

/// Canonical search on adjacency masks with an optional vertex colouring.
/// Colour classes become initial cells ordered by colour value.
pub(crate) fn canon_masks(adj: &[u32], colors: Option<&[u32]>) -> Canon {
    let n = adj.len();
    if n == 0 {
        return Canon { code: 0, lab: vec![], generators: vec![] };
    }
    let mut cells: Vec<u32> = match colors {
        None => vec![((1u64 << n) - 1) as u32],
        Some(col) => {
            let mut keys: Vec<u32> = col.to_vec();
            keys.sort_unstable();
            keys.dedup();
            keys.iter()
                .map(|&k| (0..n).filter(|&v| col[v] == k).fold(0u32, |m, v| m | (1 << v)))
                .collect()
        }
    };
    refine(adj, &mut cells);
    let mut s = Search { adj, n, first: None, best: None, generators: Vec::new() };
    s.visit(cells, &mut Vec::new());
    let (code, lab, _) = s.best.unwrap();
    Canon { code, lab, generators: s.generators }
}

pub(crate) fn canonical_code(g: &Graph, colors: Option<&[u32]>) -> Result<Canon> {
    check_order(g.order())?;
    Ok(canon_masks(&masks(g), colors))
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_CANON_ORDER {
        Err(Error::OrderTooLarge { order: n, max: MAX_CANON_ORDER })
    } else {
        Ok(())
    }
}

/// The canonical relabelling of `g` and the map from old to new ids.
pub fn canonical_graph(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let c = canonical_code(g, None)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in c.lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((g.relabel(&perm)?, perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(encode_graph6(&canonical_graph(g)?.0)))
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    check_order(g1.order())?;
    check_order(g2.order())?;
    if g1.order() != g2.order()
        || g1.size() != g2.size()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_code(g1, None)?.code == canonical_code(g2, None)?.code)
}
