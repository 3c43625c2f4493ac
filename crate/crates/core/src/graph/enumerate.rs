//! Isomorph-free generation of connected graphs and trees.
//!
//! A child of order `n` is a parent of order `n-1` plus a new vertex joined to
//! a nonempty subset. The child is kept only when the new vertex lies in the
//! orbit of a canonically chosen non-cut vertex, so every class arises from a
//! single parent class; duplicates from the same parent are removed by code.

use std::collections::HashSet;
use std::path::Path;

use rayon::prelude::*;

use super::canon::canon_masks;
use super::{parse_graph6, Graph};
use crate::error::{Error, Result};

pub const MAX_ENUM_ORDER: usize = 9;
pub const MAX_TREE_ORDER: usize = super::canon::MAX_CANON_ORDER;

pub(crate) fn graph_from_rows(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("rows describe a simple graph")
}

fn connected_without(adj: &[u32], skip: usize) -> bool {
    let n = adj.len();
    let all = (((1u64 << n) - 1) as u32) & !(1 << skip);
    if all == 0 {
        return true;
    }
    let start = all.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & all & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == all
}

fn invariant(adj: &[u32], v: usize) -> u32 {
    let deg = adj[v].count_ones();
    let mut m = adj[v];
    let mut s = 0;
    while m != 0 {
        let w = m.trailing_zeros() as usize;
        m &= m - 1;
        s += adj[w].count_ones();
    }
    (deg << 8) | s
}

/// Canonical children of `parent` (given as canonical adjacency rows).
fn children(parent: &[u32], trees_only: bool) -> Vec<Vec<u32>> {
    let p = parent.len();
    let k = p;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let subsets: Box<dyn Iterator<Item = u32>> = if trees_only {
        Box::new((0..p).map(|v| 1u32 << v))
    } else {
        Box::new(1..(1u32 << p))
    };
    for s in subsets {
        let mut adj: Vec<u32> = parent.to_vec();
        for (v, row) in adj.iter_mut().enumerate() {
            if s >> v & 1 == 1 {
                *row |= 1 << k;
            }
        }
        adj.push(s);
        let inv_k = invariant(&adj, k);
        let invs: Vec<u32> = (0..=k).map(|v| invariant(&adj, v)).collect();
        if (0..k).any(|v| invs[v] > inv_k && connected_without(&adj, v)) {
            continue;
        }
        let cands: Vec<usize> = (0..=k)
            .filter(|&v| invs[v] == inv_k && (v == k || connected_without(&adj, v)))
            .collect();
        let c = canon_masks(&adj, None);
        if cands.len() > 1 {
            let mut pos = vec![0; k + 1];
            for (i, &v) in c.lab.iter().enumerate() {
                pos[v] = i;
            }
            let vstar = *cands.iter().max_by_key(|&&v| pos[v]).unwrap();
            if vstar != k {
                let orbits = c.orbits();
                if orbits[vstar] != orbits[k] {
                    continue;
                }
            }
        }
        if seen.insert(c.code) {
            let mut canon = vec![0u32; k + 1];
            let mut pos = vec![0; k + 1];
            for (i, &v) in c.lab.iter().enumerate() {
                pos[v] = i;
            }
            for u in 0..=k {
                let mut m = adj[u];
                let mut row = 0;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    row |= 1 << pos[v];
                }
                canon[pos[u]] = row;
            }
            out.push(canon);
        }
    }
    out
}

fn generate(n: usize, trees_only: bool) -> Vec<Vec<u32>> {
    let mut level: Vec<Vec<u32>> = vec![vec![0]];
    for _ in 1..n {
        level = level
            .par_iter()
            .map(|p| children(p, trees_only))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
    }
    level
}

fn check_range(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        Err(Error::OrderOutOfRange(n))
    } else {
        Ok(())
    }
}

/// One canonically labelled representative per isomorphism class of
/// connected graphs of order `n`, in a fixed order.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_range(n, MAX_ENUM_ORDER)?;
    Ok(generate(n, false).iter().map(|a| graph_from_rows(a)).collect())
}

/// One representative per isomorphism class of trees of order `n`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    check_range(n, MAX_TREE_ORDER)?;
    Ok(generate(n, true).iter().map(|a| graph_from_rows(a)).collect())
}

/// Graphs from a graph6 catalog file, one per line; blank lines skipped.
pub fn read_catalog(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn range() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(10).is_err());
    }

    #[test]
    fn masks_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(graph_from_rows(&super::super::canon::masks(&g)), g);
    }
}
