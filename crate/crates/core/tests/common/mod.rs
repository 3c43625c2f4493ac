#![allow(dead_code)]

use distspec::families::FamilySpec;
use distspec::{Digraph, Graph};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for v in 1..n {
        e.push((r.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !e.contains(&(u, v)) && r.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    let perm = shuffled(r, n);
    Graph::from_edges(n, &e).unwrap().relabel(&perm).unwrap()
}

/// Random strongly connected digraph: a spanning closed walk through a random
/// vertex order, plus random arcs.
pub fn random_strong_digraph(r: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let order = shuffled(r, n);
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    for u in 0..n {
        for v in 0..n {
            if u != v && !arcs.contains(&(u, v)) && r.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, &arcs).unwrap()
}

pub fn shuffled(r: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        v.swap(i, r.gen_range(0..=i));
    }
    v
}

pub fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max, any::<u64>(), 0.0..0.8f64).prop_map(|(n, seed, p)| random_connected(&mut rng(seed), n, p))
}

pub fn strong_digraph(min: usize, max: usize) -> impl Strategy<Value = Digraph> {
    (min..=max, any::<u64>(), 0.0..0.5f64).prop_map(|(n, seed, p)| random_strong_digraph(&mut rng(seed), n, p))
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    graph(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// `K_{1,n-1}` plus one edge between two leaves.
pub fn star_plus_edge(n: usize) -> Graph {
    let mut e: Vec<_> = (1..n).map(|v| (0, v)).collect();
    e.push((1, 2));
    graph(n, &e)
}

pub fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

pub fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// `C_5` with the chord `02`.
pub fn cycle_chord() -> Graph {
    graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
}

/// Families and parameters covered by the oracle sweep.
pub fn sweep() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut v = Vec::new();
    v.extend((2..=12).map(CompleteK));
    for a in 1..=6 {
        for b in a..=6 {
            v.push(CompleteBipartite(a, b));
        }
    }
    v.extend((3..=15).map(Cycle));
    for (d, r) in [(1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (7, 2), (8, 2), (2, 3), (3, 3), (4, 3), (5, 3), (2, 4), (3, 4), (4, 4), (2, 5), (3, 5), (2, 6), (3, 6), (2, 7), (2, 8), (2, 16)] {
        v.push(Hamming(d, r));
    }
    v.extend((4..=10).map(StarPlusEdge));
    v.extend((2..=9).map(Star));
    v.extend([5, 9, 13, 17].map(Paley));
    v.extend((2..=5).map(CocktailParty));
    v.extend([Petersen, Srg(10, 3, 0, 1), Srg(9, 4, 1, 2), Dsrg(8, 4, 3, 1, 3)]);
    v.extend((2..=5).map(CompleteDigraph));
    v.push(CompleteMultipartite(vec![3, 3, 3]));
    v
}
