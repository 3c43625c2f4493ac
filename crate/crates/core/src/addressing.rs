//! Squashed-cube addressings: words over `{0, 1, *}` whose distance (number
//! of coordinates where one word has 0 and the other 1) equals graph
//! distance.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{DistanceInfo, Graph};
use crate::matrix::distance_matrix;
use crate::poly::{char_poly_exact, inertia_exact, Inertia};

pub const MAX_SEARCH_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
    Star,
}

impl Symbol {
    const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::One, Symbol::Star];

    fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Star => '*',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Addressing {
    pub words: Vec<Vec<Symbol>>,
}

impl Addressing {
    /// Common word length; errors on ragged input.
    pub fn length(&self) -> Result<usize> {
        let r = self.words.first().map_or(0, |w| w.len());
        if self.words.iter().any(|w| w.len() != r) {
            return Err(Error::InvalidInput("addresses have different lengths".into()));
        }
        Ok(r)
    }

    pub fn uses_star(&self) -> bool {
        self.words.iter().flatten().any(|&s| s == Symbol::Star)
    }

    pub fn lines(&self) -> Vec<String> {
        self.words.iter().map(|w| w.iter().map(|s| s.as_char()).collect()).collect()
    }
}

impl FromStr for Addressing {
    type Err = Error;

    /// Whitespace- or comma-separated words.
    fn from_str(s: &str) -> Result<Self> {
        let words = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|w| !w.is_empty())
            .map(|w| {
                w.chars()
                    .map(|c| match c {
                        '0' => Ok(Symbol::Zero),
                        '1' => Ok(Symbol::One),
                        '*' => Ok(Symbol::Star),
                        _ => Err(Error::InvalidInput(format!("bad address symbol {c:?}"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(Addressing { words })
    }
}

impl fmt::Display for Addressing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.lines().join("\n"))
    }
}

impl Serialize for Addressing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.lines().serialize(s)
    }
}

pub fn address_distance(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter()
        .zip(b)
        .filter(|(x, y)| matches!((x, y), (Symbol::Zero, Symbol::One) | (Symbol::One, Symbol::Zero)))
        .count()
}

pub fn verify_addressing(g: &Graph, addr: &Addressing) -> Result<bool> {
    addr.length()?;
    if addr.words.len() != g.order() {
        return Err(Error::InvalidInput(format!(
            "{} addresses for {} vertices",
            addr.words.len(),
            g.order()
        )));
    }
    let info = DistanceInfo::of_graph(g)?;
    let n = g.order();
    Ok((0..n).all(|u| (u + 1..n).all(|v| address_distance(&addr.words[u], &addr.words[v]) as u64 == info.dist[u][v])))
}

/// One coordinate per edge; coordinate `i` is 1 exactly on the vertices
/// whose root path uses edge `i`. Edges are numbered in BFS order.
pub fn tree_addressing_rooted(t: &Graph, root: usize) -> Result<Addressing> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if root >= n {
        return Err(Error::InvalidInput(format!("root {root} out of range")));
    }
    let r = n - 1;
    let mut words = vec![Vec::new(); n];
    words[root] = vec![Symbol::Zero; r];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut next_edge = 0;
    while let Some(u) = queue.pop_front() {
        for &v in t.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                let mut w = words[u].clone();
                w[next_edge] = Symbol::One;
                next_edge += 1;
                words[v] = w;
                queue.push_back(v);
            }
        }
    }
    Ok(Addressing { words })
}

pub fn tree_addressing(t: &Graph) -> Result<Addressing> {
    tree_addressing_rooted(t, 0)
}

/// `(n_+, n_-, n_0)` of the distance matrix, exactly.
pub fn distance_inertia(g: &Graph) -> Result<Inertia> {
    let info = DistanceInfo::of_graph(g)?;
    inertia_exact(&char_poly_exact(&distance_matrix(&info)), true)
}

#[derive(Clone, Debug, Serialize)]
pub struct AddressingSearch {
    /// The minimum address length.
    pub length: usize,
    pub witness: Addressing,
    pub inertia: Inertia,
    pub lower_bound: usize,
    /// Number of candidate rows tried.
    pub nodes: u64,
}

struct Search<'a> {
    r: usize,
    order: Vec<usize>,
    dist: &'a [Vec<u64>],
    rows: Vec<Vec<Symbol>>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, k: usize, tied: &[bool]) -> bool {
        let n = self.order.len();
        if k == n {
            return true;
        }
        let v = self.order[k];
        for idx in 0..self.rows.len() {
            let row = &self.rows[idx];
            // The first vertex can be normalised to {0, *} per coordinate by
            // swapping 0 and 1 in that coordinate.
            if k == 0 && row.contains(&Symbol::One) {
                continue;
            }
            // Columns stay in non-decreasing lexicographic order.
            if (0..self.r - 1).any(|j| tied[j] && row[j] > row[j + 1]) {
                continue;
            }
            self.nodes += 1;
            let ok = (0..k).all(|i| {
                let u = self.order[i];
                address_distance(row, &self.rows[self.chosen[i]]) as u64 == self.dist[u][v]
            });
            if !ok {
                continue;
            }
            let next: Vec<bool> = (0..self.r.saturating_sub(1)).map(|j| tied[j] && row[j] == row[j + 1]).collect();
            self.chosen.push(idx);
            if self.run(k + 1, &next) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

fn all_rows(r: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Symbol>| {
                Symbol::ALL.iter().map(move |&s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

fn addressing_of_length(g: &Graph, info: &DistanceInfo, r: usize, nodes: &mut u64) -> Option<Addressing> {
    let n = g.order();
    if r == 0 {
        return (n == 1).then(|| Addressing { words: vec![Vec::new()] });
    }
    // BFS order from vertex 0 so that constraints bind early.
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut s = Search { r, order, dist: &info.dist, rows: all_rows(r), chosen: Vec::new(), nodes: 0 };
    let found = s.run(0, &vec![true; r - 1]);
    *nodes += s.nodes;
    if !found {
        return None;
    }
    let mut words = vec![Vec::new(); n];
    for (k, &v) in s.order.iter().enumerate() {
        words[v] = s.rows[s.chosen[k]].clone();
    }
    Some(Addressing { words })
}

/// Exact minimum address length by backtracking, starting from the inertia
/// bound `max(n_+, n_-)`.
pub fn minimal_addressing_search(g: &Graph, r_max: usize) -> Result<AddressingSearch> {
    let n = g.order();
    if n > MAX_SEARCH_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_SEARCH_ORDER });
    }
    let info = DistanceInfo::of_graph(g)?;
    let inertia = distance_inertia(g)?;
    let lower_bound = inertia.n_plus.max(inertia.n_minus);
    let mut nodes = 0;
    for r in lower_bound..=r_max {
        if let Some(witness) = addressing_of_length(g, &info, r, &mut nodes) {
            debug_assert!(verify_addressing(g, &witness).unwrap_or(false));
            return Ok(AddressingSearch { length: r, witness, inertia, lower_bound, nodes });
        }
    }
    Err(Error::NotSupported(format!("no addressing of length at most {r_max}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn hand_checked() {
        let k3: Addressing = "0* 10 11".parse().unwrap();
        assert!(verify_addressing(&complete(3), &k3).unwrap());
        let c4: Addressing = "00 01 11 10".parse().unwrap();
        assert!(verify_addressing(&cycle(4), &c4).unwrap());
        let ragged: Addressing = "00 1".parse().unwrap();
        assert!(verify_addressing(&complete(2), &ragged).is_err());
    }

    #[test]
    fn trees() {
        assert_eq!(tree_addressing(&path(4)).unwrap().lines(), ["000", "100", "110", "111"]);
        let star = crate::families::multipartite(&[1, 3]);
        assert_eq!(tree_addressing(&star).unwrap().lines(), ["000", "100", "010", "001"]);
        assert!(matches!(tree_addressing(&cycle(4)), Err(Error::NotATree)));
    }

    #[test]
    fn small_minima() {
        assert_eq!(minimal_addressing_search(&complete(4), 3).unwrap().length, 3);
        assert_eq!(minimal_addressing_search(&cycle(4), 3).unwrap().length, 2);
        assert_eq!(minimal_addressing_search(&cycle(5), 4).unwrap().length, 4);
        assert!(minimal_addressing_search(&cycle(7), 6).is_err());
    }
}
