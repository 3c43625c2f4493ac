//! Named graph and digraph families with closed-form spectra.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, is_square, quadratic_roots, rat, ExactValue, OracleSpectrum};
use crate::graph::{AnyGraph, Digraph, DistanceInfo, Graph};
use crate::matrix::{distance_matrix, matches_oracle_exact, transform_tr_spectrum, variant_matrix, MatrixVariant};
use crate::numeric::variant_spectrum;
use crate::poly::{char_poly_exact, inertia_exact, Inertia};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum FamilySpec {
    CompleteK(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n-1}`.
    Star(usize),
    /// `K_{1,n-1}` plus an edge between two leaves.
    StarPlusEdge(usize),
    KnMinusE(usize),
    Hamming(usize, usize),
    Hypercube(usize),
    /// `K_{2,...,2}` with `m` parts.
    CocktailParty(usize),
    Kpk(usize, usize, usize),
    Petersen,
    Heawood,
    Paley(usize),
    Srg(usize, usize, usize, usize),
    Dicycle(usize),
    CompleteDigraph(usize),
    Dsrg(usize, usize, usize, usize, usize),
}

fn names() -> &'static [(&'static str, &'static str)] {
    &[
        ("complete", "complete"),
        ("completek", "complete"),
        ("k", "complete"),
        ("completebipartite", "complete_bipartite"),
        ("kab", "complete_bipartite"),
        ("completemultipartite", "complete_multipartite"),
        ("multipartite", "complete_multipartite"),
        ("path", "path"),
        ("p", "path"),
        ("cycle", "cycle"),
        ("c", "cycle"),
        ("star", "star"),
        ("starplusedge", "star_plus_edge"),
        ("snplus", "star_plus_edge"),
        ("knminuse", "kn_minus_e"),
        ("hamming", "hamming"),
        ("h", "hamming"),
        ("hypercube", "hypercube"),
        ("q", "hypercube"),
        ("cocktailparty", "cocktail_party"),
        ("cp", "cocktail_party"),
        ("kpk", "kpk"),
        ("petersen", "petersen"),
        ("heawood", "heawood"),
        ("paley", "paley"),
        ("srg", "srg"),
        ("dicycle", "dicycle"),
        ("completedigraph", "complete_digraph"),
        ("dsrg", "dsrg"),
        ("dsrgparams", "dsrg"),
    ]
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `NAME[:p1,p2,...]`, e.g. `hamming:3,2`, `paley:13`, `petersen`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = match s.split_once(':') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        let key: String = name.chars().filter(|c| c.is_alphanumeric()).collect::<String>().to_lowercase();
        let canon = names()
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family {name:?}")))?;
        let p: Vec<usize> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidInput(format!("bad parameters {params:?}")))?
        };
        let want = |k: usize| -> Result<()> {
            if p.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!("{canon} takes {k} parameter(s), got {}", p.len())))
            }
        };
        let spec = match canon {
            "complete" => want(1).map(|_| FamilySpec::CompleteK(p[0]))?,
            "complete_bipartite" => want(2).map(|_| FamilySpec::CompleteBipartite(p[0], p[1]))?,
            "complete_multipartite" => FamilySpec::CompleteMultipartite(p),
            "path" => want(1).map(|_| FamilySpec::Path(p[0]))?,
            "cycle" => want(1).map(|_| FamilySpec::Cycle(p[0]))?,
            "star" => want(1).map(|_| FamilySpec::Star(p[0]))?,
            "star_plus_edge" => want(1).map(|_| FamilySpec::StarPlusEdge(p[0]))?,
            "kn_minus_e" => want(1).map(|_| FamilySpec::KnMinusE(p[0]))?,
            "hamming" => want(2).map(|_| FamilySpec::Hamming(p[0], p[1]))?,
            "hypercube" => want(1).map(|_| FamilySpec::Hypercube(p[0]))?,
            "cocktail_party" => want(1).map(|_| FamilySpec::CocktailParty(p[0]))?,
            "kpk" => want(3).map(|_| FamilySpec::Kpk(p[0], p[1], p[2]))?,
            "petersen" => want(0).map(|_| FamilySpec::Petersen)?,
            "heawood" => want(0).map(|_| FamilySpec::Heawood)?,
            "paley" => want(1).map(|_| FamilySpec::Paley(p[0]))?,
            "srg" => want(4).map(|_| FamilySpec::Srg(p[0], p[1], p[2], p[3]))?,
            "dicycle" => want(1).map(|_| FamilySpec::Dicycle(p[0]))?,
            "complete_digraph" => want(1).map(|_| FamilySpec::CompleteDigraph(p[0]))?,
            "dsrg" => want(5).map(|_| FamilySpec::Dsrg(p[0], p[1], p[2], p[3], p[4]))?,
            _ => unreachable!(),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            CompleteK(n) => write!(f, "complete:{n}"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            CompleteMultipartite(p) => write!(f, "complete_multipartite:{}", join(p)),
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Star(n) => write!(f, "star:{n}"),
            StarPlusEdge(n) => write!(f, "star_plus_edge:{n}"),
            KnMinusE(n) => write!(f, "kn_minus_e:{n}"),
            Hamming(d, r) => write!(f, "hamming:{d},{r}"),
            Hypercube(d) => write!(f, "hypercube:{d}"),
            CocktailParty(m) => write!(f, "cocktail_party:{m}"),
            Kpk(a, b, c) => write!(f, "kpk:{a},{b},{c}"),
            Petersen => write!(f, "petersen"),
            Heawood => write!(f, "heawood"),
            Paley(q) => write!(f, "paley:{q}"),
            Srg(n, k, a, c) => write!(f, "srg:{n},{k},{a},{c}"),
            Dicycle(n) => write!(f, "dicycle:{n}"),
            CompleteDigraph(n) => write!(f, "complete_digraph:{n}"),
            Dsrg(n, k, s, a, c) => write!(f, "dsrg:{n},{k},{s},{a},{c}"),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// `q = p^k` with `p` prime.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match self {
            CompleteK(n) | CompleteDigraph(n) if *n < 1 => Err(bad("order must be at least 1")),
            CompleteBipartite(a, b) if *a < 1 || *b < 1 => Err(bad("parts must be non-empty")),
            CompleteMultipartite(p) if p.len() < 2 || p.contains(&0) => {
                Err(bad("need at least two non-empty parts"))
            }
            Path(n) if *n < 1 => Err(bad("order must be at least 1")),
            Cycle(n) | Dicycle(n) if *n < 3 => Err(bad("cycles need at least 3 vertices")),
            Star(n) if *n < 2 => Err(bad("stars need at least 2 vertices")),
            StarPlusEdge(n) if *n < 4 => Err(bad("S_n^+ needs n >= 4")),
            KnMinusE(n) if *n < 3 => Err(bad("K_n - e needs n >= 3")),
            Hamming(d, r) if *d < 1 || *r < 2 => Err(bad("Hamming graphs need d >= 1, r >= 2")),
            Hypercube(d) if *d < 1 => Err(bad("hypercube dimension must be at least 1")),
            CocktailParty(m) if *m < 2 => Err(bad("cocktail party graphs need m >= 2")),
            Kpk(a, b, c) if *a < 1 || *c < 1 || *b < 2 => Err(bad("KPK needs n1, n3 >= 1 and n2 >= 2")),
            Paley(q) if prime_power(*q).is_none() || q % 4 != 1 => {
                Err(bad("Paley graphs need a prime power q = 1 mod 4"))
            }
            Srg(n, k, _, _) if *k + 1 >= *n || *k == 0 => Err(bad("SRG needs 0 < k < n - 1")),
            Dsrg(n, k, _, _, _) if *k == 0 || *k >= *n => Err(bad("DSRG needs 0 < k < n")),
            _ => Ok(()),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, FamilySpec::Dicycle(_) | FamilySpec::CompleteDigraph(_) | FamilySpec::Dsrg(..))
    }

    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            CompleteK(n) | Path(n) | Cycle(n) | Star(n) | StarPlusEdge(n) | KnMinusE(n) | Paley(n)
            | Dicycle(n) | CompleteDigraph(n) => *n,
            CompleteBipartite(a, b) => a + b,
            CompleteMultipartite(p) => p.iter().sum(),
            Hamming(d, r) => r.pow(*d as u32),
            Hypercube(d) => 1 << d,
            CocktailParty(m) => 2 * m,
            Kpk(a, b, c) => a + b + c - 2,
            Petersen => 10,
            Heawood => 14,
            Srg(n, ..) | Dsrg(n, ..) => *n,
        }
    }

    pub fn build(&self) -> Result<AnyGraph> {
        self.validate()?;
        use FamilySpec::*;
        Ok(match self {
            CompleteK(n) => complete(*n).into(),
            CompleteBipartite(a, b) => multipartite(&[*a, *b]).into(),
            CompleteMultipartite(p) => multipartite(p).into(),
            Path(n) => path(*n).into(),
            Cycle(n) => cycle(*n).into(),
            Star(n) => multipartite(&[1, n - 1]).into(),
            StarPlusEdge(n) => {
                let mut e: Vec<_> = (1..*n).map(|i| (0, i)).collect();
                e.push((1, 2));
                Graph::from_edges(*n, &e)?.into()
            }
            KnMinusE(n) => {
                let e: Vec<_> = complete_edges(*n).into_iter().filter(|&e| e != (0, 1)).collect();
                Graph::from_edges(*n, &e)?.into()
            }
            Hamming(d, r) => hamming(*d, *r)?.into(),
            Hypercube(d) => hamming(*d, 2)?.into(),
            CocktailParty(m) => multipartite(&vec![2; *m]).into(),
            Kpk(a, b, c) => kpk(*a, *b, *c)?.into(),
            Petersen => petersen().into(),
            Heawood => heawood().into(),
            Paley(q) => paley(*q)?.into(),
            Srg(n, k, a, c) => srg_instance(*n, *k, *a, *c)?.into(),
            Dicycle(n) => Digraph::from_arcs(*n, &(0..*n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())?.into(),
            CompleteDigraph(n) => complete(*n).to_digraph().into(),
            Dsrg(n, k, s, a, c) => {
                if (*n, *k, *s, *a, *c) != (8, 4, 3, 1, 3) {
                    return Err(Error::NotSupported(format!(
                        "no construction shipped for DSRG({n},{k},{s},{a},{c})"
                    )));
                }
                dsrg_8_4_3_1_3().into()
            }
        })
    }

    /// Closed-form spectrum of one matrix variant.
    pub fn oracle_spectrum(&self, variant: MatrixVariant) -> Result<OracleSpectrum> {
        self.validate()?;
        use FamilySpec::*;
        let none = || Error::NoClosedForm(format!("{variant} of {self}"));
        match self {
            CompleteK(n) | CompleteDigraph(n) => complete_oracle(*n, variant),
            CompleteBipartite(a, b) => bipartite_oracle(*a, *b, variant),
            Star(n) => bipartite_oracle(1, n - 1, variant),
            CompleteMultipartite(p) => {
                if p.iter().all(|&x| x == 1) {
                    complete_oracle(p.len(), variant)
                } else if p.len() == 2 {
                    bipartite_oracle(p[0], p[1], variant)
                } else if p.iter().all(|&x| x == p[0]) {
                    let (m, s) = (p.len(), p[0]);
                    let n = m * s;
                    srg_oracle(n, n - s, n - 2 * s, n - s, variant)
                } else {
                    Err(none())
                }
            }
            Cycle(n) => cycle_oracle(*n, variant),
            StarPlusEdge(n) => star_plus_oracle(*n, variant).ok_or_else(none),
            Hamming(d, r) => hamming_oracle(*d, *r, variant),
            Hypercube(d) => hamming_oracle(*d, 2, variant),
            CocktailParty(m) => srg_oracle(2 * m, 2 * m - 2, 2 * m - 4, 2 * m - 2, variant),
            Petersen => srg_oracle(10, 3, 0, 1, variant),
            Paley(q) => srg_oracle(*q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4, variant),
            Srg(n, k, a, c) => srg_oracle(*n, *k, *a, *c, variant),
            Dsrg(n, k, s, a, c) => dsrg_oracle(*n, *k, *s, *a, *c, variant),
            Path(_) | KnMinusE(_) | Kpk(..) | Heawood | Dicycle(_) => Err(none()),
        }
    }
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, &complete_edges(n)).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

pub fn multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (k, &s) in parts.iter().enumerate() {
        part.extend(std::iter::repeat(k).take(s));
    }
    let e: Vec<_> = complete_edges(n).into_iter().filter(|&(i, j)| part[i] != part[j]).collect();
    Graph::from_edges(n, &e).unwrap()
}

fn hamming(d: usize, r: usize) -> Result<Graph> {
    let n = r
        .checked_pow(d as u32)
        .filter(|&n| n <= 4096)
        .ok_or(Error::OrderTooLarge { order: usize::MAX, max: 4096 })?;
    let digits = |mut x: usize| -> Vec<usize> {
        (0..d)
            .map(|_| {
                let q = x % r;
                x /= r;
                q
            })
            .collect()
    };
    let all: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let e: Vec<_> = complete_edges(n)
        .into_iter()
        .filter(|&(i, j)| all[i].iter().zip(&all[j]).filter(|(a, b)| a != b).count() == 1)
        .collect();
    Graph::from_edges(n, &e)
}

fn kpk(n1: usize, n2: usize, n3: usize) -> Result<Graph> {
    let a = n1 - 1;
    let b = a + n2 - 1;
    let n = n1 + n2 + n3 - 2;
    let mut e: Vec<_> = complete_edges(n1);
    e.extend((a..b).map(|i| (i, i + 1)));
    e.extend(complete_edges(n3).into_iter().map(|(i, j)| (b + i, b + j)));
    Graph::from_edges(n, &e)
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &e).unwrap()
}

/// Point-line incidence graph of the Fano plane.
pub fn heawood() -> Graph {
    let mut e = Vec::new();
    for line in 0..7 {
        for off in [0, 1, 3] {
            e.push(((line + off) % 7, 7 + line));
        }
    }
    Graph::from_edges(14, &e).unwrap()
}

/// Arithmetic in `GF(p^k)` with elements stored as base-`p` digit vectors.
struct FiniteField {
    p: usize,
    k: usize,
    /// Monic irreducible modulus, low degree first, length `k + 1`.
    modulus: Vec<usize>,
}

impl FiniteField {
    fn new(p: usize, k: usize) -> Self {
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(k as u32))
                .map(|x| {
                    let mut m: Vec<usize> = (0..k).map(|i| (x / p.pow(i as u32)) % p).collect();
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("irreducible polynomials exist in every degree")
        };
        FiniteField { p, k, modulus }
    }

    fn size(&self) -> usize {
        self.p.pow(self.k as u32)
    }

    fn digits(&self, x: usize) -> Vec<usize> {
        (0..self.k).map(|i| (x / self.p.pow(i as u32)) % self.p).collect()
    }

    fn number(&self, d: &[usize]) -> usize {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn sub(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        let d: Vec<usize> = a.iter().zip(&b).map(|(u, v)| (u + self.p - v) % self.p).collect();
        self.number(&d)
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0usize; 2 * self.k];
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        for deg in (self.k..2 * self.k).rev() {
            let c = prod[deg];
            if c != 0 {
                for i in 0..=self.k {
                    let idx = deg - self.k + i;
                    prod[idx] = (prod[idx] + self.p * self.p - c * self.modulus[i] % self.p) % self.p;
                }
            }
        }
        self.number(&prod[..self.k])
    }
}

fn poly_mod(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv_lead = (1..p).find(|x| x * m[dm] % p == 1).unwrap();
    while r.len() > dm {
        let c = r[r.len() - 1] * inv_lead % p;
        let shift = r.len() - 1 - dm;
        for i in 0..=dm {
            r[shift + i] = (r[shift + i] + p * p - c * m[i] % p) % p;
        }
        r.pop();
        while r.last() == Some(&0) && r.len() > 1 {
            r.pop();
        }
    }
    r
}

fn is_irreducible(m: &[usize], p: usize) -> bool {
    let k = m.len() - 1;
    // Trial division by every monic polynomial of degree 1..=k/2.
    for d in 1..=k / 2 {
        for x in 0..p.pow(d as u32) {
            let mut f: Vec<usize> = (0..d).map(|i| (x / p.pow(i as u32)) % p).collect();
            f.push(1);
            if poly_mod(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn paley(q: usize) -> Result<Graph> {
    let (p, k) = prime_power(q).ok_or_else(|| bad("q must be a prime power"))?;
    let f = FiniteField::new(p, k as usize);
    debug_assert_eq!(f.size(), q);
    let mut square = vec![false; q];
    for x in 1..q {
        square[f.mul(x, x)] = true;
    }
    let e: Vec<_> = complete_edges(q).into_iter().filter(|&(i, j)| square[f.sub(j, i)]).collect();
    Graph::from_edges(q, &e)
}

fn srg_params(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let k = g.is_regular()?;
    let n = g.order();
    let (mut a, mut c) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
            let slot = if g.has_edge(u, v) { &mut a } else { &mut c };
            match slot {
                None => *slot = Some(common),
                Some(x) if *x != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, a.unwrap_or(0), c.unwrap_or(0)))
}

/// Strongly regular parameters `(n, k, a, c)` by brute-force counting.
pub fn strongly_regular_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    srg_params(g)
}

fn srg_instance(n: usize, k: usize, a: usize, c: usize) -> Result<Graph> {
    let candidates: Vec<Graph> = {
        let mut v = Vec::new();
        if (n, k, a, c) == (10, 3, 0, 1) {
            v.push(petersen());
        }
        if n % 4 == 1 && prime_power(n).is_some() && (k, a, c) == ((n - 1) / 2, (n - 5) / 4, (n - 1) / 4) {
            v.push(paley(n)?);
        }
        if n % 2 == 0 && n >= 4 && (k, a, c) == (n - 2, n.saturating_sub(4), n - 2) {
            v.push(multipartite(&vec![2; n / 2]));
        }
        for s in 2..n {
            if n % s == 0 && n / s >= 2 && (k, a, c) == (n - s, n.saturating_sub(2 * s), n - s) {
                v.push(multipartite(&vec![s; n / s]));
            }
        }
        v
    };
    candidates
        .into_iter()
        .find(|g| srg_params(g) == Some((n, k, a, c)))
        .ok_or_else(|| Error::NotSupported(format!("no construction shipped for SRG({n},{k},{a},{c})")))
}

/// Cayley digraph of the dihedral group of order 8 with connection set
/// `{r, r^2, s, rs}`.
pub fn dsrg_8_4_3_1_3() -> Digraph {
    // Element r^i s^a is numbered i + 4a.
    let mul = |x: usize, y: usize| -> usize {
        let (i, a) = (x % 4, x / 4);
        let (j, b) = (y % 4, y / 4);
        let r = if a == 0 { (i + j) % 4 } else { (i + 4 - j) % 4 };
        r + 4 * ((a + b) % 2)
    };
    let conn = [1, 2, 4, 5];
    let arcs: Vec<_> = (0..8).flat_map(|x| conn.iter().map(move |&s| (x, mul(x, s)))).collect();
    Digraph::from_arcs(8, &arcs).unwrap()
}

/// Directed strongly regular check: `A^2 = sI + aA + c(J - I - A)`, `AJ = JA = kJ`.
pub fn is_dsrg(d: &Digraph, (n, k, s, a, c): (usize, usize, usize, usize, usize)) -> bool {
    if d.order() != n || d.regular() != Some(k) {
        return false;
    }
    (0..n).all(|u| {
        (0..n).all(|v| {
            let paths = d.out_neighbors(u).iter().filter(|&&w| d.has_arc(w, v)).count();
            let want = if u == v {
                s
            } else if d.has_arc(u, v) {
                a
            } else {
                c
            };
            paths == want
        })
    })
}

fn ev(x: i64) -> ExactValue {
    ExactValue::int(x)
}

fn transform(d: OracleSpectrum, t: i64, variant: MatrixVariant) -> Result<OracleSpectrum> {
    transform_tr_spectrum(&d, t, variant)
}

fn complete_oracle(n: usize, variant: MatrixVariant) -> Result<OracleSpectrum> {
    let n = n as i64;
    if n == 1 {
        return match variant {
            MatrixVariant::DNL => Err(Error::ZeroTransmission),
            _ => Ok(OracleSpectrum::new(vec![(ev(0), 1)])),
        };
    }
    let m = (n - 1) as usize;
    Ok(OracleSpectrum::new(match variant {
        MatrixVariant::D => vec![(ev(-1), m), (ev(n - 1), 1)],
        MatrixVariant::DQ => vec![(ev(n - 2), m), (ev(2 * n - 2), 1)],
        MatrixVariant::DL => vec![(ev(0), 1), (ev(n), m)],
        MatrixVariant::DNL => vec![(ev(0), 1), (ExactValue::ratio(n, n - 1), m)],
    }))
}

fn bipartite_oracle(a: usize, b: usize, variant: MatrixVariant) -> Result<OracleSpectrum> {
    let (ai, bi) = (a as i64, b as i64);
    let n = ai + bi;
    let surd = |p: i64, q: i64, s: i64, r: i64| ExactValue::surd_i64(p, q, s, r);
    Ok(OracleSpectrum::new(match variant {
        MatrixVariant::D => {
            let s = ai * ai - ai * bi + bi * bi;
            vec![(ev(-2), (a + b - 2)), (surd(n - 2, -1, s, 1), 1), (surd(n - 2, 1, s, 1), 1)]
        }
        MatrixVariant::DQ => {
            let s = 9 * ai * ai - 14 * ai * bi + 9 * bi * bi;
            vec![
                (surd(5 * n - 8, -1, s, 2), 1),
                (surd(5 * n - 8, 1, s, 2), 1),
                (ev(2 * ai + bi - 4), a - 1),
                (ev(2 * bi + ai - 4), b - 1),
            ]
        }
        MatrixVariant::DL => vec![(ev(0), 1), (ev(n), 1), (ev(2 * ai + bi), a - 1), (ev(2 * bi + ai), b - 1)],
        MatrixVariant::DNL => vec![
            (ev(0), 1),
            (
                ExactValue::ratio(
                    2 * (ai * ai + ai * (bi - 1) + (bi - 1) * bi),
                    (2 * ai + bi - 2) * (ai + 2 * bi - 2),
                ),
                1,
            ),
            (ExactValue::ratio(2 * bi + ai, 2 * bi + ai - 2), b - 1),
            (ExactValue::ratio(2 * ai + bi, 2 * ai + bi - 2), a - 1),
        ],
    }))
}

fn cycle_oracle(n: usize, variant: MatrixVariant) -> Result<OracleSpectrum> {
    use std::f64::consts::PI;
    let p = n / 2;
    let pf = p as f64;
    let mut d: Vec<(ExactValue, usize)> = Vec::new();
    let t;
    if n % 2 == 0 {
        t = (p * p) as i64;
        d.push((ev(t), 1));
        d.push((ev(0), p - 1));
        for j in 1..=p {
            let x = PI * (2 * j - 1) as f64 / (2.0 * pf);
            d.push((ExactValue::Float(-1.0 / x.sin().powi(2)), 1));
        }
    } else {
        t = (p * p + p) as i64;
        d.push((ev(t), 1));
        let m = (2 * p + 1) as f64;
        for j in 1..=p {
            let x = PI * j as f64 / m;
            let y = PI * (2 * j - 1) as f64 / (2.0 * m);
            d.push((ExactValue::Float(-0.25 / x.cos().powi(2)), 1));
            d.push((ExactValue::Float(-0.25 / y.sin().powi(2)), 1));
        }
    }
    transform(OracleSpectrum::new(d), t, variant)
}

fn star_plus_oracle(n: usize, variant: MatrixVariant) -> Option<OracleSpectrum> {
    let ni = n as i64;
    match variant {
        MatrixVariant::DL => Some(OracleSpectrum::new(vec![
            (ev(0), 1),
            (ev(ni), 1),
            (ev(2 * ni - 3), 1),
            (ev(2 * ni - 1), n - 3),
        ])),
        MatrixVariant::DNL if n >= 5 => {
            let s = rat(8 * ni * ni - 20 * ni + 7, 2 * (ni - 2) * (2 * ni - 3));
            let p = rat(2 * ni * ni - ni, (ni - 1) * (2 * ni - 3));
            let [m2, m3] = quadratic_roots(&s, &p)?;
            Some(OracleSpectrum::new(vec![
                (ExactValue::ratio(2 * ni - 3, 2 * ni - 4), 1),
                (ExactValue::ratio(2 * ni - 1, 2 * ni - 3), n - 4),
                (ev(0), 1),
                (m2, 1),
                (m3, 1),
            ]))
        }
        _ => None,
    }
}

fn hamming_oracle(d: usize, r: usize, variant: MatrixVariant) -> Result<OracleSpectrum> {
    let (di, ri) = (d as i64, r as i64);
    let rd1 = ri.pow(d as u32 - 1);
    let n = ri.pow(d as u32);
    let m = d * (r - 1);
    let zeros = (n as usize) - m - 1;
    let t = di * rd1 * (ri - 1);
    let dist = OracleSpectrum::new(vec![(ev(-rd1), m), (ev(0), zeros), (ev(t), 1)]);
    transform(dist, t, variant)
}

/// Eigenvalues `tau < theta` of the adjacency matrix and their
/// multiplicities, from `delta = (a - c)^2 + 4(s - c)` and
/// `2k + (n - 1)(a - c)`.
fn srg_like(n: usize, k: usize, s: usize, a: usize, c: usize) -> Result<[(ExactValue, usize); 2]> {
    let (ni, ki, si, ai, ci) = (n as i64, k as i64, s as i64, a as i64, c as i64);
    let delta = (ai - ci).pow(2) + 4 * (si - ci);
    if delta <= 0 {
        return Err(bad("degenerate parameters"));
    }
    let num = 2 * ki + (ni - 1) * (ai - ci);
    let (m_tau, m_theta) = if is_square(&BigInt::from(delta)) {
        let r = (delta as f64).sqrt().round() as i64;
        let twice_tau = (ni - 1) * r + num;
        if twice_tau % (2 * r) != 0 {
            return Err(bad("parameters give non-integral multiplicities"));
        }
        let mt = twice_tau / (2 * r);
        (mt, ni - 1 - mt)
    } else if num == 0 && (ni - 1) % 2 == 0 {
        ((ni - 1) / 2, (ni - 1) / 2)
    } else {
        return Err(bad("parameters give irrational multiplicities"));
    };
    if m_tau < 0 || m_theta < 0 {
        return Err(bad("parameters give negative multiplicities"));
    }
    let tau = ExactValue::surd_i64(ai - ci, -1, delta, 2);
    let theta = ExactValue::surd_i64(ai - ci, 1, delta, 2);
    Ok([(tau, m_tau as usize), (theta, m_theta as usize)])
}

/// Distance eigenvalues `-2 - tau`, `-2 - theta` and `2n - 2 - k`.
fn diameter_two_regular(n: usize, k: usize, adj: [(ExactValue, usize); 2]) -> OracleSpectrum {
    let mut out: Vec<(ExactValue, usize)> =
        adj.into_iter().map(|(v, m)| (v.affine(&int(-2), &int(-1)), m)).collect();
    out.push((ev(2 * n as i64 - 2 - k as i64), 1));
    OracleSpectrum::new(out)
}

fn srg_oracle(n: usize, k: usize, a: usize, c: usize, variant: MatrixVariant) -> Result<OracleSpectrum> {
    let adj = srg_like(n, k, k, a, c)?;
    let t = 2 * n as i64 - 2 - k as i64;
    transform(diameter_two_regular(n, k, adj), t, variant)
}

fn dsrg_oracle(n: usize, k: usize, s: usize, a: usize, c: usize, variant: MatrixVariant) -> Result<OracleSpectrum> {
    let adj = srg_like(n, k, s, a, c)?;
    let t = 2 * n as i64 - 2 - k as i64;
    transform(diameter_two_regular(n, k, adj), t, variant)
}

/// One oracle against the direct pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub family: String,
    pub variant: MatrixVariant,
    pub oracle: OracleSpectrum,
    pub max_abs_error: f64,
    pub numeric_match: bool,
    /// `None` when the closed form is not exact.
    pub exact_match: Option<bool>,
}

pub fn check_oracle(spec: &FamilySpec, variant: MatrixVariant, tol: f64) -> Result<OracleCheck> {
    let oracle = spec.oracle_spectrum(variant)?;
    let g = spec.build()?;
    let info = g.distances()?;
    let direct = variant_spectrum(&info, variant)?;
    let want = oracle.values_f64();
    let mut got: Vec<(f64, f64)> = direct.eigenvalues.iter().map(|z| (z.re, z.im)).collect();
    got.sort_by(|x, y| x.0.total_cmp(&y.0));
    let max_abs_error = if got.len() == want.len() {
        got.iter().zip(&want).map(|((re, im), w)| (re - w).abs().max(im.abs())).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let exact_match = if oracle.is_exact() {
        Some(matches_oracle_exact(&variant_matrix(&info, variant)?, &oracle)?)
    } else {
        None
    };
    Ok(OracleCheck {
        family: spec.to_string(),
        variant,
        numeric_match: max_abs_error <= tol,
        max_abs_error,
        exact_match,
        oracle,
    })
}

/// Counts of eigenvalues below and above a pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PivotCounts {
    pub below: usize,
    pub at: usize,
    pub above: usize,
}

fn pivot_counts(info: &DistanceInfo, variant: MatrixVariant, pivot: &BigRational) -> Result<PivotCounts> {
    let p = char_poly_exact(&variant_matrix(info, variant)?);
    let shifted = p.compose_affine(pivot, &int(1));
    let i = inertia_exact(&shifted, true)?;
    Ok(PivotCounts { below: i.n_minus, at: i.n_zero, above: i.n_plus })
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub transmission_regular: Option<u64>,
    pub diameter: u64,
    pub inertia: Inertia,
    pub optimistic: bool,
    pub one_positive_d_eigenvalue: bool,
    pub distinct_d_eigenvalues: usize,
    /// `DQ` and `DL` eigenvalues around `t`, `DNL` around 1; only for
    /// transmission regular graphs.
    pub dq_around_t: Option<PivotCounts>,
    pub dl_around_t: Option<PivotCounts>,
    pub dnl_around_1: Option<PivotCounts>,
    /// The pivot-count reformulations agree with the `D` inertia.
    pub equivalences_hold: Option<bool>,
}

/// Inertia-based flags, exact throughout.
pub fn classify(g: &Graph) -> Result<Classification> {
    let info = DistanceInfo::of_graph(g)?;
    let p = char_poly_exact(&distance_matrix(&info));
    let inertia = inertia_exact(&p, true)?;
    let optimistic = inertia.n_plus > inertia.n_minus;
    let one_positive = inertia.n_plus == 1;
    let tr = info.transmission_regular();
    let (mut dq, mut dl, mut dnl, mut eq) = (None, None, None, None);
    if let Some(t) = tr.filter(|&t| t > 0) {
        let tq = int(t as i64);
        let q = pivot_counts(&info, MatrixVariant::DQ, &tq)?;
        let l = pivot_counts(&info, MatrixVariant::DL, &tq)?;
        let nl = pivot_counts(&info, MatrixVariant::DNL, &int(1))?;
        let opt_ok = optimistic == (q.above > q.below)
            && optimistic == (l.below > l.above)
            && optimistic == (nl.below > nl.above);
        let one_ok = one_positive == (q.above == 1) && one_positive == (l.below == 1) && one_positive == (nl.below == 1);
        eq = Some(opt_ok && one_ok);
        dq = Some(q);
        dl = Some(l);
        dnl = Some(nl);
    }
    Ok(Classification {
        transmission_regular: tr,
        diameter: info.diameter,
        inertia,
        optimistic,
        one_positive_d_eigenvalue: one_positive,
        distinct_d_eigenvalues: p.distinct_root_count(),
        dq_around_t: dq,
        dl_around_t: dl,
        dnl_around_1: dnl,
        equivalences_hold: eq,
    })
}

/// Family spec, graph6, or digraph6 with a leading `&`.
pub fn parse_operand(s: &str) -> Result<AnyGraph> {
    if let Ok(spec) = s.parse::<FamilySpec>() {
        return spec.build();
    }
    let t = s.trim();
    if t.starts_with('&') {
        Ok(crate::graph::parse_digraph6(t)?.into())
    } else {
        Ok(crate::graph::parse_graph6(t)?.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let f: FamilySpec = "hamming:3,2".parse().unwrap();
        assert_eq!(f, FamilySpec::Hamming(3, 2));
        assert_eq!(f.to_string(), "hamming:3,2");
        assert_eq!("Petersen".parse::<FamilySpec>().unwrap(), FamilySpec::Petersen);
        assert_eq!("CompleteK:5".parse::<FamilySpec>().unwrap(), FamilySpec::CompleteK(5));
        assert!("paley:7".parse::<FamilySpec>().is_err());
        assert!("kpk:1,1,1".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn structures() {
        let q3 = FamilySpec::Hypercube(3).build().unwrap();
        assert_eq!(q3.as_graph().unwrap().is_regular(), Some(3));
        let p = FamilySpec::Kpk(1, 6, 1).build().unwrap();
        assert!(crate::graph::is_isomorphic(p.as_graph().unwrap(), &path(6)).unwrap());
        let g13 = FamilySpec::Paley(13).build().unwrap();
        assert_eq!(srg_params(g13.as_graph().unwrap()), Some((13, 6, 2, 3)));
        let g9 = FamilySpec::Paley(9).build().unwrap();
        assert_eq!(srg_params(g9.as_graph().unwrap()), Some((9, 4, 1, 2)));
        assert!(is_dsrg(&dsrg_8_4_3_1_3(), (8, 4, 3, 1, 3)));
        assert_eq!(heawood().is_regular(), Some(3));
        assert_eq!(srg_params(&heawood()), None);
    }

    #[test]
    fn oracle_examples() {
        let c4 = FamilySpec::Hamming(2, 2).oracle_spectrum(MatrixVariant::D).unwrap();
        assert_eq!(c4, OracleSpectrum::new(vec![(ev(-2), 2), (ev(0), 1), (ev(4), 1)]));
        let pet = FamilySpec::Petersen.oracle_spectrum(MatrixVariant::D).unwrap();
        assert_eq!(pet, OracleSpectrum::new(vec![(ev(15), 1), (ev(-3), 5), (ev(0), 4)]));
        let pet_nl = FamilySpec::Petersen.oracle_spectrum(MatrixVariant::DNL).unwrap();
        assert_eq!(pet_nl, OracleSpectrum::new(vec![(ev(0), 1), (ev(1), 4), (ExactValue::ratio(6, 5), 5)]));
        let dsrg = FamilySpec::Dsrg(8, 4, 3, 1, 3).oracle_spectrum(MatrixVariant::D).unwrap();
        assert_eq!(dsrg, OracleSpectrum::new(vec![(ev(10), 1), (ev(0), 2), (ev(-2), 5)]));
        assert!(matches!(FamilySpec::Path(4).oracle_spectrum(MatrixVariant::D), Err(Error::NoClosedForm(_))));
    }

    #[test]
    fn oracles_match_direct() {
        for spec in [
            FamilySpec::CompleteBipartite(2, 3),
            FamilySpec::Cycle(6),
            FamilySpec::Cycle(7),
            FamilySpec::StarPlusEdge(6),
            FamilySpec::Paley(13),
            FamilySpec::CocktailParty(3),
            FamilySpec::Dsrg(8, 4, 3, 1, 3),
        ] {
            for v in MatrixVariant::ALL {
                let c = match check_oracle(&spec, v, 1e-9) {
                    Err(Error::NoClosedForm(_)) => continue,
                    r => r.unwrap(),
                };
                assert!(c.numeric_match, "{spec} {v}: {}", c.max_abs_error);
                assert_ne!(c.exact_match, Some(false), "{spec} {v}");
            }
        }
    }

    #[test]
    fn classification() {
        let c = classify(FamilySpec::Paley(13).build().unwrap().as_graph().unwrap()).unwrap();
        assert!(c.optimistic);
        assert_eq!((c.inertia.n_plus, c.inertia.n_minus, c.inertia.n_zero), (7, 6, 0));
        assert_eq!(c.equivalences_hold, Some(true));
        let k222 = classify(&multipartite(&[2, 2, 2])).unwrap();
        assert!(k222.one_positive_d_eigenvalue);
        let pet = classify(&petersen()).unwrap();
        assert_eq!(pet.distinct_d_eigenvalues, 3);
        assert_eq!(pet.diameter, 2);
    }
}
