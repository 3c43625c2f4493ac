//! Cartesian and lexicographic products and their closed-form distance
//! spectra. Vertex `(u, u')` of a product is numbered `u * n' + u'`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, ExactValue, OracleSpectrum};
use crate::families::parse_operand;
use crate::graph::{AnyGraph, Digraph, Graph};
use crate::matrix::{distance_matrix, transform_tr_poly, MatrixVariant};
use crate::poly::{char_poly_exact, char_poly_integer, ExactPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cartesian" | "cart" | "box" => Ok(ProductKind::Cartesian),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            _ => Err(Error::InvalidInput(format!("unknown product kind {s:?}"))),
        }
    }
}

/// Structural facts the closed forms depend on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub left_transmission: Option<u64>,
    pub right_transmission: Option<u64>,
    /// Out-degree of the right operand when it is (out-)regular.
    pub right_regular: Option<usize>,
    /// Graphs always satisfy this; for digraphs every vertex of the left
    /// operand lies on a doubly directed arc.
    pub left_doubly_directed_cover: bool,
    /// `None` when the right operand is not (strongly) connected, which
    /// only the lexicographic product allows.
    pub right_diameter: Option<u64>,
    pub left_girth: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub kind: ProductKind,
    pub left: AnyGraph,
    pub right: AnyGraph,
}

/// Which closed form a product satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductTheorem {
    /// Both operands transmission regular.
    CartesianTransmissionRegular,
    /// Right operand `k'`-(out-)regular; for digraphs also every left vertex
    /// on a doubly directed arc.
    LexicographicRegularRight,
    /// Right digraph transmission regular with diameter at most the left
    /// girth.
    LexicographicShortRight,
}

fn cartesian_graph(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.order(), h.order());
    let mut e = Vec::new();
    for u in 0..n {
        for (a, b) in h.edges() {
            e.push((u * m + a, u * m + b));
        }
    }
    for (a, b) in g.edges() {
        for w in 0..m {
            e.push((a * m + w, b * m + w));
        }
    }
    Graph::from_edges(n * m, &e).unwrap()
}

fn lexicographic_graph(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.order(), h.order());
    let mut e = Vec::new();
    for u in 0..n {
        for (a, b) in h.edges() {
            e.push((u * m + a, u * m + b));
        }
    }
    for (a, b) in g.edges() {
        for x in 0..m {
            for y in 0..m {
                e.push((a * m + x, b * m + y));
            }
        }
    }
    Graph::from_edges(n * m, &e).unwrap()
}

fn cartesian_digraph(g: &Digraph, h: &Digraph) -> Digraph {
    let (n, m) = (g.order(), h.order());
    let mut arcs = Vec::new();
    for u in 0..n {
        for (a, b) in h.arcs() {
            arcs.push((u * m + a, u * m + b));
        }
    }
    for (a, b) in g.arcs() {
        for w in 0..m {
            arcs.push((a * m + w, b * m + w));
        }
    }
    Digraph::from_arcs(n * m, &arcs).unwrap()
}

fn lexicographic_digraph(g: &Digraph, h: &Digraph) -> Digraph {
    let (n, m) = (g.order(), h.order());
    let mut arcs = Vec::new();
    for u in 0..n {
        for (a, b) in h.arcs() {
            arcs.push((u * m + a, u * m + b));
        }
    }
    for (a, b) in g.arcs() {
        for x in 0..m {
            for y in 0..m {
                arcs.push((a * m + x, b * m + y));
            }
        }
    }
    Digraph::from_arcs(n * m, &arcs).unwrap()
}

fn as_digraph(g: &AnyGraph) -> Digraph {
    match g {
        AnyGraph::Graph(g) => g.to_digraph(),
        AnyGraph::Digraph(d) => d.clone(),
    }
}

impl ProductSpec {
    pub fn new(kind: ProductKind, left: impl Into<AnyGraph>, right: impl Into<AnyGraph>) -> Self {
        ProductSpec { kind, left: left.into(), right: right.into() }
    }

    pub fn is_directed(&self) -> bool {
        !(self.left.is_symmetric() && self.right.is_symmetric())
    }

    /// The structural product; mixed operands are treated as digraphs.
    pub fn build(&self) -> AnyGraph {
        match (&self.left, &self.right, self.kind) {
            (AnyGraph::Graph(g), AnyGraph::Graph(h), ProductKind::Cartesian) => cartesian_graph(g, h).into(),
            (AnyGraph::Graph(g), AnyGraph::Graph(h), ProductKind::Lexicographic) => {
                lexicographic_graph(g, h).into()
            }
            (l, r, kind) => {
                let (g, h) = (as_digraph(l), as_digraph(r));
                match kind {
                    ProductKind::Cartesian => cartesian_digraph(&g, &h).into(),
                    ProductKind::Lexicographic => lexicographic_digraph(&g, &h).into(),
                }
            }
        }
    }

    pub fn hypotheses(&self) -> Result<Hypotheses> {
        let li = self.left.distances()?;
        let ri = match self.kind {
            ProductKind::Cartesian => Some(self.right.distances()?),
            ProductKind::Lexicographic => self.right.distances().ok(),
        };
        let right_regular = match &self.right {
            AnyGraph::Graph(h) => h.is_regular(),
            AnyGraph::Digraph(h) => h.out_regular(),
        };
        let left_doubly_directed_cover = match &self.left {
            AnyGraph::Graph(_) => true,
            AnyGraph::Digraph(g) => g.every_vertex_on_doubly_directed_arc(),
        };
        Ok(Hypotheses {
            left_transmission: li.transmission_regular(),
            right_transmission: ri.as_ref().and_then(|i| i.transmission_regular()),
            right_regular,
            left_doubly_directed_cover,
            right_diameter: ri.as_ref().map(|i| i.diameter),
            left_girth: li.girth,
        })
    }

    /// The first closed form whose hypotheses hold.
    pub fn applicable_theorem(&self) -> Result<ProductTheorem> {
        let h = self.hypotheses()?;
        match self.kind {
            ProductKind::Cartesian => {
                if h.left_transmission.is_some() && h.right_transmission.is_some() {
                    Ok(ProductTheorem::CartesianTransmissionRegular)
                } else {
                    Err(Error::Hypothesis("cartesian closed form needs transmission regular operands".into()))
                }
            }
            ProductKind::Lexicographic => {
                if h.right_regular.is_some() && h.left_doubly_directed_cover {
                    Ok(ProductTheorem::LexicographicRegularRight)
                } else if self.is_directed()
                    && h.right_transmission.is_some()
                    && h.right_diameter.zip(h.left_girth).is_some_and(|(d, g)| d <= g)
                {
                    Ok(ProductTheorem::LexicographicShortRight)
                } else {
                    Err(Error::Hypothesis(
                        "lexicographic closed form needs a regular right operand (and a doubly directed cover on the left) or a transmission regular right operand of diameter at most the left girth".into(),
                    ))
                }
            }
        }
    }
}

fn to_q(t: u64) -> BigRational {
    int(t as i64)
}

/// `p / (x - r)`; fails when `r` is not a root.
fn deflate(p: &ExactPolynomial, r: &BigRational) -> Result<ExactPolynomial> {
    p.div_exact(&ExactPolynomial::linear(r))
        .ok_or_else(|| Error::Hypothesis(format!("{r} is not an eigenvalue of the operand")))
}

/// `{n t' + n' t} + {n' d_i} + {n d'_j} + {0^((n-1)(n'-1))}` as a polynomial,
/// from the operands' distance polynomials.
pub fn cartesian_poly_tr(
    left: &ExactPolynomial,
    right: &ExactPolynomial,
    t: u64,
    t2: u64,
) -> Result<ExactPolynomial> {
    let (n, n2) = (left.degree(), right.degree());
    let a = deflate(&left.scale_roots(&to_q(n2 as u64)), &to_q(n2 as u64 * t))?;
    let b = deflate(&right.scale_roots(&to_q(n as u64)), &to_q(n as u64 * t2))?;
    let top = ExactPolynomial::linear(&to_q(n as u64 * t2 + n2 as u64 * t));
    let zeros = ExactPolynomial::x().pow((n - 1) * (n2 - 1));
    Ok(top.mul(&a).mul(&b).mul(&zeros))
}

/// `{n' d_i + 2n' - k' - 2} + {(-a'_j - 2)^(n)}` with the right operand's
/// adjacency polynomial and degree `k'`.
pub fn lexicographic_poly(
    left_d: &ExactPolynomial,
    right_adj: &ExactPolynomial,
    k2: usize,
) -> Result<ExactPolynomial> {
    let (n, n2) = (left_d.degree(), right_adj.degree());
    let shift = int(2 * n2 as i64 - k2 as i64 - 2);
    let a = left_d.map_roots_affine(&shift, &int(n2 as i64));
    let rest = deflate(right_adj, &int(k2 as i64))?.map_roots_affine(&int(-2), &int(-1));
    Ok(a.mul(&rest.pow(n)))
}

/// `{n' d_i + t'} + {d'_j^(n)}` over the non-Perron roots of the right
/// operand.
pub fn lexicographic_poly_short_right(
    left_d: &ExactPolynomial,
    right_d: &ExactPolynomial,
    t2: u64,
) -> Result<ExactPolynomial> {
    let (n, n2) = (left_d.degree(), right_d.degree());
    let a = left_d.map_roots_affine(&to_q(t2), &int(n2 as i64));
    let rest = deflate(right_d, &to_q(t2))?;
    Ok(a.mul(&rest.pow(n)))
}

/// Numeric counterpart of [`cartesian_poly_tr`] on explicit eigenvalue lists.
pub fn cartesian_spectrum_tr(left: &[f64], right: &[f64], t: f64, t2: f64) -> Vec<f64> {
    let (n, n2) = (left.len() as f64, right.len() as f64);
    let mut out = vec![n * t2 + n2 * t];
    out.extend(drop_nearest(left, t).iter().map(|d| n2 * d));
    out.extend(drop_nearest(right, t2).iter().map(|d| n * d));
    out.extend(std::iter::repeat(0.0).take((left.len() - 1) * (right.len() - 1)));
    out.sort_by(f64::total_cmp);
    out
}

/// Numeric counterpart of [`lexicographic_poly`].
pub fn lexicographic_spectrum(left_d: &[f64], right_adj: &[f64], k2: f64) -> Vec<f64> {
    let n2 = right_adj.len() as f64;
    let mut out: Vec<f64> = left_d.iter().map(|d| n2 * d + 2.0 * n2 - k2 - 2.0).collect();
    for a in drop_nearest(right_adj, k2) {
        out.extend(std::iter::repeat(-a - 2.0).take(left_d.len()));
    }
    out.sort_by(f64::total_cmp);
    out
}

fn drop_nearest(v: &[f64], x: f64) -> Vec<f64> {
    let mut v = v.to_vec();
    if let Some(i) = (0..v.len()).min_by(|&i, &j| (v[i] - x).abs().total_cmp(&(v[j] - x).abs())) {
        v.remove(i);
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct VariantPolynomial {
    pub variant: MatrixVariant,
    pub closed_form: ExactPolynomial,
    pub direct: ExactPolynomial,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub kind: ProductKind,
    pub order: usize,
    pub theorem: ProductTheorem,
    pub hypotheses: Hypotheses,
    /// Transmission of the product when it is transmission regular,
    /// computed from its distances.
    pub transmission: Option<u64>,
    pub variants: Vec<VariantPolynomial>,
}

impl ProductReport {
    pub fn all_match(&self) -> bool {
        self.variants.iter().all(|v| v.matches)
    }
}

fn distance_poly(g: &AnyGraph) -> Result<ExactPolynomial> {
    Ok(char_poly_exact(&distance_matrix(&g.distances()?)))
}

fn adjacency_poly(g: &AnyGraph) -> ExactPolynomial {
    let a: Vec<Vec<BigInt>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    ExactPolynomial::new(char_poly_integer(&a).into_iter().map(BigRational::from_integer).collect())
}

/// Closed-form distance polynomial of the product, after checking hypotheses.
pub fn closed_form_distance_poly(spec: &ProductSpec) -> Result<(ProductTheorem, ExactPolynomial)> {
    let theorem = spec.applicable_theorem()?;
    let h = spec.hypotheses()?;
    let pl = distance_poly(&spec.left)?;
    let p = match theorem {
        ProductTheorem::CartesianTransmissionRegular => {
            let pr = distance_poly(&spec.right)?;
            cartesian_poly_tr(&pl, &pr, h.left_transmission.unwrap(), h.right_transmission.unwrap())?
        }
        ProductTheorem::LexicographicRegularRight => {
            lexicographic_poly(&pl, &adjacency_poly(&spec.right), h.right_regular.unwrap())?
        }
        ProductTheorem::LexicographicShortRight => {
            let pr = distance_poly(&spec.right)?;
            lexicographic_poly_short_right(&pl, &pr, h.right_transmission.unwrap())?
        }
    };
    Ok((theorem, p))
}

/// Closed form against direct computation for `D`, and for the other three
/// variants when the product is transmission regular.
pub fn product_report(spec: &ProductSpec) -> Result<ProductReport> {
    let (theorem, p_d) = closed_form_distance_poly(spec)?;
    let prod = spec.build();
    let info = prod.distances()?;
    let transmission = info.transmission_regular();
    let mut variants = Vec::new();
    let direct_d = char_poly_exact(&distance_matrix(&info));
    variants.push(VariantPolynomial {
        variant: MatrixVariant::D,
        matches: direct_d == p_d,
        closed_form: p_d.clone(),
        direct: direct_d,
    });
    if let Some(t) = transmission {
        for v in [MatrixVariant::DQ, MatrixVariant::DL, MatrixVariant::DNL] {
            let closed_form = transform_tr_poly(&p_d, t as i64, v)?;
            let direct = char_poly_exact(&crate::matrix::variant_matrix(&info, v)?);
            variants.push(VariantPolynomial { variant: v, matches: closed_form == direct, closed_form, direct });
        }
    }
    Ok(ProductReport {
        kind: spec.kind,
        order: prod.order(),
        theorem,
        hypotheses: spec.hypotheses()?,
        transmission,
        variants,
    })
}

/// Cartesian power `d □ d □ ... □ d` with `l` factors.
pub fn cartesian_power(d: &Digraph, l: usize) -> Result<Digraph> {
    if l == 0 {
        return Err(Error::InvalidInput("power must be at least 1".into()));
    }
    let mut out = d.clone();
    for _ in 1..l {
        out = cartesian_digraph(&out, d);
    }
    Ok(out)
}

/// Distance spectrum of the `l`-th Cartesian power of a transmission regular
/// digraph of order `n` whose distance spectrum is `{t, d2^(m), 0^(n-1-m)}`:
/// `{l t n^(l-1), (d2 n^(l-1))^(m l), 0^(n^l - 1 - m l)}`.
pub fn cartesian_power_spectrum(n: u64, t: i64, d2: i64, m: usize, l: u32) -> OracleSpectrum {
    let scale = (n as i64).pow(l - 1);
    let total = n.pow(l) as usize;
    let ml = m * l as usize;
    OracleSpectrum::new(vec![
        (ExactValue::int(l as i64 * t * scale), 1),
        (ExactValue::int(d2 * scale), ml),
        (ExactValue::Rational(BigRational::zero()), total - 1 - ml),
    ])
}

/// Structural transmission of a lexicographic product `G o G'` with `G`
/// `t`-transmission regular and `G'` `k'`-regular of order `n'`.
pub fn lexicographic_transmission(t: u64, n2: u64, k2: u64) -> u64 {
    t * n2 + 2 * n2 - 2 - k2
}

pub fn identity_check(spec: &ProductSpec) -> Result<bool> {
    // D(G □ G') = D(G) (x) J + J (x) D(G')
    if spec.kind != ProductKind::Cartesian {
        return Err(Error::NotSupported("identity check is for cartesian products".into()));
    }
    let dl = spec.left.distances()?;
    let dr = spec.right.distances()?;
    let dp = spec.build().distances()?;
    let m = dr.order();
    let n = dl.order();
    Ok((0..n * m).all(|i| {
        (0..n * m).all(|j| dp.dist[i][j] == dl.dist[i / m][j / m] + dr.dist[i % m][j % m])
    }))
}

const SHIPPED_PAIRS: &str = include_str!("../data/product_pairs.txt");

/// The bundled operand pairs, one `kind left right` per line; every pair
/// satisfies the hypotheses of one closed form.
pub fn shipped_pairs() -> Result<Vec<ProductSpec>> {
    SHIPPED_PAIRS
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 3 {
                return Err(Error::InvalidInput(format!("bad product pair line {l:?}")));
            }
            Ok(ProductSpec::new(f[0].parse()?, parse_operand(f[1])?, parse_operand(f[2])?))
        })
        .collect()
}
