//! Cospectrality: exact fingerprints, catalog censuses, preserved parameters
//! and cousin constructions.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, is_isomorphic, structural_report, AnyGraph, Digraph, DistanceInfo, Graph, StructuralReport};
use crate::matrix::{variant_matrix, MatrixVariant};
use crate::numeric::{variant_spectrum, Spectrum};
use crate::poly::{char_poly_exact, ExactPolynomial};

/// Exact characteristic polynomial of one variant; `DNL` uses `T^-1 DL`.
pub fn fingerprint(g: &AnyGraph, variant: MatrixVariant) -> Result<ExactPolynomial> {
    let info = g.distances()?;
    Ok(char_poly_exact(&variant_matrix(&info, variant)?))
}

pub fn are_cospectral_any(g1: &AnyGraph, g2: &AnyGraph, variant: MatrixVariant) -> Result<bool> {
    if g1.order() != g2.order() {
        return Ok(false);
    }
    Ok(fingerprint(g1, variant)? == fingerprint(g2, variant)?)
}

pub fn are_cospectral(g1: &Graph, g2: &Graph, variant: MatrixVariant) -> Result<bool> {
    are_cospectral_any(&g1.clone().into(), &g2.clone().into(), variant)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CospectralClass {
    pub polynomial: ExactPolynomial,
    /// Canonical graph6 strings, sorted.
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantCensus {
    pub variant: MatrixVariant,
    /// Graphs having at least one cospectral mate.
    pub with_mate: usize,
    pub classes: Vec<CospectralClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub order: Option<usize>,
    pub graphs: usize,
    pub variants: Vec<VariantCensus>,
}

impl CensusResult {
    pub fn get(&self, v: MatrixVariant) -> Option<&VariantCensus> {
        self.variants.iter().find(|c| c.variant == v)
    }

    pub fn count(&self, v: MatrixVariant) -> Option<usize> {
        self.get(v).map(|c| c.with_mate)
    }

    pub const CSV_HEADER: &'static str = "n,connected_graphs,D,DQ,DL,DNL";

    /// `n,graphs,D,DQ,DL,DNL`; variants not computed are left empty.
    pub fn csv_row(&self) -> String {
        let mut cols = vec![
            self.order.map(|n| n.to_string()).unwrap_or_default(),
            self.graphs.to_string(),
        ];
        for v in MatrixVariant::ALL {
            cols.push(self.count(v).map(|c| c.to_string()).unwrap_or_default());
        }
        cols.join(",")
    }
}

/// Census of an isomorph-free catalog. Fingerprints are computed in
/// parallel and merged in catalog order, so the result does not depend on
/// the thread count.
pub fn census(catalog: &[Graph], variants: &[MatrixVariant]) -> Result<CensusResult> {
    let rows: Vec<(String, Vec<ExactPolynomial>)> = catalog
        .par_iter()
        .map(|g| -> Result<_> {
            let info = DistanceInfo::of_graph(g)?;
            let polys = variants
                .iter()
                .map(|&v| Ok(char_poly_exact(&variant_matrix(&info, v)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok((canonical_form(g)?.as_str().to_string(), polys))
        })
        .collect::<Result<_>>()?;
    let orders: BTreeSet<usize> = catalog.iter().map(|g| g.order()).collect();
    let mut out = Vec::new();
    for (k, &variant) in variants.iter().enumerate() {
        let mut table: BTreeMap<&ExactPolynomial, Vec<&str>> = BTreeMap::new();
        for (code, polys) in &rows {
            table.entry(&polys[k]).or_default().push(code);
        }
        let classes: Vec<CospectralClass> = table
            .into_iter()
            .filter(|(_, m)| m.len() > 1)
            .map(|(p, m)| {
                let mut members: Vec<String> = m.into_iter().map(str::to_string).collect();
                members.sort();
                CospectralClass { polynomial: p.clone(), members }
            })
            .collect();
        let with_mate = classes.iter().map(|c| c.members.len()).sum();
        out.push(VariantCensus { variant, with_mate, classes });
    }
    Ok(CensusResult {
        order: (orders.len() == 1).then(|| *orders.iter().next().unwrap()),
        graphs: catalog.len(),
        variants: out,
    })
}

/// `census` on a dedicated pool of `jobs` threads.
pub fn census_with_jobs(catalog: &[Graph], variants: &[MatrixVariant], jobs: usize) -> Result<CensusResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    pool.install(|| census(catalog, variants))
}

#[derive(Clone, Debug, Serialize)]
pub struct ParameterComparison {
    pub parameter: &'static str,
    pub left: serde_json::Value,
    pub right: serde_json::Value,
    pub preserved: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PreservationReport {
    pub variant: MatrixVariant,
    pub polynomial: ExactPolynomial,
    pub left: StructuralReport,
    pub right: StructuralReport,
    pub parameters: Vec<ParameterComparison>,
    /// Things that must agree for this variant but did not.
    pub violations: Vec<String>,
}

impl PreservationReport {
    pub fn parameter(&self, name: &str) -> Option<&ParameterComparison> {
        self.parameters.iter().find(|p| p.parameter == name)
    }
}

fn wiener(g: &Graph) -> Result<u64> {
    Ok(DistanceInfo::of_graph(g)?.wiener.unwrap_or(0))
}

pub fn preservation_report(g1: &Graph, g2: &Graph, variant: MatrixVariant) -> Result<PreservationReport> {
    let p1 = fingerprint(&g1.clone().into(), variant)?;
    let p2 = fingerprint(&g2.clone().into(), variant)?;
    if g1.order() != g2.order() || p1 != p2 {
        return Err(Error::NotCospectral);
    }
    let (a, b) = (structural_report(g1)?, structural_report(g2)?);
    let (w1, w2) = (wiener(g1)?, wiener(g2)?);
    let trace = |g: &Graph| -> Result<BigRational> {
        Ok(variant_matrix(&DistanceInfo::of_graph(g)?, variant)?.trace())
    };
    let (t1, t2) = (trace(g1)?, trace(g2)?);
    let cmp = |parameter: &'static str, l: serde_json::Value, r: serde_json::Value| ParameterComparison {
        parameter,
        preserved: l == r,
        left: l,
        right: r,
    };
    use serde_json::json;
    let parameters = vec![
        cmp("edges", json!(a.edges), json!(b.edges)),
        cmp("diameter", json!(a.diameter), json!(b.diameter)),
        cmp("girth", json!(a.girth), json!(b.girth)),
        cmp("planarity", json!(a.planar), json!(b.planar)),
        cmp("wiener_index", json!(w1), json!(w2)),
        cmp("degree_sequence", json!(a.degree_sequence), json!(b.degree_sequence)),
        cmp("transmission_sequence", json!(a.transmission_sequence), json!(b.transmission_sequence)),
        cmp("transmission_regularity", json!(a.transmission_regular), json!(b.transmission_regular)),
        cmp(
            "complement_components",
            json!(a.complement_component_count),
            json!(b.complement_component_count),
        ),
        cmp("trace", json!(t1.to_string()), json!(t2.to_string())),
    ];
    let mut violations = Vec::new();
    if t1 != t2 {
        violations.push("trace differs".to_string());
    }
    if matches!(variant, MatrixVariant::DQ | MatrixVariant::DL) && w1 != w2 {
        violations.push("Wiener index differs".to_string());
    }
    Ok(PreservationReport { variant, polynomial: p1, left: a, right: b, parameters, violations })
}

/// `{{v[0], v[1]}, {v[2], v[3]}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CousinSet {
    pub v: [usize; 4],
}

impl CousinSet {
    /// Checks both cousin conditions.
    pub fn check(g: &Graph, info: &DistanceInfo, v: [usize; 4]) -> bool {
        let n = g.order();
        if n < 5 || v.iter().any(|&x| x >= n) || v.iter().collect::<BTreeSet<_>>().len() != 4 {
            return false;
        }
        let d = |a: usize, b: usize| info.dist[a][b];
        let outside = (0..n).filter(|u| !v.contains(u));
        let mut s1 = 0;
        let mut s3 = 0;
        for u in outside {
            if d(u, v[0]) != d(u, v[1]) || d(u, v[2]) != d(u, v[3]) {
                return false;
            }
            s1 += d(u, v[0]);
            s3 += d(u, v[2]);
        }
        s1 == s3
    }
}

/// All cousin sets, each listed once with `v0 < v1`, `v2 < v3`, `v0 < v2`.
pub fn find_cousins(g: &Graph) -> Result<Vec<CousinSet>> {
    let info = DistanceInfo::of_graph(g)?;
    let n = g.order();
    let mut out = Vec::new();
    if n < 5 {
        return Ok(out);
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in a + 1..n {
                if c == b {
                    continue;
                }
                for d in c + 1..n {
                    if d == b {
                        continue;
                    }
                    if CousinSet::check(g, &info, [a, b, c, d]) {
                        out.push(CousinSet { v: [a, b, c, d] });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CousinForm {
    /// Add `v0v1` or `v2v3`.
    WithinPairs,
    /// Add `v0v2` or `v1v3`, with the swap `v0 <-> v3, v1 <-> v2` matching
    /// the two four-vertex pieces.
    AcrossPairs,
}

impl CousinForm {
    pub const ALL: [CousinForm; 2] = [CousinForm::WithinPairs, CousinForm::AcrossPairs];
}

fn induced_edges(g: &Graph, v: &[usize; 4]) -> BTreeSet<(usize, usize)> {
    let mut e = BTreeSet::new();
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(v[i], v[j]) {
                e.insert((i, j));
            }
        }
    }
    e
}

fn permute(e: &BTreeSet<(usize, usize)>, p: &[usize; 4]) -> BTreeSet<(usize, usize)> {
    e.iter().map(|&(i, j)| (p[i].min(p[j]), p[i].max(p[j]))).collect()
}

fn all_perms4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if p.iter().collect::<BTreeSet<_>>().len() == 4 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The eight orderings of a cousin set that keep its pair structure.
fn labelings(v: [usize; 4]) -> [[usize; 4]; 8] {
    let [a, b, c, d] = v;
    [
        [a, b, c, d],
        [b, a, c, d],
        [a, b, d, c],
        [b, a, d, c],
        [c, d, a, b],
        [d, c, a, b],
        [c, d, b, a],
        [d, c, b, a],
    ]
}

/// Applies one construction to a cousin set when every hypothesis holds
/// and the two results are non-isomorphic. `AcrossPairs` tries every
/// ordering of the set that keeps its pairs.
pub fn cousin_construction(g: &Graph, set: &CousinSet, form: CousinForm) -> Result<Option<(Graph, Graph)>> {
    let info = DistanceInfo::of_graph(g)?;
    if !CousinSet::check(g, &info, set.v) {
        return Ok(None);
    }
    match form {
        CousinForm::WithinPairs => {
            let v = set.v;
            if g.has_edge(v[0], v[1]) || g.has_edge(v[2], v[3]) {
                return Ok(None);
            }
            let g1 = g.with_edge(v[0], v[1])?;
            let g2 = g.with_edge(v[2], v[3])?;
            let (h1, h2) = (induced_edges(&g1, &v), induced_edges(&g2, &v));
            if !all_perms4().iter().any(|p| permute(&h1, p) == h2) {
                return Ok(None);
            }
            if is_isomorphic(&g1, &g2)? {
                return Ok(None);
            }
            Ok(Some((g1, g2)))
        }
        CousinForm::AcrossPairs => {
            let sigma = [3, 2, 1, 0];
            for v in labelings(set.v) {
                if g.has_edge(v[0], v[2]) || g.has_edge(v[1], v[3]) {
                    continue;
                }
                let g1 = g.with_edge(v[0], v[2])?;
                let g2 = g.with_edge(v[1], v[3])?;
                if permute(&induced_edges(&g1, &v), &sigma) != induced_edges(&g2, &v) {
                    continue;
                }
                let common = |x: usize, y: usize| -> Vec<usize> {
                    g.neighbors(x).iter().copied().filter(|&w| g.has_edge(y, w)).collect()
                };
                let (c12, c34) = (common(v[0], v[1]), common(v[2], v[3]));
                let covered = |from: &[usize], to: &[usize]| from.iter().all(|&x| to.iter().any(|&y| g.has_edge(x, y)));
                if !covered(&c12, &c34) || !covered(&c34, &c12) {
                    continue;
                }
                if is_isomorphic(&g1, &g2)? {
                    continue;
                }
                return Ok(Some((g1, g2)));
            }
            Ok(None)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CousinEmission {
    pub host: String,
    pub set: CousinSet,
    pub form: CousinForm,
    pub left: String,
    pub right: String,
    pub dl_cospectral: bool,
    pub non_isomorphic: bool,
}

impl CousinEmission {
    pub fn is_valid(&self) -> bool {
        self.dl_cospectral && self.non_isomorphic
    }
}

/// Runs both constructions over every cousin set of every catalog graph and
/// checks each emitted pair independently.
pub fn cousin_scan(catalog: &[Graph]) -> Result<Vec<CousinEmission>> {
    let per: Vec<Vec<CousinEmission>> = catalog
        .par_iter()
        .map(|g| -> Result<Vec<CousinEmission>> {
            let mut out = Vec::new();
            for set in find_cousins(g)? {
                for form in CousinForm::ALL {
                    if let Some((g1, g2)) = cousin_construction(g, &set, form)? {
                        out.push(CousinEmission {
                            host: crate::graph::encode_graph6(g),
                            set,
                            form,
                            left: crate::graph::encode_graph6(&g1),
                            right: crate::graph::encode_graph6(&g2),
                            dl_cospectral: are_cospectral(&g1, &g2, MatrixVariant::DL)?,
                            non_isomorphic: !is_isomorphic(&g1, &g2)?,
                        });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// No non-isomorphic catalog member shares the variant's spectrum with `g`.
pub fn determined_within_catalog(g: &Graph, catalog: &[Graph], variant: MatrixVariant) -> Result<bool> {
    let p = fingerprint(&g.clone().into(), variant)?;
    let mates = catalog
        .par_iter()
        .filter(|h| h.order() == g.order())
        .map(|h| -> Result<bool> {
            Ok(fingerprint(&(*h).clone().into(), variant)? == p && !is_isomorphic(g, h)?)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(!mates.into_iter().any(|m| m))
}

/// The transmission-regular digraph on four vertices whose reversal is not
/// transmission regular.
pub fn d4() -> Digraph {
    Digraph::from_arcs(4, &[(0, 1), (0, 3), (1, 0), (1, 2), (2, 0), (2, 1), (3, 0), (3, 2)]).unwrap()
}

#[derive(Clone, Debug, Serialize)]
pub struct ReversalComparison {
    pub variant: MatrixVariant,
    pub original: Spectrum,
    pub reversed: Spectrum,
    pub cospectral: bool,
}

/// Compares each variant's spectrum for a digraph and its reversal.
pub fn arc_reversal_report(d: &Digraph) -> Result<Vec<ReversalComparison>> {
    let a = DistanceInfo::of_digraph(d)?;
    let b = DistanceInfo::of_digraph(&d.reverse())?;
    MatrixVariant::ALL
        .iter()
        .map(|&variant| {
            Ok(ReversalComparison {
                variant,
                original: variant_spectrum(&a, variant)?,
                reversed: variant_spectrum(&b, variant)?,
                cospectral: char_poly_exact(&variant_matrix(&a, variant)?)
                    == char_poly_exact(&variant_matrix(&b, variant)?),
            })
        })
        .collect()
}
