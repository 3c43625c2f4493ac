//! Property suite over all connected graphs (and trees) of one order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::coefficient_sections;
use crate::addressing::{minimal_addressing_search, tree_addressing, verify_addressing};
use crate::cospectral::{census, cousin_scan, preservation_report};
use crate::error::{Error, Result};
use crate::families::classify;
use crate::graph::{encode_graph6, enumerate_connected_graphs, enumerate_trees, DistanceInfo, Graph};
use crate::matrix::{det_distance_tree, det_via_blocks, distance_matrix, MatrixVariant};
use crate::numeric::{edge_addition_monotonicity, interlacing_check, variant_spectrum, verify_bounds};
use crate::reductions::{find_twins, twin_reduction};

const EXAMPLES: usize = 5;

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// The first few failing inputs.
    pub examples: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult { name: name.to_string(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < EXAMPLES {
                self.examples.push(what());
            }
        }
    }

    fn merge(&mut self, other: &CheckResult) {
        self.checked += other.checked;
        self.failures += other.failures;
        for e in &other.examples {
            if self.examples.len() < EXAMPLES {
                self.examples.push(e.clone());
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub order: usize,
    pub graphs: usize,
    pub trees: usize,
    pub census_row: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("order {}: {} graphs, {} trees, census {}", self.order, self.graphs, self.trees, self.census_row);
        for c in &self.checks {
            s += &format!(
                "\n{:<28} {:>8} checked {:>4} failed{}",
                c.name,
                c.checked,
                c.failures,
                if c.examples.is_empty() { String::new() } else { format!("  e.g. {}", c.examples.join(" ")) }
            );
        }
        s
    }
}

const GRAPH_CHECKS: [&str; 9] = [
    "bounds",
    "psd",
    "twin_quotient",
    "coefficients",
    "inertia_reformulations",
    "interlacing",
    "block_determinant",
    "edge_addition",
    "perron_simple",
];

fn graph_checks(g: &Graph) -> Result<Vec<CheckResult>> {
    let mut out: Vec<CheckResult> = GRAPH_CHECKS.iter().map(|n| CheckResult::new(n)).collect();
    let id = || encode_graph6(g);
    let n = g.order();
    let info = DistanceInfo::of_graph(g)?;
    if n >= 2 {
        out[0].record(verify_bounds(&g.clone().into())?.ok(), id);
        for v in [MatrixVariant::DQ, MatrixVariant::DL, MatrixVariant::DNL] {
            out[1].record(variant_spectrum(&info, v)?.min_real() >= -1e-9, || format!("{} {v}", id()));
        }
    }
    if find_twins(g)?.has_twins() {
        for v in MatrixVariant::ALL {
            let (asm, direct) = twin_reduction(g, v)?;
            out[2].record(asm.polynomial == direct, || format!("{} {v}", id()));
        }
    }
    if n >= 3 {
        let secs = coefficient_sections(&g.clone().into(), &[MatrixVariant::DQ, MatrixVariant::DL, MatrixVariant::DNL])?;
        for s in secs {
            out[3].record(s.violations.is_empty(), || format!("{} {}", id(), s.variant));
        }
    }
    if info.transmission_regular().is_some() && n >= 2 {
        out[4].record(classify(g)?.equivalences_hold != Some(false), id);
    }
    for v in 0..n.min(if n >= 2 { n } else { 0 }) {
        out[5].record(interlacing_check(g, v)?, || format!("{} v{v}", id()));
    }
    out[6].record(det_via_blocks(g)? == distance_matrix(&info).det(), id);
    for e in g.non_edges() {
        let r = edge_addition_monotonicity(g, e)?;
        out[7].record(r.consistent(), || format!("{} +{:?}", id(), e));
    }
    if n >= 2 {
        for v in [MatrixVariant::D, MatrixVariant::DQ] {
            let s = variant_spectrum(&info, v)?;
            let top = s.clusters.iter().max_by(|a, b| a.re.total_cmp(&b.re)).unwrap();
            out[8].record(top.multiplicity == 1, || format!("{} {v}", id()));
        }
    }
    Ok(out)
}

/// Runs every property check for order `n` (at most the enumeration limit).
pub fn verify_order(n: usize, jobs: usize) -> Result<VerifyReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    pool.install(|| verify_inner(n))
}

fn verify_inner(n: usize) -> Result<VerifyReport> {
    let graphs = enumerate_connected_graphs(n)?;
    let per: Vec<Vec<CheckResult>> = graphs.par_iter().map(graph_checks).collect::<Result<_>>()?;
    let mut checks: Vec<CheckResult> = GRAPH_CHECKS.iter().map(|n| CheckResult::new(n)).collect();
    for row in &per {
        for (c, r) in checks.iter_mut().zip(row) {
            c.merge(r);
        }
    }

    let c = census(&graphs, &MatrixVariant::ALL)?;
    let mut pres = CheckResult::new("cospectral_preservation");
    let mut dq_tr = CheckResult::new("dq_transmission_regularity");
    let mut d_tr = CheckResult::new("d_regular_pairs");
    let mut dl_comp = CheckResult::new("dl_complement_components");
    for vc in &c.variants {
        for class in &vc.classes {
            let members: Vec<Graph> = class.members.iter().map(|m| crate::graph::parse_graph6(m)).collect::<Result<_>>()?;
            for other in &members[1..] {
                let r = preservation_report(&members[0], other, vc.variant)?;
                pres.record(r.violations.is_empty(), || format!("{} {} {}", vc.variant, class.members[0], encode_graph6(other)));
                let (a, b) = (&r.left, &r.right);
                if vc.variant == MatrixVariant::DQ && (a.transmission_regular || b.transmission_regular) {
                    dq_tr.record(a.transmission_regular && b.transmission_regular, || class.members[0].clone());
                }
                if vc.variant == MatrixVariant::D && a.transmission_regular && b.transmission_regular {
                    let w = |g: &Graph| DistanceInfo::of_graph(g).map(|i| i.wiener);
                    d_tr.record(
                        a.transmission_sequence == b.transmission_sequence && w(&members[0])? == w(other)?,
                        || class.members[0].clone(),
                    );
                }
                if vc.variant == MatrixVariant::DL {
                    dl_comp.record(a.complement_component_count == b.complement_component_count, || {
                        class.members[0].clone()
                    });
                }
            }
        }
    }
    checks.extend([pres, dq_tr, d_tr, dl_comp]);

    let mut cousins = CheckResult::new("cousin_constructions");
    if n >= 5 {
        for e in cousin_scan(&graphs)? {
            cousins.record(e.is_valid(), || format!("{} {:?}", e.host, e.set.v));
        }
    }
    checks.push(cousins);

    let trees = if n >= 2 { enumerate_trees(n)? } else { Vec::new() };
    let mut det = CheckResult::new("tree_determinant");
    let mut tcoef = CheckResult::new("tree_coefficients");
    let mut taddr = CheckResult::new("tree_addressing");
    for t in &trees {
        let info = DistanceInfo::of_graph(t)?;
        let direct = distance_matrix(&info).det();
        det.record(direct == num_rational::BigRational::from_integer(det_distance_tree(t)?), || encode_graph6(t));
        if n >= 3 {
            let s = &coefficient_sections(&t.clone().into(), &[MatrixVariant::D])?[0];
            tcoef.record(s.violations.is_empty(), || encode_graph6(t));
        }
        let a = tree_addressing(t)?;
        taddr.record(verify_addressing(t, &a)? && a.length()? == n - 1 && !a.uses_star(), || encode_graph6(t));
    }
    checks.extend([det, tcoef, taddr]);

    let mut addr = CheckResult::new("addressing_bounds");
    if (2..=5).contains(&n) {
        let found: Vec<(String, bool)> = graphs
            .par_iter()
            .map(|g| -> Result<(String, bool)> {
                let s = minimal_addressing_search(g, n - 1)?;
                Ok((encode_graph6(g), s.lower_bound <= s.length && s.length <= n - 1))
            })
            .collect::<Result<_>>()?;
        for (id, ok) in found {
            addr.record(ok, || id);
        }
    }
    checks.push(addr);

    let mut extremes = CheckResult::new("order_extremes");
    if n >= 2 {
        // Smallest spectral radius at K_n, largest (D, DQ, DL) at P_n.
        let mut best: BTreeMap<MatrixVariant, ((f64, usize), (f64, usize))> = BTreeMap::new();
        for (i, g) in graphs.iter().enumerate() {
            let info = DistanceInfo::of_graph(g)?;
            for v in MatrixVariant::ALL {
                let r = variant_spectrum(&info, v)?.spectral_radius();
                let e = best.entry(v).or_insert(((r, i), (r, i)));
                if r < e.0 .0 {
                    e.0 = (r, i);
                }
                if r > e.1 .0 {
                    e.1 = (r, i);
                }
            }
        }
        for (v, ((_, lo), (_, hi))) in best {
            extremes.record(graphs[lo].size() == n * (n - 1) / 2, || format!("{v} min at {}", encode_graph6(&graphs[lo])));
            if v != MatrixVariant::DNL {
                let g = &graphs[hi];
                let is_path = g.is_tree() && g.degree_sequence().iter().all(|&d| d <= 2);
                extremes.record(is_path, || format!("{v} max at {}", encode_graph6(g)));
            }
        }
    }
    checks.push(extremes);

    Ok(VerifyReport { order: n, graphs: graphs.len(), trees: trees.len(), census_row: c.csv_row(), checks })
}
