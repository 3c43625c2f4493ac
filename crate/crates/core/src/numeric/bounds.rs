use serde::Serialize;

use super::{eigenvalues, variant_spectrum, Spectrum};
use crate::error::{Error, Result};
use crate::graph::{AnyGraph, Digraph, DistanceInfo, Graph};
use crate::matrix::{distance_matrix, MatrixVariant};

pub const SLACK: f64 = 1e-8;

fn slack(x: f64) -> f64 {
    SLACK * x.abs().max(1.0)
}

/// One inequality `lhs <= rhs`.
#[derive(Clone, Debug, Serialize)]
pub struct Bound {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub tight: bool,
    /// The structural equality condition, when one is known; `Some(false)`
    /// marks a strict inequality.
    pub equality_condition: Option<bool>,
    /// `tight` agrees with `equality_condition`.
    pub consistent: bool,
}

impl Bound {
    pub fn le(name: &str, lhs: f64, rhs: f64, condition: Option<bool>) -> Self {
        let tol = slack(rhs).max(slack(lhs));
        let holds = lhs <= rhs + tol;
        let tight = (lhs - rhs).abs() <= tol;
        Bound {
            name: name.to_string(),
            lhs,
            rhs,
            holds,
            tight,
            equality_condition: condition,
            consistent: condition.map_or(true, |c| c == tight),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BoundsReport {
    pub bounds: Vec<Bound>,
}

impl BoundsReport {
    fn push(&mut self, b: Bound) {
        self.bounds.push(b);
    }

    pub fn all_hold(&self) -> bool {
        self.bounds.iter().all(|b| b.holds)
    }

    pub fn all_consistent(&self) -> bool {
        self.bounds.iter().all(|b| b.consistent)
    }

    pub fn ok(&self) -> bool {
        self.all_hold() && self.all_consistent()
    }

    pub fn get(&self, name: &str) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn failures(&self) -> Vec<&Bound> {
        self.bounds.iter().filter(|b| !b.holds || !b.consistent).collect()
    }
}

struct Spectra {
    d: Spectrum,
    dq: Spectrum,
    dl: Spectrum,
    dnl: Spectrum,
}

fn all_spectra(info: &DistanceInfo) -> Result<Spectra> {
    Ok(Spectra {
        d: variant_spectrum(info, MatrixVariant::D)?,
        dq: variant_spectrum(info, MatrixVariant::DQ)?,
        dl: variant_spectrum(info, MatrixVariant::DL)?,
        dnl: variant_spectrum(info, MatrixVariant::DNL)?,
    })
}

fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
}

fn is_path(g: &Graph) -> bool {
    g.is_tree() && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// Evaluate every spectral radius bound that applies to the input.
pub fn verify_bounds(g: &AnyGraph) -> Result<BoundsReport> {
    if g.order() < 2 {
        return Err(Error::OrderOutOfRange(g.order()));
    }
    let info = g.distances()?;
    let sp = all_spectra(&info)?;
    match g {
        AnyGraph::Graph(g) => graph_bounds(g, &info, &sp),
        AnyGraph::Digraph(d) => digraph_bounds(d, &info, &sp),
    }
}

fn psd_bounds(r: &mut BoundsReport, sp: &Spectra) {
    r.push(Bound::le("min_re_DQ_nonnegative", 0.0, sp.dq.min_real() + SLACK, None));
    r.push(Bound::le("min_re_DL_nonnegative", 0.0, sp.dl.min_real() + SLACK, None));
    r.push(Bound::le("min_re_DNL_nonnegative", 0.0, sp.dnl.min_real() + SLACK, None));
}

fn graph_bounds(g: &Graph, info: &DistanceInfo, sp: &Spectra) -> Result<BoundsReport> {
    let n = g.order();
    let nf = n as f64;
    let t: Vec<f64> = info.transmissions.iter().map(|&x| x as f64).collect();
    let tmin = t.iter().cloned().fold(f64::INFINITY, f64::min);
    let tmax = t.iter().cloned().fold(0.0, f64::max);
    let tbar = t.iter().sum::<f64>() / nf;
    let tr = Some(info.transmission_regular().is_some());
    let complete = Some(g.size() == n * (n - 1) / 2);
    let (rd, rq, rl, rn) = (
        sp.d.spectral_radius(),
        sp.dq.spectral_radius(),
        sp.dl.spectral_radius(),
        sp.dnl.spectral_radius(),
    );
    let mut r = BoundsReport::default();
    r.push(Bound::le("t_min <= rho(D)", tmin, rd, tr));
    r.push(Bound::le("t_bar <= rho(D)", tbar, rd, tr));
    r.push(Bound::le("rho(D) <= t_max", rd, tmax, tr));
    r.push(Bound::le("2t_min <= rho(DQ)", 2.0 * tmin, rq, tr));
    r.push(Bound::le("2t_bar <= rho(DQ)", 2.0 * tbar, rq, tr));
    r.push(Bound::le("rho(DQ) <= 2t_max", rq, 2.0 * tmax, tr));
    r.push(Bound::le("rho(DL) <= 2t_max", rl, 2.0 * tmax, None));
    r.push(Bound::le("n-1 <= rho(D)", nf - 1.0, rd, complete));
    r.push(Bound::le("2n-2 <= rho(DQ)", 2.0 * nf - 2.0, rq, complete));
    r.push(Bound::le("n <= rho(DL)", nf, rl, complete));
    r.push(Bound::le("n/(n-1) <= rho(DNL)", nf / (nf - 1.0), rn, complete));
    r.push(Bound::le("rho(DNL) <= 2", rn, 2.0, (n >= 3).then_some(false)));
    let p = DistanceInfo::of_graph(&path(n))?;
    let pp = all_spectra(&p)?;
    let on_path = Some(is_path(g));
    r.push(Bound::le("rho(D) <= rho(D(P_n))", rd, pp.d.spectral_radius(), on_path));
    r.push(Bound::le("rho(DQ) <= rho(DQ(P_n))", rq, pp.dq.spectral_radius(), on_path));
    r.push(Bound::le("rho(DL) <= rho(DL(P_n))", rl, pp.dl.spectral_radius(), on_path));
    psd_bounds(&mut r, sp);
    Ok(r)
}

fn digraph_bounds(d: &Digraph, info: &DistanceInfo, sp: &Spectra) -> Result<BoundsReport> {
    let n = d.order();
    let nf = n as f64;
    let t: Vec<f64> = info.sorted_transmissions().iter().map(|&x| x as f64).collect();
    let (t1, t2, ta, tb) = (t[0], t[1], t[n - 2], t[n - 1]);
    let tr = Some(info.transmission_regular().is_some());
    let complete = Some(d.arc_count() == n * (n - 1));
    let dicycle = Some(d.arc_count() == n);
    let (rd, rq, rl, rn) = (
        sp.d.spectral_radius(),
        sp.dq.spectral_radius(),
        sp.dl.spectral_radius(),
        sp.dnl.spectral_radius(),
    );
    let mut r = BoundsReport::default();
    r.push(Bound::le("t_min <= rho(D)", t1, rd, tr));
    r.push(Bound::le("rho(D) <= t_max", rd, tb, tr));
    r.push(Bound::le("2t_min <= rho(DQ)", 2.0 * t1, rq, tr));
    r.push(Bound::le("rho(DQ) <= 2t_max", rq, 2.0 * tb, tr));
    r.push(Bound::le("sqrt(t1 t2) <= rho(D)", (t1 * t2).sqrt(), rd, tr));
    r.push(Bound::le("rho(D) <= sqrt(t_(n-1) t_n)", rd, (ta * tb).sqrt(), tr));
    r.push(Bound::le("t1+t2 <= rho(DQ)", t1 + t2, rq, tr));
    r.push(Bound::le("rho(DQ) <= t_(n-1)+t_n", rq, ta + tb, tr));
    r.push(Bound::le("n-1 <= rho(D)", nf - 1.0, rd, complete));
    r.push(Bound::le("2(n-1) <= rho(DQ)", 2.0 * (nf - 1.0), rq, complete));
    r.push(Bound::le("rho(D) <= n(n-1)/2", rd, nf * (nf - 1.0) / 2.0, dicycle));
    r.push(Bound::le("rho(DQ) <= n(n-1)", rq, nf * (nf - 1.0), dicycle));
    r.push(Bound::le("rho(DL) <= 2t_max", rl, 2.0 * tb, None));
    r.push(Bound::le("rho(DNL) <= 2", rn, 2.0, None));
    psd_bounds(&mut r, sp);
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct VariantComparison {
    pub variant: MatrixVariant,
    pub before: Vec<f64>,
    pub after: Vec<f64>,
    /// Every sorted eigenvalue is at least its counterpart after the change.
    pub weakly_decreasing: bool,
    pub rho_before: f64,
    pub rho_after: f64,
}

impl VariantComparison {
    fn new(variant: MatrixVariant, b: &Spectrum, a: &Spectrum) -> Self {
        let before = b.real_parts();
        let after = a.real_parts();
        let weakly_decreasing = before.iter().zip(&after).all(|(x, y)| *y <= x + slack(*x));
        VariantComparison {
            variant,
            weakly_decreasing,
            rho_before: b.spectral_radius(),
            rho_after: a.spectral_radius(),
            before,
            after,
        }
    }

    pub fn rho_strictly_decreases(&self) -> bool {
        self.rho_after < self.rho_before - slack(self.rho_before)
    }

    pub fn rho_unchanged(&self) -> bool {
        (self.rho_after - self.rho_before).abs() <= slack(self.rho_before)
    }

    pub fn rho_nonincreasing(&self) -> bool {
        self.rho_after <= self.rho_before + slack(self.rho_before)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeAdditionReport {
    pub edge: (usize, usize),
    pub comparisons: Vec<VariantComparison>,
    pub rho_d_strict: bool,
    pub rho_dq_strict: bool,
    pub rho_dl_unchanged: bool,
}

impl EdgeAdditionReport {
    pub fn comparison(&self, v: MatrixVariant) -> &VariantComparison {
        self.comparisons.iter().find(|c| c.variant == v).unwrap()
    }

    /// Strict decrease of both Perron roots and index-wise decrease for
    /// `DQ` and `DL`; the index-wise comparison for `D` is only reported.
    pub fn consistent(&self) -> bool {
        self.comparisons[1..].iter().all(|c| c.weakly_decreasing) && self.rho_d_strict && self.rho_dq_strict
    }
}

/// Compare the `D`, `DQ`, `DL` spectra of `g` and `g + uv`.
pub fn edge_addition_monotonicity(g: &Graph, (u, v): (usize, usize)) -> Result<EdgeAdditionReport> {
    let h = g.with_edge(u, v)?;
    let bi = DistanceInfo::of_graph(g)?;
    let ai = DistanceInfo::of_graph(&h)?;
    let mut comparisons = Vec::new();
    for var in [MatrixVariant::D, MatrixVariant::DQ, MatrixVariant::DL] {
        comparisons.push(VariantComparison::new(
            var,
            &variant_spectrum(&bi, var)?,
            &variant_spectrum(&ai, var)?,
        ));
    }
    Ok(EdgeAdditionReport {
        edge: (u, v),
        rho_d_strict: comparisons[0].rho_strictly_decreases(),
        rho_dq_strict: comparisons[1].rho_strictly_decreases(),
        rho_dl_unchanged: comparisons[2].rho_unchanged(),
        comparisons,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ArcAdditionReport {
    pub arc: (usize, usize),
    pub rho_d: (f64, f64),
    pub rho_dq: (f64, f64),
    pub rho_dl: (f64, f64),
    pub rho_d_strict: bool,
    pub rho_dq_strict: bool,
    /// Reported only; no theorem covers it.
    pub rho_dl_nonincreasing: bool,
}

/// Spectral radii of `D`, `DQ`, `DL` before and after adding the arc `uv`.
pub fn arc_addition_report(d: &Digraph, (u, v): (usize, usize)) -> Result<ArcAdditionReport> {
    let h = d.with_arc(u, v)?;
    let bi = DistanceInfo::of_digraph(d)?;
    let ai = DistanceInfo::of_digraph(&h)?;
    let rho = |info: &DistanceInfo, var| variant_spectrum(info, var).map(|s| s.spectral_radius());
    let pair = |var| -> Result<(f64, f64)> { Ok((rho(&bi, var)?, rho(&ai, var)?)) };
    let rho_d = pair(MatrixVariant::D)?;
    let rho_dq = pair(MatrixVariant::DQ)?;
    let rho_dl = pair(MatrixVariant::DL)?;
    Ok(ArcAdditionReport {
        arc: (u, v),
        rho_d_strict: rho_d.1 < rho_d.0 - slack(rho_d.0),
        rho_dq_strict: rho_dq.1 < rho_dq.0 - slack(rho_dq.0),
        rho_dl_nonincreasing: rho_dl.1 <= rho_dl.0 + slack(rho_dl.0),
        rho_d,
        rho_dq,
        rho_dl,
    })
}

/// Cauchy interlacing between `D(G)` and `D(G)` with row and column `v`
/// deleted (not `D(G - v)`).
pub fn interlacing_check(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.order() {
        return Err(Error::InvalidInput(format!("no vertex {v}")));
    }
    let m = distance_matrix(&DistanceInfo::of_graph(g)?);
    let keep: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
    let sub = m.submatrix(&keep, &keep);
    let big = eigenvalues(&m, true)?.real_parts();
    let small = eigenvalues(&sub, true)?.real_parts();
    Ok(small.iter().enumerate().all(|(i, &mu)| {
        big[i] <= mu + slack(mu) && mu <= big[i + 1] + slack(mu)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn complete_graph_minimum_is_tight() {
        let r = verify_bounds(&AnyGraph::Graph(complete(6))).unwrap();
        assert!(r.ok(), "{:?}", r.failures());
        let b = r.get("n-1 <= rho(D)").unwrap();
        assert!(b.tight && (b.rhs - 5.0).abs() < 1e-10);
    }

    #[test]
    fn path_four_not_tight() {
        let r = verify_bounds(&AnyGraph::Graph(path(4))).unwrap();
        assert!(r.ok(), "{:?}", r.failures());
        let b = r.get("t_bar <= rho(D)").unwrap();
        assert_eq!(b.lhs, 5.0);
        assert!(!b.tight);
        assert_eq!(r.get("rho(D) <= t_max").unwrap().rhs, 6.0);
        assert!(r.get("rho(D) <= rho(D(P_n))").unwrap().tight);
    }

    #[test]
    fn dicycle_maximum_is_tight() {
        let c = Digraph::from_arcs(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>()).unwrap();
        let r = verify_bounds(&AnyGraph::Digraph(c)).unwrap();
        assert!(r.ok(), "{:?}", r.failures());
        let b = r.get("rho(D) <= n(n-1)/2").unwrap();
        assert!(b.tight && (b.lhs - 10.0).abs() < 1e-9);
    }

    #[test]
    fn star_plus_edge_keeps_laplacian_radius() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let rep = edge_addition_monotonicity(&star, (1, 2)).unwrap();
        assert!(rep.rho_dl_unchanged);
        assert!((rep.comparison(MatrixVariant::DL).rho_after - 9.0).abs() < 1e-9);
        assert!(rep.consistent());
        assert!(!rep.comparison(MatrixVariant::D).weakly_decreasing);
        assert!(edge_addition_monotonicity(&star, (0, 1)).is_err());
    }

    #[test]
    fn interlacing_small_cases() {
        let c6 = Graph::from_edges(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        assert!(interlacing_check(&c6, 2).unwrap());
        assert!(interlacing_check(&path(5), 0).unwrap());
        assert!(interlacing_check(&complete(4), 1).unwrap());
    }
}
