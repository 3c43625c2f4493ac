mod common;

use common::{close, connected_graph, cycle_chord, random_connected, random_strong_digraph, rng, sorted, strong_digraph};
use distspec::cospectral::d4;
use distspec::families::{complete, cycle};
use distspec::matrix::{symmetric_form_f64, variant_matrix};
use distspec::numeric::{
    aberth_roots,
    edge_addition_monotonicity, eigenvalues, interlacing_check, jacobi_eigen, max_residual, polynomial_spectrum,
    variant_spectrum, verify_bounds,
};
use distspec::poly::char_poly_exact;
use distspec::{AnyGraph, DistanceInfo, Graph, MatrixVariant};
use proptest::prelude::*;
use rand::Rng;

fn reals(info: &DistanceInfo, v: MatrixVariant) -> Vec<f64> {
    sorted(variant_spectrum(info, v).unwrap().real_parts())
}

#[test]
fn d4_spectra() {
    let info = DistanceInfo::of_digraph(&d4()).unwrap();
    assert!(close(&reals(&info, MatrixVariant::D), &[-2.0, -1.0, -1.0, 4.0], 1e-12));
    assert!(close(&reals(&info, MatrixVariant::DQ), &[2.0, 3.0, 3.0, 8.0], 1e-12));
    let rev = DistanceInfo::of_digraph(&d4().reverse()).unwrap();
    let s5 = 5f64.sqrt();
    assert!(close(&reals(&rev, MatrixVariant::DL), &[0.0, (11.0 - s5) / 2.0, 5.0, (11.0 + s5) / 2.0], 1e-12));
    assert!(close(&reals(&rev, MatrixVariant::D), &[-2.0, -1.0, -1.0, 4.0], 1e-12));
}

#[test]
fn complete_graph_spectrum() {
    let s = variant_spectrum(&DistanceInfo::of_graph(&complete(5)).unwrap(), MatrixVariant::D).unwrap();
    assert_eq!(s.multiplicities(), [4, 1]);
    assert!(close(&s.real_parts(), &[-1.0, -1.0, -1.0, -1.0, 4.0], 1e-12));
}

#[test]
fn named_bounds() {
    let k6 = verify_bounds(&complete(6).into()).unwrap();
    assert!(k6.ok() && k6.get("n-1 <= rho(D)").unwrap().tight);
    let dicycle = distspec::Digraph::from_arcs(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>()).unwrap();
    let r = verify_bounds(&dicycle.into()).unwrap();
    assert!(r.ok());
    assert!((r.get("rho(D) <= n(n-1)/2").unwrap().lhs - 10.0).abs() < 1e-9);
}

#[test]
fn edge_addition_examples() {
    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let r = edge_addition_monotonicity(&star, (1, 2)).unwrap();
    assert!(r.rho_dl_unchanged && r.rho_d_strict);
    assert!((r.comparison(MatrixVariant::DL).rho_after - 9.0).abs() < 1e-9);
    let r = edge_addition_monotonicity(&cycle(5), (0, 2)).unwrap();
    assert!(r.comparison(MatrixVariant::DL).weakly_decreasing);
    assert!(cycle_chord().is_connected());
}

#[test]
fn interlacing_examples() {
    assert!((0..6).all(|v| interlacing_check(&cycle(6), v).unwrap()));
    assert!(interlacing_check(&distspec::families::path(5), 0).unwrap());
    assert!((0..4).all(|v| interlacing_check(&complete(4), v).unwrap()));
}

#[test]
fn random_strong_digraph_bounds() {
    let mut r = rng(7);
    for i in 0..500 {
        let n = r.gen_range(2..=7);
        let p = r.gen_range(0.0..0.6);
        let d = random_strong_digraph(&mut r, n, p);
        let rep = verify_bounds(&d.clone().into()).unwrap();
        assert!(rep.ok(), "sample {i}: {:?}", rep.failures());
    }
}

#[test]
fn random_edge_additions() {
    let mut r = rng(11);
    let mut done = 0;
    while done < 500 {
        let n = r.gen_range(3..=8);
        let p = r.gen_range(0.0..0.6);
        let g = random_connected(&mut r, n, p);
        let missing = g.non_edges();
        if missing.is_empty() {
            continue;
        }
        let e = missing[r.gen_range(0..missing.len())];
        let rep = edge_addition_monotonicity(&g, e).unwrap();
        assert!(rep.rho_d_strict && rep.rho_dq_strict, "{g:?} + {e:?}");
        done += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn positive_semidefinite(g in connected_graph(2, 8)) {
        let info = DistanceInfo::of_graph(&g).unwrap();
        for v in [MatrixVariant::DQ, MatrixVariant::DL, MatrixVariant::DNL] {
            prop_assert!(variant_spectrum(&info, v).unwrap().min_real() >= -1e-9);
        }
        let dnl = variant_spectrum(&info, MatrixVariant::DNL).unwrap();
        prop_assert!(dnl.spectral_radius() <= 2.0 + 1e-9);
    }

    #[test]
    fn graph_bounds_hold(g in connected_graph(2, 8)) {
        let r = verify_bounds(&g.into()).unwrap();
        prop_assert!(r.ok(), "{:?}", r.failures());
    }

    #[test]
    fn digraph_real_parts(d in strong_digraph(2, 7)) {
        let info = DistanceInfo::of_digraph(&d).unwrap();
        for v in [MatrixVariant::DQ, MatrixVariant::DL, MatrixVariant::DNL] {
            prop_assert!(variant_spectrum(&info, v).unwrap().min_real() >= -1e-9);
        }
        let dl = variant_spectrum(&info, MatrixVariant::DL).unwrap();
        prop_assert!(dl.clusters.iter().any(|c| c.re.abs() < 1e-9 && c.im.abs() < 1e-9));
    }

    #[test]
    fn perron_root_simple(g in connected_graph(2, 8)) {
        let info = DistanceInfo::of_graph(&g).unwrap();
        for v in [MatrixVariant::D, MatrixVariant::DQ] {
            let s = variant_spectrum(&info, v).unwrap();
            prop_assert_eq!(s.clusters.last().unwrap().multiplicity, 1);
        }
    }

    #[test]
    fn solvers_agree(g in connected_graph(2, 8)) {
        let info = DistanceInfo::of_graph(&g).unwrap();
        for v in MatrixVariant::ALL {
            let a = symmetric_form_f64(&info, v).unwrap();
            let (vals, vecs) = jacobi_eigen(&a).unwrap();
            prop_assert!(max_residual(&a, &vals, &vecs) < 1e-9);
            let p = char_poly_exact(&variant_matrix(&info, v).unwrap());
            let roots = polynomial_spectrum(&p, 1e-7).unwrap().real_parts();
            prop_assert!(close(&sorted(vals), &roots, 1e-8));
        }
    }

    #[test]
    fn nonsymmetric_route_matches(g in connected_graph(2, 7)) {
        let info = DistanceInfo::of_graph(&g).unwrap();
        let m = variant_matrix(&info, MatrixVariant::DNL).unwrap();
        let a = sorted(eigenvalues(&m, false).unwrap().real_parts());
        prop_assert!(close(&a, &reals(&info, MatrixVariant::DNL), 1e-8));
    }

    #[test]
    fn interlaces(g in connected_graph(2, 8), v in 0usize..8) {
        prop_assume!(v < g.order());
        prop_assert!(interlacing_check(&g, v).unwrap());
    }
}

#[test]
fn aberth_simple_roots() {
    // (x - 1)(x - 2)(x^2 + 1)
    let r = aberth_roots(&[2.0, -3.0, 3.0, -3.0, 1.0]).unwrap();
    let re = sorted(r.iter().map(|z| z.re).collect());
    assert!(close(&re, &[0.0, 0.0, 1.0, 2.0], 1e-12));
    assert!(r.iter().filter(|z| z.im.abs() > 0.5).count() == 2);
}

#[test]
fn any_graph_bounds_reject_single_vertex() {
    assert!(verify_bounds(&AnyGraph::Graph(complete(1))).is_err());
}
