mod common;

use common::{connected_graph, graph, star_plus_edge};
use distspec::exact::{int, rat};
use distspec::families::{cycle, multipartite, FamilySpec};
use distspec::graph::enumerate_connected_graphs;
use distspec::matrix::{matches_oracle_exact, variant_matrix};
use distspec::poly::char_poly_exact;
use distspec::reductions::{
    find_twins, quotient, quotient_spectrum, twin_eigenvalue, twin_eigenvector, twin_reduction, TwinType,
};
use distspec::{DistanceInfo, ExactPolynomial, MatrixVariant};
use num_rational::BigRational;
use proptest::prelude::*;

#[test]
fn twin_classes() {
    let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    let nt: Vec<_> = find_twins(&star).unwrap().nontrivial().cloned().collect();
    assert_eq!(nt.len(), 1);
    assert_eq!((nt[0].vertices.clone(), nt[0].kind), (vec![1, 2, 3], TwinType::IndependentTwins));

    let p = find_twins(&star_plus_edge(5)).unwrap();
    let nt: Vec<_> = p.nontrivial().map(|c| (c.vertices.clone(), c.kind, c.transmission)).collect();
    assert_eq!(
        nt,
        [(vec![1, 2], TwinType::AdjacentTwins, 6), (vec![3, 4], TwinType::IndependentTwins, 7)]
    );

    assert!(!find_twins(&cycle(5)).unwrap().has_twins());
}

#[test]
fn twin_eigenvalues() {
    assert_eq!(twin_eigenvalue(MatrixVariant::DL, TwinType::IndependentTwins, 5).unwrap(), int(7));
    for t in [1, 4, 11] {
        assert_eq!(twin_eigenvalue(MatrixVariant::D, TwinType::AdjacentTwins, t).unwrap(), int(-1));
    }
    assert_eq!(twin_eigenvalue(MatrixVariant::DNL, TwinType::IndependentTwins, 4).unwrap(), rat(3, 2));
    // 7 is a DL eigenvalue of K_{1,3} with multiplicity 2.
    let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    let p = char_poly_exact(&variant_matrix(&DistanceInfo::of_graph(&star).unwrap(), MatrixVariant::DL).unwrap());
    let lin = ExactPolynomial::linear(&int(7));
    assert!(p.div_exact(&lin.pow(2)).is_some() && p.div_exact(&lin.pow(3)).is_none());
}

#[test]
fn twin_vectors_are_eigenvectors() {
    let g = star_plus_edge(6);
    let info = DistanceInfo::of_graph(&g).unwrap();
    for c in find_twins(&g).unwrap().nontrivial() {
        for v in MatrixVariant::ALL {
            let m = variant_matrix(&info, v).unwrap();
            let lambda = twin_eigenvalue(v, c.kind, c.transmission).unwrap();
            let x = twin_eigenvector(6, c.vertices[0], c.vertices[1]);
            let mx: Vec<BigRational> =
                (0..6).map(|i| (0..6).map(|j| m.get(i, j) * &x[j]).sum()).collect();
            let lx: Vec<BigRational> = x.iter().map(|e| e * &lambda).collect();
            assert_eq!(mx, lx, "{v}");
        }
    }
}

#[test]
fn star_plus_dnl_quadratic() {
    let n = 6i64;
    let g = star_plus_edge(6);
    let (asm, direct) = twin_reduction(&g, MatrixVariant::DNL).unwrap();
    assert_eq!(asm.polynomial, direct);
    let s = rat(8 * n * n - 20 * n + 7, 2 * (n - 2) * (2 * n - 3));
    let p = rat(2 * n * n - n, (n - 1) * (2 * n - 3));
    assert_eq!((s.clone(), p.clone()), (rat(175, 72), rat(22, 15)));
    let quad = ExactPolynomial::new(vec![p, -s, int(1)]);
    let expected = ExactPolynomial::x()
        .mul(&ExactPolynomial::linear(&rat(9, 8)))
        .mul(&ExactPolynomial::linear(&rat(11, 9)).pow(2))
        .mul(&quad);
    assert_eq!(direct, expected);
}

#[test]
fn star_distance_quotient() {
    let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    let (asm, direct) = twin_reduction(&star, MatrixVariant::D).unwrap();
    assert_eq!(asm.polynomial, direct);
    assert_eq!(asm.twin_eigenvalues, [("-2".to_string(), 2)]);
    assert_eq!(asm.quotient.b.rows(), 2);
    let q = char_poly_exact(&asm.quotient.b);
    assert_eq!(direct, q.mul(&ExactPolynomial::linear(&int(-2)).pow(2)));
}

#[test]
fn bipartite_signless_against_closed_form() {
    let g = multipartite(&[2, 3]);
    let part = find_twins(&g).unwrap();
    assert_eq!(part.cells().iter().map(Vec::len).collect::<Vec<_>>(), [2, 3]);
    let info = DistanceInfo::of_graph(&g).unwrap();
    let m = variant_matrix(&info, MatrixVariant::DQ).unwrap();
    let asm = quotient_spectrum(&m, &part, MatrixVariant::DQ).unwrap();
    let oracle = FamilySpec::CompleteBipartite(2, 3).oracle_spectrum(MatrixVariant::DQ).unwrap();
    assert_eq!(Some(asm.polynomial), oracle.to_polynomial());
    assert!(matches_oracle_exact(&m, &oracle).unwrap());
}

#[test]
fn assembly_exhaustive_to_seven() {
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if !find_twins(&g).unwrap().has_twins() {
                continue;
            }
            for v in MatrixVariant::ALL {
                let (asm, direct) = twin_reduction(&g, v).unwrap();
                assert_eq!(asm.polynomial, direct, "{g:?} {v}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twin_partition_is_equitable(g in connected_graph(2, 9)) {
        let part = find_twins(&g).unwrap();
        let cells = part.cells();
        let mut all: Vec<usize> = cells.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.order()).collect::<Vec<_>>());
        let info = DistanceInfo::of_graph(&g).unwrap();
        for v in MatrixVariant::ALL {
            let m = variant_matrix(&info, v).unwrap();
            prop_assert!(quotient(&m, &cells).is_ok());
        }
    }
}
