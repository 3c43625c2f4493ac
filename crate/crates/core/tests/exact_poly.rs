mod common;

use common::{connected_graph, graph, strong_digraph};
use distspec::exact::{exact_roots, int, rat};
use distspec::families::{complete, heawood, path, petersen, FamilySpec};
use distspec::graph::enumerate_trees;
use distspec::matrix::{distance_matrix, variant_matrix};
use distspec::poly::{
    char_poly_exact, coefficient_analytics, generalized_char_poly, inertia_exact, is_log_concave, is_unimodal,
    tree_peak_window, CoefficientMode, Inertia,
};
use distspec::{DistanceInfo, Error, ExactPolynomial, MatrixVariant, RationalMatrix};
use num_rational::BigRational;
use proptest::prelude::*;

fn poly_of(g: &distspec::Graph, v: MatrixVariant) -> ExactPolynomial {
    char_poly_exact(&variant_matrix(&DistanceInfo::of_graph(g).unwrap(), v).unwrap())
}

fn inertia(p: usize, m: usize, z: usize) -> Inertia {
    Inertia { n_plus: p, n_minus: m, n_zero: z }
}

#[test]
fn star_polynomials() {
    let s = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    assert_eq!(poly_of(&s, MatrixVariant::DQ), ExactPolynomial::from_i64(&[216, -252, 105, -18, 1]));
    assert_eq!(poly_of(&s, MatrixVariant::DL), ExactPolynomial::from_i64(&[0, -196, 105, -18, 1]));
    let dnl = ExactPolynomial::new(vec![int(0), rat(-294, 125), rat(133, 25), int(-4), int(1)]);
    assert_eq!(poly_of(&s, MatrixVariant::DNL), dnl);
}

#[test]
fn generalized_polynomials() {
    let k3 = DistanceInfo::of_graph(&complete(3)).unwrap();
    assert_eq!(generalized_char_poly(&k3, &int(0)), ExactPolynomial::from_i64(&[-2, -3, 0, 1]));
    for (info, r) in [(k3, int(1)), (DistanceInfo::of_graph(&path(3)).unwrap(), rat(1, 2))] {
        let n = info.order();
        let m = RationalMatrix::from_fn(n, n, |i, j| {
            let d = int(info.dist[i][j] as i64);
            if i == j { d - &r * int(info.transmissions[i] as i64) } else { d }
        });
        assert_eq!(generalized_char_poly(&info, &r), char_poly_exact(&m));
    }
    // r = -1 gives the signless Laplacian.
    let p3 = DistanceInfo::of_graph(&path(3)).unwrap();
    assert_eq!(generalized_char_poly(&p3, &int(-1)), poly_of(&path(3), MatrixVariant::DQ));
}

#[test]
fn inertias() {
    let d = |g: &distspec::Graph| inertia_exact(&poly_of(g, MatrixVariant::D), true).unwrap();
    assert_eq!(d(&path(4)), inertia(1, 3, 0));
    assert_eq!(d(&complete(3)), inertia(1, 2, 0));
    let paley = FamilySpec::Paley(13).build().unwrap();
    assert_eq!(d(paley.as_graph().unwrap()), inertia(7, 6, 0));
    assert!(matches!(inertia_exact(&ExactPolynomial::from_i64(&[1, 0, 1]), false), Err(Error::NotSupported(_))));
}

#[test]
fn tree_coefficients_up_to_ten() {
    for n in 3..=10 {
        for t in enumerate_trees(n).unwrap() {
            let p = poly_of(&t, MatrixVariant::D);
            let abs = coefficient_analytics(&p, CoefficientMode::Absolute).unwrap();
            assert!(abs.is_log_concave && abs.is_unimodal, "{n}");
            let norm = coefficient_analytics(&p, CoefficientMode::TreeNormalized).unwrap();
            assert!(norm.is_log_concave && norm.is_unimodal);
            let diam = DistanceInfo::of_graph(&t).unwrap().diameter as usize;
            let (lo, hi) = tree_peak_window(n, diam);
            assert!(lo <= norm.peak_index && norm.peak_index <= hi, "peak {} not in [{lo}, {hi}]", norm.peak_index);
        }
    }
}

#[test]
fn heawood_normalized_not_unimodal() {
    let p = poly_of(&heawood(), MatrixVariant::D);
    assert!(!coefficient_analytics(&p, CoefficientMode::TreeNormalized).unwrap().is_unimodal);
}

#[test]
fn sequence_predicates() {
    let q = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<BigRational>>();
    assert!(is_log_concave(&q(&[1, 3, 3, 1])));
    assert!(!is_log_concave(&q(&[1, 1, 3])));
    assert!(is_unimodal(&q(&[1, 4, 4, 2])));
    assert!(!is_unimodal(&q(&[2, 1, 2])));
}

#[test]
fn petersen_roots_recovered() {
    let (roots, rest) = exact_roots(&poly_of(&petersen(), MatrixVariant::DNL));
    assert_eq!(rest.degree(), 0);
    let shown: Vec<String> = roots.0.iter().map(|(v, m)| format!("{v}^{m}")).collect();
    assert_eq!(shown, ["0^1", "1^4", "6/5^5"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn psd_variant_coefficients(g in connected_graph(3, 8)) {
        for v in [MatrixVariant::DQ, MatrixVariant::DL, MatrixVariant::DNL] {
            let p = poly_of(&g, v);
            prop_assert!(coefficient_analytics(&p, CoefficientMode::Raw).unwrap().is_log_concave);
            prop_assert!(coefficient_analytics(&p, CoefficientMode::Absolute).unwrap().is_unimodal);
        }
        let dl = coefficient_analytics(&poly_of(&g, MatrixVariant::DL), CoefficientMode::Absolute).unwrap();
        prop_assert!(dl.sequence[1..].windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn char_poly_basics(g in connected_graph(1, 8)) {
        let info = DistanceInfo::of_graph(&g).unwrap();
        let d = distance_matrix(&info);
        let p = char_poly_exact(&d);
        prop_assert!(p.is_monic() && p.is_integral());
        prop_assert_eq!(p.degree(), g.order());
        prop_assert_eq!(p.coeff(g.order() - 1), int(0));
        let sign = if g.order() % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(p.coeff(0), sign * d.det());
        let i = inertia_exact(&p, true).unwrap();
        prop_assert_eq!(i.n_plus + i.n_minus + i.n_zero, g.order());
    }

    #[test]
    fn square_free_reassembles(d in strong_digraph(2, 6)) {
        let p = char_poly_exact(&distance_matrix(&DistanceInfo::of_digraph(&d).unwrap()));
        let mut prod = ExactPolynomial::one();
        for (f, m) in p.square_free() {
            prod = prod.mul(&f.pow(m));
        }
        prop_assert_eq!(prod.monic(), p);
    }

    #[test]
    fn division_identity(a in proptest::collection::vec(-9i64..9, 1..7), b in proptest::collection::vec(-9i64..9, 1..5)) {
        let (a, b) = (ExactPolynomial::from_i64(&a), ExactPolynomial::from_i64(&b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(q.mul(&b).add(&r), a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }
}
