mod common;

use common::sweep;
use distspec::exact::ExactValue;
use distspec::families::{
    check_oracle, classify, dsrg_8_4_3_1_3, is_dsrg, path, petersen, strongly_regular_parameters, FamilySpec,
};
use distspec::graph::is_isomorphic;
use distspec::{Error, MatrixVariant, OracleSpectrum};

#[test]
fn oracle_sweep() {
    let mut exact = 0;
    let mut compared = 0;
    for spec in sweep() {
        for v in MatrixVariant::ALL {
            let c = match check_oracle(&spec, v, 1e-9) {
                Ok(c) => c,
                Err(Error::NoClosedForm(_)) => continue,
                Err(e) => panic!("{spec} {v}: {e}"),
            };
            compared += 1;
            assert!(c.numeric_match, "{spec} {v}: error {}", c.max_abs_error);
            if let Some(ok) = c.exact_match {
                assert!(ok, "{spec} {v}: exact mismatch");
                exact += 1;
            }
        }
    }
    assert!(compared > 350 && exact > 300, "{compared} {exact}");
}

#[test]
fn named_oracles() {
    let show = |s: &OracleSpectrum| s.0.iter().map(|(x, m)| format!("{x}^{m}")).collect::<Vec<_>>();
    let h = FamilySpec::Hamming(2, 2).oracle_spectrum(MatrixVariant::D).unwrap();
    assert_eq!(show(&h), ["-2^2", "0^1", "4^1"]);
    let p = FamilySpec::Srg(10, 3, 0, 1).oracle_spectrum(MatrixVariant::D).unwrap();
    assert_eq!(show(&p), ["-3^5", "0^4", "15^1"]);
    let d = FamilySpec::Dsrg(8, 4, 3, 1, 3).oracle_spectrum(MatrixVariant::D).unwrap();
    assert_eq!(show(&d), ["-2^5", "0^2", "10^1"]);
    let k = FamilySpec::CompleteK(5).oracle_spectrum(MatrixVariant::DNL).unwrap();
    assert_eq!(k.0, [(ExactValue::int(0), 1), (ExactValue::ratio(5, 4), 4)]);
    for n in 4..=8 {
        for spec in [FamilySpec::Star(n), FamilySpec::StarPlusEdge(n)] {
            let dl = spec.oracle_spectrum(MatrixVariant::DL).unwrap();
            assert_eq!(dl.max_value(), (2 * n - 1) as f64, "{spec}");
        }
    }
    assert!(matches!(FamilySpec::Heawood.oracle_spectrum(MatrixVariant::D), Err(Error::NoClosedForm(_))));
}

#[test]
fn constructions() {
    let q3 = FamilySpec::Hypercube(3).build().unwrap();
    let q3 = q3.as_graph().unwrap();
    assert_eq!((q3.order(), q3.is_regular()), (8, Some(3)));
    for n in 2..=7 {
        let k = FamilySpec::Kpk(1, n, 1).build().unwrap();
        assert!(is_isomorphic(k.as_graph().unwrap(), &path(n)).unwrap());
    }
    let p13 = FamilySpec::Paley(13).build().unwrap();
    assert_eq!(strongly_regular_parameters(p13.as_graph().unwrap()), Some((13, 6, 2, 3)));
    assert_eq!(strongly_regular_parameters(&petersen()), Some((10, 3, 0, 1)));
    assert!(is_dsrg(&dsrg_8_4_3_1_3(), (8, 4, 3, 1, 3)));
    assert!(FamilySpec::Paley(7).build().is_err());
    assert!(FamilySpec::Srg(16, 6, 2, 2).build().is_err());
}

#[test]
fn parsing() {
    for (s, want) in [
        ("hamming:3,2", FamilySpec::Hamming(3, 2)),
        ("petersen", FamilySpec::Petersen),
        ("paley:13", FamilySpec::Paley(13)),
        ("K:5", FamilySpec::CompleteK(5)),
        ("dsrg:8,4,3,1,3", FamilySpec::Dsrg(8, 4, 3, 1, 3)),
    ] {
        assert_eq!(s.parse::<FamilySpec>().unwrap(), want);
        assert_eq!(want.to_string().parse::<FamilySpec>().unwrap(), want);
    }
    assert!("nonsense:1".parse::<FamilySpec>().is_err());
    assert!("hamming:3".parse::<FamilySpec>().is_err());
    let json = serde_json::to_string(&FamilySpec::Hamming(3, 2)).unwrap();
    assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), FamilySpec::Hamming(3, 2));
}

#[test]
fn classifications() {
    let paley = FamilySpec::Paley(13).build().unwrap();
    let c = classify(paley.as_graph().unwrap()).unwrap();
    assert!(c.optimistic);
    assert_eq!((c.inertia.n_plus, c.inertia.n_minus, c.inertia.n_zero), (7, 6, 0));
    assert_eq!(c.equivalences_hold, Some(true));

    let c5 = FamilySpec::Paley(5).build().unwrap();
    assert!(classify(c5.as_graph().unwrap()).unwrap().one_positive_d_eigenvalue);
    let cp = FamilySpec::CocktailParty(3).build().unwrap();
    assert!(classify(cp.as_graph().unwrap()).unwrap().one_positive_d_eigenvalue);

    let p = classify(&petersen()).unwrap();
    assert_eq!((p.distinct_d_eigenvalues, p.diameter), (3, 2));
    assert!(p.distinct_d_eigenvalues as u64 <= p.diameter + 1);
}
