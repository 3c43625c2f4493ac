use std::collections::BTreeMap;
use std::path::Path;

use distspec::graph::{
    canonical_form, encode_graph6, enumerate_connected_graphs, is_isomorphic, parse_graph6,
    read_catalog, CanonicalForm,
};
use distspec::{DistanceInfo, Graph};
use proptest::prelude::*;

fn fixture() -> Vec<Graph> {
    read_catalog(&Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected_3_to_7.g6"))
        .unwrap()
}

fn forms(gs: &[Graph]) -> Vec<CanonicalForm> {
    let mut f: Vec<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
    f.sort();
    f
}

#[test]
fn enumeration_matches_catalog_file() {
    let mut by_order: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in fixture() {
        by_order.entry(g.order()).or_default().push(g);
    }
    for (n, graphs) in by_order {
        let generated = enumerate_connected_graphs(n).unwrap();
        assert_eq!(forms(&generated), forms(&graphs), "order {n}");
    }
}

#[test]
fn enumeration_counts() {
    let counts: Vec<usize> = (3..=8)
        .map(|n| enumerate_connected_graphs(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![2, 6, 21, 112, 853, 11117]);
}

#[test]
fn enumeration_count_order_nine() {
    assert_eq!(enumerate_connected_graphs(9).unwrap().len(), 261_080);
}

#[test]
fn enumerated_graphs_are_connected_and_distinct() {
    let gs = enumerate_connected_graphs(7).unwrap();
    assert!(gs.iter().all(Graph::is_connected));
    let mut f = forms(&gs);
    f.dedup();
    assert_eq!(f.len(), gs.len());
}

#[test]
fn catalog_lines_round_trip() {
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected_3_to_7.g6"),
    )
    .unwrap();
    for line in text.lines() {
        assert_eq!(encode_graph6(&parse_graph6(line).unwrap()), line);
    }
}

#[test]
fn distance_invariants_up_to_order_seven() {
    for n in 3..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let info = DistanceInfo::of_graph(&g).unwrap();
            let d = &info.dist;
            for i in 0..n {
                assert_eq!(d[i][i], 0);
                assert_eq!(info.transmissions[i], d[i].iter().sum::<u64>());
                for j in 0..n {
                    assert_eq!(d[i][j], d[j][i]);
                    for k in 0..n {
                        assert!(d[i][k] <= d[i][j] + d[j][k]);
                    }
                }
            }
            assert_eq!(2 * info.wiener.unwrap(), info.transmissions.iter().sum::<u64>());
        }
    }
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn graph6_round_trip(g in random_graph()) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabelling_invariant(
        (g, p) in random_graph().prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn isomorphism_is_symmetric(a in random_graph(), b in random_graph()) {
        prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), is_isomorphic(&b, &a).unwrap());
    }
}
