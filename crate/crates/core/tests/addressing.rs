mod common;

use common::{connected_graph, rng, shuffled};
use distspec::addressing::{
    address_distance, distance_inertia, minimal_addressing_search, tree_addressing, tree_addressing_rooted,
    verify_addressing, Addressing, Symbol,
};
use distspec::families::{complete, cycle, multipartite, path};
use distspec::graph::{enumerate_connected_graphs, enumerate_trees};
use distspec::Error;
use proptest::prelude::*;

#[test]
fn hand_checked_addressings() {
    let k3: Addressing = "0* 10 11".parse().unwrap();
    assert!(verify_addressing(&complete(3), &k3).unwrap());
    assert!(k3.uses_star());
    let c4: Addressing = "00,01,11,10".parse().unwrap();
    assert!(verify_addressing(&cycle(4), &c4).unwrap());
    let wrong: Addressing = "00 01 10 11".parse().unwrap();
    assert!(!verify_addressing(&cycle(4), &wrong).unwrap());
    assert!("0x".parse::<Addressing>().is_err());
    assert!(verify_addressing(&complete(3), &"00 1".parse().unwrap()).is_err());
    assert!(verify_addressing(&complete(3), &"0 1".parse().unwrap()).is_err());
    assert_eq!(k3.to_string(), "0*\n10\n11");
}

#[test]
fn tree_constructions() {
    assert_eq!(tree_addressing_rooted(&path(4), 0).unwrap().lines(), ["000", "100", "110", "111"]);
    assert_eq!(tree_addressing(&multipartite(&[1, 3])).unwrap().lines(), ["000", "100", "010", "001"]);
    for n in 2..=9 {
        for t in enumerate_trees(n).unwrap() {
            let a = tree_addressing(&t).unwrap();
            assert!(verify_addressing(&t, &a).unwrap());
            assert_eq!(a.length().unwrap(), n - 1);
            assert!(!a.uses_star());
        }
    }
    assert!(matches!(tree_addressing(&cycle(5)), Err(Error::NotATree)));
}

#[test]
fn known_minima() {
    assert_eq!(minimal_addressing_search(&complete(4), 3).unwrap().length, 3);
    assert_eq!(minimal_addressing_search(&cycle(4), 3).unwrap().length, 2);
    assert_eq!(minimal_addressing_search(&cycle(5), 4).unwrap().length, 4);
    assert_eq!(minimal_addressing_search(&cycle(6), 5).unwrap().length, 3);
    assert_eq!(minimal_addressing_search(&complete(6), 5).unwrap().length, 5);
    assert!(matches!(minimal_addressing_search(&cycle(7), 6), Err(Error::OrderTooLarge { .. })));
}

#[test]
fn minima_within_inertia_bounds() {
    for n in 2..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let s = minimal_addressing_search(&g, n - 1).unwrap();
            let i = distance_inertia(&g).unwrap();
            assert_eq!(s.lower_bound, i.n_plus.max(i.n_minus));
            assert!(s.lower_bound <= s.length && s.length <= n - 1);
            assert!(verify_addressing(&g, &s.witness).unwrap());
            assert_eq!(s.witness.length().unwrap(), s.length);
        }
    }
}

#[test]
fn minimum_is_label_invariant() {
    let mut r = rng(3);
    for g in enumerate_connected_graphs(5).unwrap() {
        let h = g.relabel(&shuffled(&mut r, 5)).unwrap();
        assert_eq!(minimal_addressing_search(&g, 4).unwrap().length, minimal_addressing_search(&h, 4).unwrap().length);
    }
}

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(Symbol::Zero), Just(Symbol::One), Just(Symbol::Star)]
}

proptest! {
    #[test]
    fn distance_is_symmetric(a in proptest::collection::vec(symbol(), 6), b in proptest::collection::vec(symbol(), 6)) {
        prop_assert_eq!(address_distance(&a, &b), address_distance(&b, &a));
        prop_assert_eq!(address_distance(&a, &a), 0);
    }

    #[test]
    fn flips_and_permutations_preserve_validity(g in connected_graph(2, 5), seed in any::<u64>()) {
        let s = minimal_addressing_search(&g, g.order() - 1).unwrap();
        let r = s.length;
        let mut rr = rng(seed);
        let perm = shuffled(&mut rr, r);
        let flip: Vec<bool> = (0..r).map(|i| (seed >> i) & 1 == 1).collect();
        let words = s.witness.words.iter().map(|w| {
            (0..r).map(|j| {
                let x = w[perm[j]];
                match (x, flip[j]) {
                    (Symbol::Zero, true) => Symbol::One,
                    (Symbol::One, true) => Symbol::Zero,
                    (x, _) => x,
                }
            }).collect()
        }).collect();
        let moved = Addressing { words };
        prop_assert!(verify_addressing(&g, &moved).unwrap());
    }
}
