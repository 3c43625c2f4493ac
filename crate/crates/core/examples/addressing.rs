//! Squashed-cube addressings: the tree construction and exhaustive minima.

use distspec::addressing::{minimal_addressing_search, tree_addressing, verify_addressing};
use distspec::families::{complete, cycle};
use distspec::Graph;

fn main() -> distspec::Result<()> {
    let t = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])?;
    let a = tree_addressing(&t)?;
    println!("tree addressing, valid {}:\n{a}", verify_addressing(&t, &a)?);
    for (name, g) in [("K4", complete(4)), ("C4", cycle(4)), ("C5", cycle(5)), ("C6", cycle(6))] {
        let s = minimal_addressing_search(&g, g.order() - 1)?;
        println!("N({name}) = {} (lower bound {}, {} nodes)", s.length, s.lower_bound, s.nodes);
        println!("{}", s.witness.lines().join(" "));
    }
    Ok(())
}
