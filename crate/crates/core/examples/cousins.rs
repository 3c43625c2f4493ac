//! Distance Laplacian cospectral pairs built from cousin vertex sets.

use distspec::cospectral::cousin_scan;
use distspec::graph::enumerate_connected_graphs;

fn main() -> distspec::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let found = cousin_scan(&enumerate_connected_graphs(n)?)?;
    for e in &found {
        println!("{} {:?} {:?}: {} / {} valid {}", e.host, e.set.v, e.form, e.left, e.right, e.is_valid());
    }
    println!("{} pairs at order {n}", found.len());
    Ok(())
}
