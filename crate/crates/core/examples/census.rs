//! Cospectral counts for every connected graph of one order.
//!
//! `cargo run --release --example census -- 7`

use distspec::cli::{render_census, Format};
use distspec::cospectral::census_with_jobs;
use distspec::graph::enumerate_connected_graphs;
use distspec::MatrixVariant;

fn main() -> distspec::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let jobs = std::thread::available_parallelism().map_or(1, |j| j.get());
    let catalog = enumerate_connected_graphs(n)?;
    let c = census_with_jobs(&catalog, &MatrixVariant::ALL, jobs)?;
    println!("{}", render_census(&c, Format::Text));
    Ok(())
}
