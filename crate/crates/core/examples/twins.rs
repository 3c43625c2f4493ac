//! Twin classes and the quotient reduction on a star with one extra edge.

use distspec::cli::twins_report;
use distspec::Graph;
use distspec::MatrixVariant;

fn main() -> distspec::Result<()> {
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)])?;
    let r = twins_report(&g, &MatrixVariant::ALL)?;
    for c in r.partition.nontrivial() {
        println!("{:?} {:?} transmission {}", c.kind, c.vertices, c.transmission);
    }
    for v in &r.variants {
        println!("{}: twin eigenvalues {:?}", v.variant, v.twin_eigenvalues);
        println!("    quotient {}", v.quotient_polynomial);
        println!("    assembled = direct: {}", v.matches);
    }
    Ok(())
}
