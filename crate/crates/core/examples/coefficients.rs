//! Coefficient sequences: log-concavity, unimodality and tree peak windows.

use distspec::cli::coefficient_sections;
use distspec::families::heawood;
use distspec::matrix::distance_matrix;
use distspec::poly::{char_poly_exact, coefficient_analytics, CoefficientMode};
use distspec::{DistanceInfo, Graph, MatrixVariant};

fn main() -> distspec::Result<()> {
    let tree = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6), (6, 7)])?;
    for s in coefficient_sections(&tree.into(), &MatrixVariant::ALL)? {
        let seq: Vec<String> = s.absolute.sequence.iter().map(|c| c.to_string()).collect();
        println!("{}: |c| = [{}] log-concave {} unimodal {}", s.variant, seq.join(", "), s.absolute.is_log_concave, s.absolute.is_unimodal);
        if let (Some(d), Some(w), Some(c)) = (&s.normalized, s.peak_window, s.conjectured_window) {
            println!("    normalized peak {} window {w:?} conjectured {c:?}", d.peak_index);
        }
    }
    let p = char_poly_exact(&distance_matrix(&DistanceInfo::of_graph(&heawood())?));
    let d = coefficient_analytics(&p, CoefficientMode::TreeNormalized)?;
    println!("Heawood normalized sequence unimodal: {}", d.is_unimodal);
    Ok(())
}
