//! Cartesian and lexicographic products against their closed forms.

use distspec::products::{cartesian_power, cartesian_power_spectrum, product_report, shipped_pairs};
use distspec::families::dsrg_8_4_3_1_3;
use distspec::matrix::{distance_matrix, matches_oracle_exact};
use distspec::DistanceInfo;

fn main() -> distspec::Result<()> {
    for spec in shipped_pairs()? {
        let r = product_report(&spec)?;
        println!("{:?} order {:>3} via {:?}: {}", r.kind, r.order, r.theorem, if r.all_match() { "match" } else { "MISMATCH" });
    }
    let sq = cartesian_power(&dsrg_8_4_3_1_3(), 2)?;
    let oracle = cartesian_power_spectrum(8, 10, -2, 5, 2);
    let ok = matches_oracle_exact(&distance_matrix(&DistanceInfo::of_digraph(&sq)?), &oracle)?;
    println!("DSRG(8,4,3,1,3) squared, order {}: {ok}", sq.order());
    Ok(())
}
