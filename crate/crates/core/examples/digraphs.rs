//! Digraph spectra and what arc reversal does to them.

use distspec::cospectral::{arc_reversal_report, d4};
use distspec::numeric::verify_bounds;

fn main() -> distspec::Result<()> {
    for r in arc_reversal_report(&d4())? {
        println!("{}: {:?} vs {:?} cospectral {}", r.variant, r.original.real_parts(), r.reversed.real_parts(), r.cospectral);
    }
    let b = verify_bounds(&d4().reverse().into())?;
    for x in &b.bounds {
        println!("{:<28} {:>10.6} <= {:<10.6} tight {}", x.name, x.lhs, x.rhs, x.tight);
    }
    Ok(())
}
