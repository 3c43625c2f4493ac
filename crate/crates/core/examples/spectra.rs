//! Exact polynomials and spectra of the four distance variants of the Petersen graph.

use distspec::cli::{format_spectrum, spectra_report};
use distspec::families::petersen;
use distspec::MatrixVariant;

fn main() -> distspec::Result<()> {
    let g = petersen().into();
    let r = spectra_report(&g, &MatrixVariant::ALL)?;
    println!("order {} diameter {} transmissions {:?}", r.order, r.diameter, r.transmissions);
    for s in &r.variants {
        println!("{}: p(x) = {}", s.variant, s.polynomial);
        println!("    spectrum {}", format_spectrum(&s.exact_eigenvalues, &s.spectrum, s.unresolved_factor.is_none()));
        if let Some(i) = s.inertia {
            println!("    inertia ({}, {}, {})", i.n_plus, i.n_minus, i.n_zero);
        }
    }
    Ok(())
}
