//! Closed-form spectra checked against the direct computation.

use distspec::families::{check_oracle, FamilySpec};
use distspec::{Error, MatrixVariant};

fn main() -> distspec::Result<()> {
    for s in ["complete:6", "kab:2,5", "cycle:9", "hamming:3,3", "star_plus_edge:7", "paley:13", "dsrg:8,4,3,1,3"] {
        let spec: FamilySpec = s.parse()?;
        for v in MatrixVariant::ALL {
            match check_oracle(&spec, v, 1e-9) {
                Ok(c) => {
                    let shown: Vec<String> = c.oracle.0.iter().map(|(x, m)| format!("{x}^{m}")).collect();
                    println!("{spec} {v}: {{{}}} error {:.1e} exact {:?}", shown.join(", "), c.max_abs_error, c.exact_match);
                }
                Err(Error::NoClosedForm(_)) => println!("{spec} {v}: no closed form"),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}
