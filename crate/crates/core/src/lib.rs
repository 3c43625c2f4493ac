//! Distance matrices of graphs and digraphs: exact characteristic
//! polynomials, spectra, cospectral censuses and closed-form checks.

pub mod error;
pub mod addressing;
pub mod cli;
pub mod cospectral;
pub mod exact;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod numeric;
pub mod poly;
pub mod products;
pub mod reductions;

pub use error::{Error, Result};
pub use exact::{ExactValue, OracleSpectrum};
pub use graph::{AnyGraph, Digraph, DistanceInfo, Graph};
pub use matrix::{MatrixVariant, RationalMatrix};
pub use numeric::Spectrum;
pub use poly::ExactPolynomial;
