//! Floating-point spectra, spectral radii and bound checks.

mod bounds;
mod jacobi;
mod roots;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::OracleSpectrum;
use crate::graph::DistanceInfo;
use crate::matrix::{inf_norm, symmetric_form_f64, variant_matrix, MatrixVariant, RationalMatrix};
use crate::poly::{char_poly_exact, ExactPolynomial};

pub use bounds::{
    arc_addition_report, edge_addition_monotonicity, interlacing_check, verify_bounds,
    ArcAdditionReport, Bound, BoundsReport, EdgeAdditionReport, SLACK,
};
pub use jacobi::{jacobi_eigen, max_residual};
pub use roots::aberth_roots;

/// Default radius factor for merging numerically equal eigenvalues.
pub const CLUSTER_RADIUS: f64 = 1e-7;

/// Format with 12 significant digits, trailing zeros dropped.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    let s = if !(-6..=15).contains(&mag) {
        let s = format!("{:.11e}", x);
        let (mant, exp) = s.split_once('e').unwrap();
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        format!("{mant}e{exp}")
    } else {
        let prec = (11 - mag).max(0) as usize;
        let s = format!("{:.*}", prec, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn round12(x: f64) -> f64 {
    fmt_f64(x).parse().unwrap_or(x)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cluster {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

impl Cluster {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl Serialize for Cluster {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Cluster", 3)?;
        st.serialize_field("re", &round12(self.re))?;
        st.serialize_field("im", &round12(self.im))?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// Eigenvalues sorted by `(re, im)`, their clusters and an exactness flag.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex64>,
    pub clusters: Vec<Cluster>,
    /// Set when the values come from a closed form.
    pub exact: bool,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.clusters.serialize(s)
    }
}

fn cmp_complex(a: &Complex64, b: &Complex64) -> std::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

impl Spectrum {
    /// Cluster `values` (each with a base multiplicity) within `radius`.
    pub fn from_weighted(values: Vec<(Complex64, usize)>, radius: f64, exact: bool) -> Self {
        let mut values = values;
        values.sort_by(|a, b| cmp_complex(&a.0, &b.0));
        let mut groups: Vec<(Complex64, Complex64, usize)> = Vec::new(); // (anchor, sum, count)
        for (z, m) in &values {
            match groups.iter_mut().find(|(a, _, _)| (*a - z).norm() <= radius) {
                Some((_, sum, c)) => {
                    *sum += z * *m as f64;
                    *c += m;
                }
                None => groups.push((*z, z * *m as f64, *m)),
            }
        }
        let mut clusters: Vec<Cluster> = groups
            .into_iter()
            .map(|(_, sum, c)| {
                let mean = sum / c as f64;
                Cluster { re: mean.re, im: mean.im, multiplicity: c }
            })
            .collect();
        clusters.sort_by(|a, b| cmp_complex(&a.value(), &b.value()));
        let eigenvalues = values
            .iter()
            .flat_map(|(z, m)| std::iter::repeat(*z).take(*m))
            .collect();
        Spectrum { eigenvalues, clusters, exact }
    }

    pub fn from_real(values: Vec<f64>, radius: f64) -> Self {
        Self::from_weighted(values.into_iter().map(|x| (Complex64::new(x, 0.0), 1)).collect(), radius, false)
    }

    pub fn from_oracle(o: &OracleSpectrum) -> Self {
        let vals = o.0.iter().map(|(v, m)| (Complex64::new(v.to_f64(), 0.0), *m)).collect();
        Self::from_weighted(vals, 1e-12, o.is_exact())
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Real parts, ascending.
    pub fn real_parts(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.eigenvalues.iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn min_real(&self) -> f64 {
        self.eigenvalues.iter().map(|z| z.re).fold(f64::INFINITY, f64::min)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.eigenvalues.iter().all(|z| z.im.abs() <= tol)
    }

    /// Element-wise comparison of the sorted eigenvalue lists.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .all(|(a, b)| (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm())))
    }

    /// Cluster multiplicities in order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.multiplicity).collect()
    }
}

pub fn cluster_radius(norm: f64) -> f64 {
    CLUSTER_RADIUS * norm.max(1.0)
}

/// Symmetric matrix given in floating point.
pub fn symmetric_spectrum_f64(a: &[Vec<f64>]) -> Result<Spectrum> {
    let norm = a.iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    let (values, vectors) = jacobi_eigen(a)?;
    if max_residual(a, &values, &vectors) > 1e-9 * norm.max(1.0) {
        return Err(Error::NoConvergence(jacobi::MAX_SWEEPS));
    }
    Ok(Spectrum::from_real(values, cluster_radius(norm)))
}

/// Roots of an exact polynomial, multiplicities taken from its square-free
/// decomposition.
pub fn polynomial_spectrum(p: &ExactPolynomial, radius: f64) -> Result<Spectrum> {
    let mut vals = Vec::new();
    for (f, m) in p.square_free() {
        let df = f.derivative();
        for mut z in aberth_roots(&f.to_f64_coeffs())? {
            if z.im == 0.0 {
                z.re = polish_real(&f, &df, z.re);
            }
            vals.push((z, m));
        }
    }
    Ok(Spectrum::from_weighted(vals, radius, false))
}

/// Newton steps on a simple real root with exact evaluation, so that rounding
/// of the coefficients to f64 does not limit accuracy.
fn polish_real(f: &ExactPolynomial, df: &ExactPolynomial, mut x: f64) -> f64 {
    for _ in 0..4 {
        let Some(xr) = BigRational::from_float(x) else { return x };
        let d = df.eval(&xr);
        if d.is_zero() {
            break;
        }
        let step = (f.eval(&xr) / d).to_f64().unwrap_or(0.0);
        if !step.is_finite() || step.abs() > 1e-6 * x.abs().max(1.0) {
            break;
        }
        x -= step;
        if step.abs() <= f64::EPSILON * x.abs() {
            break;
        }
    }
    x
}

pub fn eigenvalues(m: &RationalMatrix, symmetric: bool) -> Result<Spectrum> {
    if !m.is_square() {
        return Err(Error::InvalidInput("matrix is not square".into()));
    }
    let norm = inf_norm(m);
    if symmetric {
        if !m.is_symmetric() {
            return Err(Error::InvalidInput("matrix is not symmetric".into()));
        }
        return symmetric_spectrum_f64(&m.to_f64());
    }
    polynomial_spectrum(&char_poly_exact(m), cluster_radius(norm))
}

/// Spectrum of one matrix variant: Jacobi on the symmetric form for graphs,
/// exact characteristic polynomial roots for digraphs.
pub fn variant_spectrum(info: &DistanceInfo, v: MatrixVariant) -> Result<Spectrum> {
    if info.directed {
        eigenvalues(&variant_matrix(info, v)?, false)
    } else {
        symmetric_spectrum_f64(&symmetric_form_f64(info, v)?)
    }
}
