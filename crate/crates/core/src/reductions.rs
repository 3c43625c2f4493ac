//! Twin classes, equitable partitions and quotient matrices.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, rat};
use crate::graph::{DistanceInfo, Graph};
use crate::matrix::{variant_matrix, MatrixVariant, RationalMatrix};
use crate::numeric::{polynomial_spectrum, cluster_radius, Spectrum};
use crate::poly::{char_poly_exact, ExactPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinType {
    Singleton,
    /// Equal closed neighbourhoods.
    AdjacentTwins,
    /// Equal open neighbourhoods.
    IndependentTwins,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub vertices: Vec<usize>,
    pub kind: TwinType,
    pub transmission: u64,
}

impl TwinClass {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Maximal twin classes, sorted by `(size, smallest vertex)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    pub fn has_twins(&self) -> bool {
        self.classes.iter().any(|c| c.len() > 1)
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.vertices.clone()).collect()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.len() > 1)
    }
}

pub fn find_twins(g: &Graph) -> Result<TwinPartition> {
    let info = DistanceInfo::of_graph(g)?;
    let n = g.order();
    let mut open: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let mut nb = g.neighbors(v).to_vec();
        nb.sort_unstable();
        open.entry(nb.clone()).or_default().push(v);
        nb.push(v);
        nb.sort_unstable();
        closed.entry(nb).or_default().push(v);
    }
    let mut placed = vec![false; n];
    let mut classes = Vec::new();
    let groups = open
        .into_values()
        .map(|c| (c, TwinType::IndependentTwins))
        .chain(closed.into_values().map(|c| (c, TwinType::AdjacentTwins)));
    for (cell, kind) in groups {
        if cell.len() > 1 {
            for &v in &cell {
                placed[v] = true;
            }
            let transmission = info.transmissions[cell[0]];
            classes.push(TwinClass { vertices: cell, kind, transmission });
        }
    }
    for v in (0..n).filter(|&v| !placed[v]) {
        classes.push(TwinClass {
            vertices: vec![v],
            kind: TwinType::Singleton,
            transmission: info.transmissions[v],
        });
    }
    classes.sort_by_key(|c| (c.len(), c.vertices[0]));
    Ok(TwinPartition { classes })
}

/// Eigenvalue carried by `e_u - e_v` for a twin pair with transmission `t`.
pub fn twin_eigenvalue(variant: MatrixVariant, kind: TwinType, t: u64) -> Result<BigRational> {
    if t == 0 {
        return Err(Error::ZeroTransmission);
    }
    // The twin distance: 1 for adjacent twins, 2 for independent ones.
    let d: i64 = match kind {
        TwinType::AdjacentTwins => 1,
        TwinType::IndependentTwins => 2,
        TwinType::Singleton => {
            return Err(Error::InvalidInput("a singleton class has no twin eigenvalue".into()))
        }
    };
    let t = t as i64;
    Ok(match variant {
        MatrixVariant::D => int(-d),
        MatrixVariant::DQ => int(t - d),
        MatrixVariant::DL => int(t + d),
        MatrixVariant::DNL => rat(t + d, t),
    })
}

/// `e_u - e_v`.
pub fn twin_eigenvector(n: usize, u: usize, v: usize) -> Vec<BigRational> {
    (0..n)
        .map(|i| {
            if i == u {
                BigRational::one()
            } else if i == v {
                -BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientMatrix {
    pub b: RationalMatrix,
    /// Characteristic matrix, `n x p`.
    pub s: RationalMatrix,
}

/// Quotient of `m` by `cells`; fails unless every block has constant row sums.
pub fn quotient(m: &RationalMatrix, cells: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = m.rows();
    let p = cells.len();
    let mut owner = vec![usize::MAX; n];
    for (k, c) in cells.iter().enumerate() {
        for &v in c {
            if v >= n || owner[v] != usize::MAX {
                return Err(Error::InvalidInput("cells do not partition the vertex set".into()));
            }
            owner[v] = k;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::InvalidInput("cells do not cover the vertex set".into()));
    }
    let mut b = RationalMatrix::zeros(p, p);
    for (i, ci) in cells.iter().enumerate() {
        for (j, cj) in cells.iter().enumerate() {
            let sum = |u: usize| cj.iter().fold(BigRational::zero(), |a, &w| a + m.get(u, w));
            let first = sum(ci[0]);
            if ci[1..].iter().any(|&u| sum(u) != first) {
                return Err(Error::NotEquitable);
            }
            b.set(i, j, first);
        }
    }
    let s = RationalMatrix::from_fn(n, p, |v, k| if owner[v] == k { BigRational::one() } else { BigRational::zero() });
    if m.mul(&s) != s.mul(&b) {
        return Err(Error::NotEquitable);
    }
    Ok(QuotientMatrix { b, s })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientAssembly {
    pub variant: MatrixVariant,
    pub quotient: QuotientMatrix,
    /// `(eigenvalue, class size - 1)` for each twin class.
    pub twin_eigenvalues: Vec<(String, usize)>,
    pub polynomial: ExactPolynomial,
    pub spectrum: Spectrum,
}

/// Spectrum of `m` assembled from the twin eigenvalues and the quotient:
/// `p_M = p_B * prod (x - lambda_j)^(n_j - 1)`.
pub fn quotient_spectrum(
    m: &RationalMatrix,
    part: &TwinPartition,
    variant: MatrixVariant,
) -> Result<QuotientAssembly> {
    let q = quotient(m, &part.cells())?;
    let mut poly = char_poly_exact(&q.b);
    let mut twins = Vec::new();
    for c in part.nontrivial() {
        let lambda = twin_eigenvalue(variant, c.kind, c.transmission)?;
        poly = poly.mul(&ExactPolynomial::linear(&lambda).pow(c.len() - 1));
        twins.push((lambda.to_string(), c.len() - 1));
    }
    let norm = crate::matrix::inf_norm(m);
    let spectrum = polynomial_spectrum(&poly, cluster_radius(norm))?;
    Ok(QuotientAssembly { variant, quotient: q, twin_eigenvalues: twins, polynomial: poly, spectrum })
}

/// Twin partition, quotient and assembled polynomial for one variant of `g`,
/// with the direct characteristic polynomial for comparison.
pub fn twin_reduction(g: &Graph, variant: MatrixVariant) -> Result<(QuotientAssembly, ExactPolynomial)> {
    let info = DistanceInfo::of_graph(g)?;
    let m = variant_matrix(&info, variant)?;
    let part = find_twins(g)?;
    let asm = quotient_spectrum(&m, &part, variant)?;
    Ok((asm, char_poly_exact(&m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_plus(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (0, i)).collect();
        e.push((1, 2));
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn star_plus_classes() {
        let p = find_twins(&star_plus(5)).unwrap();
        let nt: Vec<_> = p.nontrivial().collect();
        assert_eq!(nt.len(), 2);
        assert_eq!(nt[0].vertices, vec![1, 2]);
        assert_eq!(nt[0].kind, TwinType::AdjacentTwins);
        assert_eq!(nt[0].transmission, 6);
        assert_eq!(nt[1].vertices, vec![3, 4]);
        assert_eq!(nt[1].kind, TwinType::IndependentTwins);
        assert_eq!(nt[1].transmission, 7);
    }

    #[test]
    fn twin_values() {
        assert_eq!(twin_eigenvalue(MatrixVariant::DL, TwinType::IndependentTwins, 5).unwrap(), int(7));
        assert_eq!(twin_eigenvalue(MatrixVariant::D, TwinType::AdjacentTwins, 9).unwrap(), int(-1));
        assert_eq!(twin_eigenvalue(MatrixVariant::DNL, TwinType::IndependentTwins, 4).unwrap(), rat(3, 2));
        assert!(twin_eigenvalue(MatrixVariant::D, TwinType::Singleton, 4).is_err());
    }

    #[test]
    fn assembly_matches_direct() {
        for v in MatrixVariant::ALL {
            let (asm, direct) = twin_reduction(&star_plus(6), v).unwrap();
            assert_eq!(asm.polynomial, direct, "{v}");
        }
    }

    #[test]
    fn non_equitable_partition_rejected() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = variant_matrix(&DistanceInfo::of_graph(&p4).unwrap(), MatrixVariant::D).unwrap();
        assert!(matches!(quotient(&m, &[vec![0, 1], vec![2, 3]]), Err(Error::NotEquitable)));
        assert!(quotient(&m, &[vec![0, 3], vec![1, 2]]).is_ok());
    }
}
