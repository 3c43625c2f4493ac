//! Exact rational matrices and the four distance-matrix variants.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::OracleSpectrum;
use crate::graph::{biconnected_blocks, AnyGraph, DistanceInfo, Graph};
use crate::poly::{char_poly_exact, lcm_all, ExactPolynomial};

/// Dense matrix over arbitrary-precision rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RationalMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_fn(r, c, |i, j| q(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Entries as `f64`, row by row.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_f64().unwrap()).collect())
            .collect()
    }

    /// Matrix with `rows`/`cols` kept in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Delete row and column `k`.
    pub fn principal_minor(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != k).collect();
        self.submatrix(&keep, &keep)
    }

    /// `(A, L)` with `A = L * self` integral and `L` the lcm of denominators.
    pub fn integer_scaling(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let l = lcm_all(self.data.iter().map(|x| x.denom()));
        let lr = BigRational::from_integer(l.clone());
        let a = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| (x * &lr).to_integer()).collect())
            .collect();
        (a, l)
    }

    pub fn det(&self) -> BigRational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return BigRational::one();
        }
        let (a, l) = self.integer_scaling();
        let d = bareiss_det(a);
        BigRational::new(d, l.pow(self.rows as u32))
    }

    /// Sum of all cofactors, i.e. `1^T adj(M) 1`.
    pub fn cofactor_sum(&self) -> BigRational {
        assert!(self.is_square());
        let n = self.rows;
        if n == 1 {
            return BigRational::one();
        }
        let mut total = BigRational::zero();
        for i in 0..n {
            for j in 0..n {
                let r: Vec<usize> = (0..n).filter(|&x| x != i).collect();
                let c: Vec<usize> = (0..n).filter(|&x| x != j).collect();
                let m = self.submatrix(&r, &c).det();
                if (i + j) % 2 == 0 {
                    total += m;
                } else {
                    total -= m;
                }
            }
        }
        total
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(BigRational::is_integer)
    }
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixVariant {
    D,
    DQ,
    DL,
    DNL,
}

impl MatrixVariant {
    pub const ALL: [MatrixVariant; 4] =
        [MatrixVariant::D, MatrixVariant::DQ, MatrixVariant::DL, MatrixVariant::DNL];

    pub fn name(self) -> &'static str {
        match self {
            MatrixVariant::D => "D",
            MatrixVariant::DQ => "DQ",
            MatrixVariant::DL => "DL",
            MatrixVariant::DNL => "DNL",
        }
    }
}

impl fmt::Display for MatrixVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "D" => Ok(MatrixVariant::D),
            "DQ" => Ok(MatrixVariant::DQ),
            "DL" => Ok(MatrixVariant::DL),
            "DNL" => Ok(MatrixVariant::DNL),
            _ => Err(Error::InvalidInput(format!("unknown matrix variant {s:?}"))),
        }
    }
}

pub fn distance_matrix(info: &DistanceInfo) -> RationalMatrix {
    let n = info.order();
    RationalMatrix::from_fn(n, n, |i, j| q(info.dist[i][j] as i64))
}

/// The exact matrix for a variant; `DNL` is represented by the similar
/// matrix `T^-1 (T - D)`.
pub fn variant_matrix(info: &DistanceInfo, v: MatrixVariant) -> Result<RationalMatrix> {
    let n = info.order();
    let t = |i: usize| q(info.transmissions[i] as i64);
    let d = |i: usize, j: usize| q(info.dist[i][j] as i64);
    Ok(match v {
        MatrixVariant::D => distance_matrix(info),
        MatrixVariant::DQ => {
            RationalMatrix::from_fn(n, n, |i, j| if i == j { t(i) } else { d(i, j) })
        }
        MatrixVariant::DL => {
            RationalMatrix::from_fn(n, n, |i, j| if i == j { t(i) } else { -d(i, j) })
        }
        MatrixVariant::DNL => {
            if info.transmissions.iter().any(|&x| x == 0) {
                return Err(Error::ZeroTransmission);
            }
            RationalMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    BigRational::one()
                } else {
                    -d(i, j) / t(i)
                }
            })
        }
    })
}

/// Floating-point symmetric form of a variant for an undirected graph;
/// `DNL` is `T^-1/2 (T - D) T^-1/2`.
pub fn symmetric_form_f64(info: &DistanceInfo, v: MatrixVariant) -> Result<Vec<Vec<f64>>> {
    if info.directed {
        return Err(Error::NotSupported("symmetric form of a digraph matrix".into()));
    }
    let n = info.order();
    let t: Vec<f64> = info.transmissions.iter().map(|&x| x as f64).collect();
    if v == MatrixVariant::DNL && t.iter().any(|&x| x == 0.0) {
        return Err(Error::ZeroTransmission);
    }
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = info.dist[i][j] as f64;
                    match (v, i == j) {
                        (MatrixVariant::D, _) => d,
                        (MatrixVariant::DQ, true) | (MatrixVariant::DL, true) => t[i],
                        (MatrixVariant::DQ, false) => d,
                        (MatrixVariant::DL, false) => -d,
                        (MatrixVariant::DNL, true) => 1.0,
                        (MatrixVariant::DNL, false) => -d / (t[i] * t[j]).sqrt(),
                    }
                })
                .collect()
        })
        .collect())
}

/// `2(J - I) - A` for inputs of diameter at most two.
pub fn diam2_distance_from_adjacency(g: &AnyGraph) -> Result<RationalMatrix> {
    let info = g.distances()?;
    if info.diameter > 2 {
        return Err(Error::DiameterTooLarge);
    }
    let a = g.adjacency_matrix();
    let n = g.order();
    Ok(RationalMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigRational::zero()
        } else {
            q(2 - a[i][j])
        }
    }))
}

/// Affine map `(alpha, beta)` with `variant eigenvalue = alpha + beta * D
/// eigenvalue` for a `t`-transmission-regular input.
pub fn tr_affine(t: i64, target: MatrixVariant) -> Result<(BigRational, BigRational)> {
    if t <= 0 {
        return Err(Error::InvalidInput(format!("transmission must be positive, got {t}")));
    }
    Ok(match target {
        MatrixVariant::D => (q(0), q(1)),
        MatrixVariant::DQ => (q(t), q(1)),
        MatrixVariant::DL => (q(t), q(-1)),
        MatrixVariant::DNL => (q(1), BigRational::new((-1).into(), t.into())),
    })
}

/// Spectrum of a variant from the `D` spectrum of a `t`-transmission-regular
/// graph or digraph.
pub fn transform_tr_spectrum(
    dist_spec: &OracleSpectrum,
    t: i64,
    target: MatrixVariant,
) -> Result<OracleSpectrum> {
    let (a, b) = tr_affine(t, target)?;
    Ok(dist_spec.map_affine(&a, &b))
}

/// Same transform at the characteristic-polynomial level.
pub fn transform_tr_poly(p_d: &ExactPolynomial, t: i64, target: MatrixVariant) -> Result<ExactPolynomial> {
    let (a, b) = tr_affine(t, target)?;
    Ok(p_d.map_roots_affine(&a, &b))
}

/// `(-1)^(n-1) (n-1) 2^(n-2)` for a tree of order `n >= 2`.
pub fn det_distance_tree(t: &Graph) -> Result<BigInt> {
    let n = t.order();
    if !t.is_tree() || n < 2 {
        return Err(Error::NotATree);
    }
    let v = BigInt::from(n - 1) * BigInt::from(2).pow((n - 2) as u32);
    Ok(if n % 2 == 0 { -v } else { v })
}

/// `sum_i det D(G_i) prod_{j != i} cof D(G_j)` over the blocks of `g`.
pub fn det_via_blocks(g: &Graph) -> Result<BigRational> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let blocks = biconnected_blocks(g);
    if blocks.is_empty() {
        return Ok(BigRational::zero());
    }
    let mats: Vec<RationalMatrix> = blocks
        .iter()
        .map(|b| DistanceInfo::of_graph(&b.graph).map(|i| distance_matrix(&i)))
        .collect::<Result<_>>()?;
    let dets: Vec<BigRational> = mats.iter().map(RationalMatrix::det).collect();
    let cofs: Vec<BigRational> = mats.iter().map(RationalMatrix::cofactor_sum).collect();
    let mut total = BigRational::zero();
    for i in 0..mats.len() {
        let mut term = dets[i].clone();
        for (j, c) in cofs.iter().enumerate() {
            if j != i {
                term *= c;
            }
        }
        total += term;
    }
    Ok(total)
}

/// True when every row sums to zero.
pub fn has_zero_row_sums(m: &RationalMatrix) -> bool {
    m.row_sums().iter().all(Zero::is_zero)
}

/// Largest absolute row sum.
pub fn inf_norm(m: &RationalMatrix) -> f64 {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.abs().to_f64().unwrap()).sum::<f64>())
        .fold(0.0, f64::max)
}

type IMat = Vec<Vec<i128>>;

fn imul(a: &IMat, b: &IMat) -> Option<IMat> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].checked_add(x.checked_mul(b[k][j])?)?;
            }
        }
    }
    Some(out)
}

fn shift(a: &IMat, nu: i128) -> Option<IMat> {
    let mut out = a.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = row[i].checked_sub(nu)?;
    }
    Some(out)
}

/// Annihilating product plus power traces for a rational multiset; `None`
/// on `i128` overflow.
fn rational_multiset_check(m: &RationalMatrix, oracle: &OracleSpectrum) -> Option<bool> {
    let vals: Vec<&BigRational> = oracle.0.iter().map(|(v, _)| v.as_rational()).collect::<Option<_>>()?;
    let s = lcm_all(m.data.iter().map(|x| x.denom()).chain(vals.iter().map(|v| v.denom())));
    let sr = BigRational::from_integer(s);
    let n = m.rows();
    let b: IMat = (0..n)
        .map(|i| m.row(i).iter().map(|x| (x * &sr).to_integer().to_i128()).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let nus: Vec<i128> = vals.iter().map(|v| (*v * &sr).to_integer().to_i128()).collect::<Option<_>>()?;
    let mut prod = shift(&b, nus[0])?;
    for &nu in &nus[1..] {
        prod = imul(&prod, &shift(&b, nu)?)?;
    }
    if prod.iter().flatten().any(|&x| x != 0) {
        return Some(false);
    }
    let mut power: IMat = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    for j in 0..nus.len() {
        if j > 0 {
            power = imul(&power, &b)?;
        }
        let trace = (0..n).try_fold(0i128, |acc, i| acc.checked_add(power[i][i]))?;
        let mut expected = 0i128;
        for ((_, mult), &nu) in oracle.0.iter().zip(&nus) {
            expected = expected.checked_add((*mult as i128).checked_mul(nu.checked_pow(j as u32)?)?)?;
        }
        if trace != expected {
            return Some(false);
        }
    }
    Some(true)
}

/// Exact comparison of the eigenvalue multiset of `m` with a closed form.
/// Rational multisets on large matrices avoid the characteristic polynomial.
pub fn matches_oracle_exact(m: &RationalMatrix, oracle: &OracleSpectrum) -> Result<bool> {
    if !oracle.is_exact() {
        return Err(Error::NotSupported("closed form contains a floating-point value".into()));
    }
    if oracle.len() != m.rows() {
        return Ok(false);
    }
    if m.rows() > 24 {
        if let Some(ok) = rational_multiset_check(m, oracle) {
            return Ok(ok);
        }
    }
    let p = oracle
        .to_polynomial()
        .ok_or_else(|| Error::NotSupported("closed form is not closed under conjugation".into()))?;
    Ok(char_poly_exact(m) == p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Digraph;
    use crate::poly::char_poly_exact;

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn star_polynomials() {
        let info = DistanceInfo::of_graph(&star(4)).unwrap();
        let pq = char_poly_exact(&variant_matrix(&info, MatrixVariant::DQ).unwrap());
        assert_eq!(pq, ExactPolynomial::from_i64(&[216, -252, 105, -18, 1]));
        let pl = char_poly_exact(&variant_matrix(&info, MatrixVariant::DL).unwrap());
        assert_eq!(pl, ExactPolynomial::from_i64(&[0, -196, 105, -18, 1]));
        let pn = char_poly_exact(&variant_matrix(&info, MatrixVariant::DNL).unwrap());
        assert_eq!(pn.to_string(), "x^4 - 4x^3 + (133/25)x^2 - (294/125)x");
    }

    #[test]
    fn k3_laplacian() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let info = DistanceInfo::of_graph(&k3).unwrap();
        let dl = variant_matrix(&info, MatrixVariant::DL).unwrap();
        assert_eq!(dl, RationalMatrix::from_i64(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]));
        assert!(has_zero_row_sums(&dl));
    }

    #[test]
    fn table_digraph_matrices() {
        let d = Digraph::from_arcs(
            4,
            &[(0, 1), (0, 3), (1, 0), (1, 2), (2, 0), (2, 1), (3, 0), (3, 2)],
        )
        .unwrap();
        let info = DistanceInfo::of_digraph(&d).unwrap();
        let p = char_poly_exact(&variant_matrix(&info, MatrixVariant::DNL).unwrap());
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(p, ExactPolynomial::from_roots(&[r(0, 1), r(5, 4), r(5, 4), r(3, 2)]));
        let pq = char_poly_exact(&variant_matrix(&info, MatrixVariant::DQ).unwrap());
        assert_eq!(pq, ExactPolynomial::from_roots(&[q(2), q(3), q(3), q(8)]));
    }

    #[test]
    fn determinants() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = distance_matrix(&DistanceInfo::of_graph(&p4).unwrap()).det();
        assert_eq!(d, q(-12));
        assert_eq!(det_distance_tree(&p4).unwrap(), BigInt::from(-12));
        assert_eq!(det_via_blocks(&p4).unwrap(), q(-12));
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let direct = distance_matrix(&DistanceInfo::of_graph(&bowtie).unwrap()).det();
        assert_eq!(det_via_blocks(&bowtie).unwrap(), direct);
        assert!(det_distance_tree(&bowtie).is_err());
    }

    #[test]
    fn cofactor_identity() {
        let m = RationalMatrix::from_i64(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        let j = RationalMatrix::from_fn(3, 3, |_, _| BigRational::one());
        assert_eq!(m.cofactor_sum(), m.add(&j).det() - m.det());
    }

    #[test]
    fn diameter_two_shortcut() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let g: AnyGraph = c5.clone().into();
        let info = DistanceInfo::of_graph(&c5).unwrap();
        assert_eq!(diam2_distance_from_adjacency(&g).unwrap(), distance_matrix(&info));
        let p4: AnyGraph = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap().into();
        assert!(matches!(diam2_distance_from_adjacency(&p4), Err(Error::DiameterTooLarge)));
    }

    #[test]
    fn transforms() {
        use crate::exact::ExactValue;
        let k4 = OracleSpectrum::new(vec![(ExactValue::int(-1), 3), (ExactValue::int(3), 1)]);
        let dl = transform_tr_spectrum(&k4, 3, MatrixVariant::DL).unwrap();
        assert_eq!(dl, OracleSpectrum::new(vec![(ExactValue::int(0), 1), (ExactValue::int(4), 3)]));
        let dnl = transform_tr_spectrum(&k4, 3, MatrixVariant::DNL).unwrap();
        assert_eq!(
            dnl,
            OracleSpectrum::new(vec![(ExactValue::int(0), 1), (ExactValue::ratio(4, 3), 3)])
        );
        let c4 = OracleSpectrum::new(vec![
            (ExactValue::int(4), 1),
            (ExactValue::int(0), 1),
            (ExactValue::int(-2), 2),
        ]);
        let dq = transform_tr_spectrum(&c4, 4, MatrixVariant::DQ).unwrap();
        assert_eq!(dq.values_f64(), vec![2.0, 2.0, 4.0, 8.0]);
        assert!(transform_tr_spectrum(&c4, 0, MatrixVariant::DQ).is_err());
    }
}
