//! Exact rational polynomials, characteristic polynomials and coefficient
//! analytics.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::DistanceInfo;
use crate::matrix::RationalMatrix;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Polynomial with rational coefficients, constant term first. The
/// coefficient vector never has a trailing zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    /// From integer coefficients, constant term first.
    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - r`.
    pub fn linear(r: &BigRational) -> Self {
        Self::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a BigRational>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| acc.mul(&Self::linear(r)))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading();
        if rem.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (qt, r) = self.div_rem(d);
        r.is_zero().then_some(qt)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64_coeffs().iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// `p(a + b x)`.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let inner = Self::new(vec![a.clone(), b.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(&inner).add(&Self::new(vec![c.clone()])))
    }

    /// Monic polynomial whose roots are `c` times the roots of `self`.
    pub fn scale_roots(&self, c: &BigRational) -> Self {
        assert!(!c.is_zero());
        let d = self.degree();
        let mut p = BigRational::one();
        let mut out = vec![BigRational::zero(); d + 1];
        for k in (0..=d).rev() {
            out[k] = self.coeff(k) * &p;
            p *= c;
        }
        Self::new(out).monic()
    }

    /// Monic polynomial whose roots are `a + b r` for the roots `r` of
    /// `self`.
    pub fn map_roots_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        // r = (x - a) / b
        let inv = BigRational::one() / b;
        self.compose_affine(&(-a * &inv), &inv).monic()
    }

    /// Number of leading (lowest-degree) zero coefficients, i.e. the
    /// multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Sign changes in the nonzero coefficient sequence.
    pub fn sign_changes(&self) -> usize {
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Square-free decomposition: pairs `(f_i, i)` with `self = c * prod f_i^i`
    /// and each `f_i` monic, square-free and pairwise coprime.
    pub fn square_free(&self) -> Vec<(ExactPolynomial, usize)> {
        let f = self.monic();
        if f.degree() == 0 {
            return Vec::new();
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let c = fp.div_exact(&a0).expect("gcd divides");
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            let nb = b.div_exact(&a).expect("gcd divides");
            let nc = d.div_exact(&a).expect("gcd divides");
            if a.degree() > 0 {
                out.push((a, i));
            }
            d = nc.sub(&nb.derivative());
            b = nb;
            i += 1;
        }
        out
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.square_free().iter().map(|(f, _)| f.degree()).sum()
    }

    /// Coefficients as "p/q" strings, constant term first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let body = if !a.is_integer() {
                format!("({a})")
            } else {
                a.to_string()
            };
            match k {
                0 => f.write_str(&a.to_string())?,
                _ => {
                    if !a.is_one() {
                        f.write_str(&body)?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPolynomial({self})")
    }
}

impl Serialize for ExactPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

// Berkowitz: coefficients of det(xI - A), highest degree first.
fn berkowitz_i128(a: &[Vec<i128>]) -> Option<Vec<i128>> {
    let n = a.len();
    let mut poly: Vec<i128> = vec![1];
    for k in 0..n {
        let mut t = vec![0i128; k + 2];
        t[0] = 1;
        t[1] = a[k][k].checked_neg()?;
        let mut v: Vec<i128> = (0..k).map(|i| a[i][k]).collect();
        for i in 0..k {
            let mut s: i128 = 0;
            for j in 0..k {
                s = s.checked_add(a[k][j].checked_mul(v[j])?)?;
            }
            t[i + 2] = s.checked_neg()?;
            if i + 1 < k {
                let mut nv = vec![0i128; k];
                for (r, slot) in nv.iter_mut().enumerate() {
                    let mut s: i128 = 0;
                    for j in 0..k {
                        s = s.checked_add(a[r][j].checked_mul(v[j])?)?;
                    }
                    *slot = s;
                }
                v = nv;
            }
        }
        let mut next = vec![0i128; k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut s: i128 = 0;
            for j in 0..=i.min(poly.len() - 1) {
                s = s.checked_add(t[i - j].checked_mul(poly[j])?)?;
            }
            *slot = s;
        }
        poly = next;
    }
    Some(poly)
}

fn berkowitz_big(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        let mut t = vec![BigInt::zero(); k + 2];
        t[0] = BigInt::one();
        t[1] = -&a[k][k];
        let mut v: Vec<BigInt> = (0..k).map(|i| a[i][k].clone()).collect();
        for i in 0..k {
            let s: BigInt = (0..k).map(|j| &a[k][j] * &v[j]).sum();
            t[i + 2] = -s;
            if i + 1 < k {
                v = (0..k)
                    .map(|r| (0..k).map(|j| &a[r][j] * &v[j]).sum())
                    .collect();
            }
        }
        let next = (0..k + 2)
            .map(|i| {
                (0..=i.min(poly.len() - 1))
                    .map(|j| &t[i - j] * &poly[j])
                    .sum()
            })
            .collect();
        poly = next;
    }
    poly
}

/// Characteristic polynomial of an integer matrix, constant term first.
pub fn char_poly_integer(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let small: Option<Vec<Vec<i128>>> = a
        .iter()
        .map(|r| r.iter().map(|x| x.to_i128()).collect())
        .collect();
    let mut hi = small
        .and_then(|s| berkowitz_i128(&s))
        .map(|p| p.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| berkowitz_big(a));
    hi.reverse();
    hi
}

/// `det(xI - M)`, computed division-free on the integer matrix `L*M` where
/// `L` is the lcm of the entry denominators.
pub fn char_poly_exact(m: &RationalMatrix) -> ExactPolynomial {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let (a, l) = m.integer_scaling();
    let c = char_poly_integer(&a);
    let n = m.rows();
    let lr = BigRational::from_integer(l);
    let mut scale = BigRational::one();
    let mut out = vec![BigRational::zero(); n + 1];
    for k in (0..=n).rev() {
        out[k] = BigRational::new(c[k].clone(), BigInt::one()) / &scale;
        scale *= &lr;
    }
    ExactPolynomial::new(out)
}

/// `det(xI - D + rT)`.
pub fn generalized_char_poly(info: &DistanceInfo, r: &BigRational) -> ExactPolynomial {
    let n = info.order();
    let m = RationalMatrix::from_fn(n, n, |i, j| {
        let d = q(info.dist[i][j] as i64);
        if i == j {
            d - r * q(info.transmissions[i] as i64)
        } else {
            d
        }
    });
    char_poly_exact(&m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

/// Inertia from Descartes' rule, exact for real-rooted polynomials.
pub fn inertia_exact(p: &ExactPolynomial, real_rooted: bool) -> Result<Inertia> {
    if !real_rooted {
        return Err(Error::NotSupported(
            "inertia of a polynomial that may have non-real roots".into(),
        ));
    }
    let n = p.degree();
    let n_zero = p.zero_root_multiplicity();
    let n_plus = p.sign_changes();
    Ok(Inertia { n_plus, n_minus: n - n_zero - n_plus, n_zero })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientMode {
    /// Coefficients of `p` as they are.
    Raw,
    /// Absolute values.
    Absolute,
    /// `d_k = |delta_k| / 2^(n-k-2)` for `k = 0..=n-2`.
    TreeNormalized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    pub mode: CoefficientMode,
    /// Entry `k` belongs to `x^k`.
    #[serde(serialize_with = "ser_rationals")]
    pub sequence: Vec<BigRational>,
    pub is_log_concave: bool,
    pub is_unimodal: bool,
    /// Power of `x` at the first maximum of the sequence.
    pub peak_index: usize,
    /// One of '+', '-', '0' per entry.
    pub sign_pattern: String,
}

fn ser_rationals<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
}

pub fn is_log_concave(a: &[BigRational]) -> bool {
    a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

pub fn is_unimodal(a: &[BigRational]) -> bool {
    let mut i = 0;
    while i + 1 < a.len() && a[i] <= a[i + 1] {
        i += 1;
    }
    while i + 1 < a.len() && a[i] >= a[i + 1] {
        i += 1;
    }
    i + 1 >= a.len()
}

fn first_peak(a: &[BigRational]) -> usize {
    let mut best = 0;
    for (i, x) in a.iter().enumerate() {
        if *x > a[best] {
            best = i;
        }
    }
    best
}

/// Coefficient-sequence analysis. In raw and absolute modes the sequence is
/// `c_0, c_1, ...`; leading zeros are kept and the sequence stops at the first
/// zero that follows a nonzero entry.
pub fn coefficient_analytics(p: &ExactPolynomial, mode: CoefficientMode) -> Result<CoefficientReport> {
    let n = p.degree();
    let seq: Vec<BigRational> = match mode {
        CoefficientMode::Raw | CoefficientMode::Absolute => {
            let mut out = Vec::new();
            let mut seen_nonzero = false;
            for c in p.coeffs() {
                if c.is_zero() && seen_nonzero {
                    break;
                }
                seen_nonzero |= !c.is_zero();
                out.push(if mode == CoefficientMode::Absolute { c.abs() } else { c.clone() });
            }
            out
        }
        CoefficientMode::TreeNormalized => {
            if n < 3 {
                return Err(Error::InvalidInput(
                    "normalized coefficients need order at least 3".into(),
                ));
            }
            (0..=n - 2)
                .map(|k| {
                    let two = BigInt::from(2).pow((n - k - 2) as u32);
                    p.coeff(k).abs() / BigRational::from_integer(two)
                })
                .collect()
        }
    };
    let sign_pattern = seq
        .iter()
        .map(|c| {
            if c.is_zero() {
                '0'
            } else if c.is_positive() {
                '+'
            } else {
                '-'
            }
        })
        .collect();
    Ok(CoefficientReport {
        mode,
        is_log_concave: is_log_concave(&seq),
        is_unimodal: is_unimodal(&seq),
        peak_index: first_peak(&seq),
        sign_pattern,
        sequence: seq,
    })
}

/// Peak-location window for normalized tree coefficients:
/// `floor((n-2)/(1+d)) <= peak <= ceil(2n/3)`.
pub fn tree_peak_window(n: usize, diameter: usize) -> (usize, usize) {
    ((n - 2) / (1 + diameter), (2 * n).div_ceil(3))
}

/// Conjectured window `[floor(n/2), ceil((1 - 1/sqrt 5) n)]`.
pub fn conjectured_peak_window(n: usize) -> (usize, usize) {
    // ceil((1 - 1/sqrt5) n) via exact comparison: smallest m with
    // 5 (n - m)^2 <= n^2, m <= n.
    let hi = (0..=n)
        .find(|&m| 5 * (n - m) * (n - m) <= n * n)
        .unwrap_or(n);
    (n / 2, hi)
}

/// `lcm` helper shared with the matrix module.
pub(crate) fn lcm_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, d| acc.lcm(d))
}
