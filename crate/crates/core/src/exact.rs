//! Closed-form eigenvalues: rationals, quadratic surds `a + b*sqrt(s)`, or
//! plain floats for trigonometric forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::poly::ExactPolynomial;

#[derive(Clone, Debug, PartialEq)]
pub enum ExactValue {
    Rational(BigRational),
    /// `a + b*sqrt(s)` with `s > 1` square-free and `b != 0`.
    Surd { a: BigRational, b: BigRational, s: BigInt },
    Float(f64),
}

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

pub fn int(p: i64) -> BigRational {
    BigRational::from_integer(p.into())
}

impl ExactValue {
    pub fn int(n: i64) -> Self {
        ExactValue::Rational(int(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        ExactValue::Rational(rat(p, q))
    }

    /// `a + b*sqrt(s)`, simplified: square factors of `s` move into `b`.
    pub fn surd(a: BigRational, b: BigRational, s: BigInt) -> Self {
        assert!(!s.is_negative(), "negative radicand");
        if b.is_zero() || s.is_zero() {
            return ExactValue::Rational(a);
        }
        let mut s = s;
        let mut b = b;
        let mut f = BigInt::from(2);
        while &f * &f <= s {
            let sq = &f * &f;
            while (&s % &sq).is_zero() {
                s /= &sq;
                b *= BigRational::from_integer(f.clone());
            }
            f += 1;
        }
        if s.is_one() {
            ExactValue::Rational(a + b)
        } else {
            ExactValue::Surd { a, b, s }
        }
    }

    /// `(p + q*sqrt(s)) / r` from integers.
    pub fn surd_i64(p: i64, q: i64, s: i64, r: i64) -> Self {
        Self::surd(rat(p, r), rat(q, r), BigInt::from(s))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Rational(r) => r.to_f64().unwrap(),
            ExactValue::Surd { a, b, s } => {
                a.to_f64().unwrap() + b.to_f64().unwrap() * s.to_f64().unwrap().sqrt()
            }
            ExactValue::Float(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ExactValue::Float(_))
    }

    /// `alpha + beta * self`.
    pub fn affine(&self, alpha: &BigRational, beta: &BigRational) -> Self {
        match self {
            ExactValue::Rational(r) => ExactValue::Rational(alpha + beta * r),
            ExactValue::Surd { a, b, s } => {
                Self::surd(alpha + beta * a, beta * b, s.clone())
            }
            ExactValue::Float(x) => {
                ExactValue::Float(alpha.to_f64().unwrap() + beta.to_f64().unwrap() * x)
            }
        }
    }

    pub fn conjugate(&self) -> Self {
        match self {
            ExactValue::Surd { a, b, s } => ExactValue::Surd { a: a.clone(), b: -b, s: s.clone() },
            other => other.clone(),
        }
    }

    /// Total order by numeric value; exact ties compare equal.
    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        if self == other {
            return std::cmp::Ordering::Equal;
        }
        if let (Some(x), Some(y)) = (self.as_rational(), other.as_rational()) {
            return x.cmp(y);
        }
        self.to_f64().total_cmp(&other.to_f64())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactValue::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(r) => write!(f, "{r}"),
            ExactValue::Surd { a, b, s } => {
                let r = a.denom().lcm(b.denom());
                let rr = BigRational::from_integer(r.clone());
                let p = (a * &rr).to_integer();
                let qn = (b * &rr).to_integer();
                let sign = if qn.is_negative() { '-' } else { '+' };
                let qa = qn.abs();
                let qs = if qa.is_one() { String::new() } else { qa.to_string() };
                let body = if p.is_zero() {
                    let lead = if qn.is_negative() { "-" } else { "" };
                    format!("{lead}{qs}√{s}")
                } else {
                    format!("{p}{sign}{qs}√{s}")
                };
                if r.is_one() {
                    write!(f, "{body}")
                } else {
                    write!(f, "({body})/{r}")
                }
            }
            ExactValue::Float(x) => write!(f, "{}", crate::numeric::fmt_f64(*x)),
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Eigenvalue multiset given as `(value, multiplicity)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct OracleSpectrum(pub Vec<(ExactValue, usize)>);

impl OracleSpectrum {
    pub fn new(entries: Vec<(ExactValue, usize)>) -> Self {
        let mut s = OracleSpectrum(entries.into_iter().filter(|(_, m)| *m > 0).collect());
        s.normalize();
        s
    }

    /// Merge equal values (floats within 1e-9 relative) and sort ascending.
    pub fn normalize(&mut self) {
        let mut out: Vec<(ExactValue, usize)> = Vec::new();
        for (v, m) in self.0.drain(..) {
            let same = |w: &ExactValue| match (w, &v) {
                (ExactValue::Float(x), ExactValue::Float(y)) => (x - y).abs() <= 1e-9 * x.abs().max(1.0),
                _ => *w == v,
            };
            match out.iter_mut().find(|(w, _)| same(w)) {
                Some((_, k)) => *k += m,
                None => out.push((v, m)),
            }
        }
        out.sort_by(|a, b| a.0.cmp_value(&b.0));
        self.0 = out;
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        self.0.iter().all(|(v, _)| v.is_exact())
    }

    /// Every eigenvalue repeated by multiplicity, ascending.
    pub fn values_f64(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .0
            .iter()
            .flat_map(|(x, m)| std::iter::repeat(x.to_f64()).take(*m))
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn map_affine(&self, alpha: &BigRational, beta: &BigRational) -> Self {
        Self::new(self.0.iter().map(|(v, m)| (v.affine(alpha, beta), *m)).collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    pub fn max_value(&self) -> f64 {
        self.values_f64().last().copied().unwrap_or(f64::NAN)
    }

    /// The monic polynomial with these roots, when it has rational
    /// coefficients (every surd paired with its conjugate, no floats).
    pub fn to_polynomial(&self) -> Option<ExactPolynomial> {
        let mut p = ExactPolynomial::one();
        for (v, m) in &self.0 {
            match v {
                ExactValue::Rational(r) => p = p.mul(&ExactPolynomial::linear(r).pow(*m)),
                ExactValue::Surd { a, b, s } => {
                    let conj = v.conjugate();
                    let cm = self.0.iter().find(|(w, _)| *w == conj).map(|(_, k)| *k)?;
                    if cm != *m {
                        return None;
                    }
                    if b.is_positive() {
                        let two = int(2);
                        let sq = ExactPolynomial::new(vec![
                            a * a - b * b * BigRational::from_integer(s.clone()),
                            -(two * a),
                            BigRational::one(),
                        ]);
                        p = p.mul(&sq.pow(*m));
                    }
                }
                ExactValue::Float(_) => return None,
            }
        }
        Some(p)
    }
}

/// `isqrt` exposed for families that need perfect-square tests.
pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Roots of `x^2 - s x + p` over the rationals, smaller first.
pub fn quadratic_roots(s: &BigRational, p: &BigRational) -> Option<[ExactValue; 2]> {
    let disc = s * s - int(4) * p;
    if disc.is_negative() {
        return None;
    }
    let (num, den) = (disc.numer().clone(), disc.denom().clone());
    let half = s / int(2);
    let b = BigRational::new(BigInt::one(), BigInt::from(2) * &den);
    let rad = num * &den;
    Some([ExactValue::surd(half.clone(), -b.clone(), rad.clone()), ExactValue::surd(half, b, rad)])
}

fn convergents(x: f64, max_den: i64) -> Vec<BigRational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        if !a.is_finite() || a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        if k2 > max_den as i128 {
            break;
        }
        out.push(BigRational::new(BigInt::from(h2), BigInt::from(k2)));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Divides out quadratic factors with rational coefficients and two real
/// roots, found by pairing approximate roots.
fn split_quadratics(mut f: ExactPolynomial, m: usize, found: &mut Vec<(ExactValue, usize)>) -> ExactPolynomial {
    let Ok(approx) = crate::numeric::aberth_roots(&f.to_f64_coeffs()) else {
        return f;
    };
    let real: Vec<f64> = approx.iter().filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs())).map(|z| z.re).collect();
    let mut used = vec![false; real.len()];
    for i in 0..real.len() {
        for j in i + 1..real.len() {
            if used[i] || used[j] || f.degree() <= 2 {
                continue;
            }
            let (sum, prod) = (real[i] + real[j], real[i] * real[j]);
            let hit = convergents(sum, 1_000_000).into_iter().rev().find_map(|sr| {
                convergents(prod, 1_000_000_000).into_iter().rev().find_map(|pr| {
                    let q = ExactPolynomial::new(vec![pr.clone(), -sr.clone(), BigRational::one()]);
                    f.div_exact(&q).map(|rest| (sr.clone(), pr, rest))
                })
            });
            if let Some((sr, pr, rest)) = hit {
                if let Some([a, b]) = quadratic_roots(&sr, &pr) {
                    found.push((a, m));
                    found.push((b, m));
                    f = rest;
                    used[i] = true;
                    used[j] = true;
                }
            }
        }
    }
    f
}

/// Exact eigenvalues recoverable from `p`: rational roots and real roots of
/// quadratic factors, with multiplicities. Returns them together with the
/// remaining factor, whose roots have no such form.
pub fn exact_roots(p: &ExactPolynomial) -> (OracleSpectrum, ExactPolynomial) {
    let mut found = Vec::new();
    let mut rest = ExactPolynomial::one();
    for (f, m) in p.square_free() {
        let mut f = f.monic();
        if f.degree() > 2 {
            if let Ok(approx) = crate::numeric::aberth_roots(&f.to_f64_coeffs()) {
                for z in approx.iter().filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs())) {
                    let hit = convergents(z.re, 1_000_000_000)
                        .into_iter()
                        .rev()
                        .find(|r| f.eval(r).is_zero());
                    if let Some(r) = hit {
                        if let Some(q) = f.div_exact(&ExactPolynomial::linear(&r)) {
                            found.push((ExactValue::Rational(r), m));
                            f = q;
                        }
                    }
                }
            }
        }
        if f.degree() > 2 && f.degree() <= 40 {
            f = split_quadratics(f, m, &mut found);
        }
        match f.degree() {
            0 => {}
            1 => found.push((ExactValue::Rational(-f.coeff(0)), m)),
            2 => match quadratic_roots(&-f.coeff(1), &f.coeff(0)) {
                Some([a, b]) => {
                    found.push((a, m));
                    found.push((b, m));
                }
                None => rest = rest.mul(&f.pow(m)),
            },
            _ => rest = rest.mul(&f.pow(m)),
        }
    }
    (OracleSpectrum::new(found), rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_products() {
        // (x - 6/5)^5 (x - 1)^4 x (x^2 - 11x + 29)(x^3 - 2)
        let mut p = ExactPolynomial::linear(&rat(6, 5)).pow(5);
        p = p.mul(&ExactPolynomial::linear(&int(1)).pow(4));
        p = p.mul(&ExactPolynomial::x());
        p = p.mul(&ExactPolynomial::from_i64(&[29, -11, 1]));
        p = p.mul(&ExactPolynomial::from_i64(&[-2, 0, 0, 1]));
        let (found, rest) = exact_roots(&p);
        assert_eq!(rest, ExactPolynomial::from_i64(&[-2, 0, 0, 1]));
        let shown: Vec<String> = found.0.iter().map(|(v, m)| format!("{v}^{m}")).collect();
        assert_eq!(shown, ["0^1", "1^4", "6/5^5", "(11-√5)/2^1", "(11+√5)/2^1"]);
    }

    #[test]
    fn surd_simplifies() {
        let v = ExactValue::surd(int(1), int(1), BigInt::from(8));
        assert_eq!(v, ExactValue::Surd { a: int(1), b: int(2), s: BigInt::from(2) });
        assert_eq!(ExactValue::surd(int(1), int(1), BigInt::from(9)), ExactValue::int(4));
    }

    #[test]
    fn display() {
        assert_eq!(ExactValue::surd_i64(11, -1, 29, 2).to_string(), "(11-√29)/2");
        assert_eq!(ExactValue::surd_i64(-3, 1, 13, 2).to_string(), "(-3+√13)/2");
        assert_eq!(ExactValue::surd_i64(0, 2, 3, 1).to_string(), "2√3");
        assert_eq!(ExactValue::ratio(6, 5).to_string(), "6/5");
    }

    #[test]
    fn conjugate_pairs_make_rational_polynomial() {
        let s = OracleSpectrum::new(vec![
            (ExactValue::surd_i64(11, -1, 5, 2), 1),
            (ExactValue::surd_i64(11, 1, 5, 2), 1),
            (ExactValue::int(0), 1),
            (ExactValue::int(5), 1),
        ]);
        // x (x - 5) (x^2 - 11x + 29)
        let p = s.to_polynomial().unwrap();
        assert_eq!(p, ExactPolynomial::from_i64(&[0, -145, 84, -16, 1]));
        let lonely = OracleSpectrum::new(vec![(ExactValue::surd_i64(1, 1, 2, 1), 1)]);
        assert!(lonely.to_polynomial().is_none());
    }
}
