use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues ascending; `vectors[k]` belongs to `values[k]`.
pub fn jacobi_eigen(a: &[Vec<f64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let scale = m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in m.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (m[p][k], m[q][k]);
                    m[p][k] = c * pk - s * qk;
                    m[q][k] = s * pk + c * qk;
                }
                for row in v.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].total_cmp(&m[j][j]));
    let values = order.iter().map(|&i| m[i][i]).collect();
    let vectors = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i][k]).collect())
        .collect();
    Ok((values, vectors))
}

/// Largest `|Mv - lambda v|` over the returned pairs.
pub fn max_residual(a: &[Vec<f64>], values: &[f64], vectors: &[Vec<f64>]) -> f64 {
    let n = a.len();
    values
        .iter()
        .zip(vectors)
        .map(|(&l, x)| {
            (0..n)
                .map(|i| {
                    let mx: f64 = (0..n).map(|j| a[i][j] * x[j]).sum();
                    (mx - l * x[i]).powi(2)
                })
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_distance() {
        let k5: Vec<Vec<f64>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { 0.0 } else { 1.0 }).collect())
            .collect();
        let (vals, vecs) = jacobi_eigen(&k5).unwrap();
        for v in &vals[..4] {
            assert!((v + 1.0).abs() < 1e-12);
        }
        assert!((vals[4] - 4.0).abs() < 1e-12);
        assert!(max_residual(&k5, &vals, &vecs) < 1e-12);
    }

    #[test]
    fn diagonal_and_empty() {
        let (vals, _) = jacobi_eigen(&[vec![3.0, 0.0], vec![0.0, -1.0]]).unwrap();
        assert_eq!(vals, vec![-1.0, 3.0]);
        assert!(jacobi_eigen(&[]).unwrap().0.is_empty());
    }
}
