use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 1000;

fn eval(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    // Horner for p and p'; constant term first.
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a real polynomial (constant term first) by the
/// Aberth-Ehrlich iteration, followed by Newton polishing.
pub fn aberth_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last() == Some(&0.0) {
        c.pop();
    }
    let deg = c.len().saturating_sub(1);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = c[deg];
    for x in c.iter_mut() {
        *x /= lead;
    }
    if deg == 1 {
        return Ok(vec![Complex64::new(-c[0], 0.0)]);
    }
    // Cauchy bound for the initial circle.
    let radius = 1.0 + c[..deg].iter().map(|x| x.abs()).fold(0.0, f64::max);
    let r0 = radius.min(
        c[..deg]
            .iter()
            .map(|x| x.abs())
            .enumerate()
            .map(|(k, a)| 2.0 * a.powf(1.0 / (deg - k) as f64))
            .fold(0.0, f64::max)
            .max(1e-3),
    );
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4))
        .collect();
    let mut frozen = vec![false; deg];
    for _ in 0..MAX_ITERATIONS {
        if frozen.iter().all(|&f| f) {
            break;
        }
        for k in 0..deg {
            if frozen[k] {
                continue;
            }
            let (p, dp) = eval(&c, z[k]);
            if p.norm() == 0.0 {
                frozen[k] = true;
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[k] -= w;
                if w.norm() <= 1e-14 * (1.0 + z[k].norm()) {
                    frozen[k] = true;
                }
            }
        }
    }
    let backward_ok = |zk: Complex64| {
        let (p, _) = eval(&c, zk);
        let scale: f64 = c.iter().rev().fold(0.0, |acc, a| acc * zk.norm() + a.abs());
        p.norm() <= 1e-9 * scale
    };
    if (0..deg).any(|k| !frozen[k] && !backward_ok(z[k])) {
        return Err(Error::NoConvergence(MAX_ITERATIONS));
    }
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(&c, *zk);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.is_finite() {
                break;
            }
            *zk -= step;
        }
        // Snap numerically real roots of a real polynomial onto the axis.
        if zk.im.abs() <= 1e-12 * (1.0 + zk.re.abs()) {
            zk.im = 0.0;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(z)
}
