//! Cyclic Jacobi eigenvalue iteration for real symmetric matrices.

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;

pub const DEFAULT_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &RealMatrix) -> f64 {
    let n = a.n();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j) * a.get(i, j);
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues in ascending order.
///
/// Rotations continue until the off-diagonal Frobenius norm drops below
/// `tol` times `max(1, ||M||_F)`.
pub fn jacobi_eigenvalues(m: &RealMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = m.n();
    let scale = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| m.get(i, j).abs())
        .fold(0.0, f64::max)
        .max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            if (m.get(i, j) - m.get(j, i)).abs() > 1e-12 * scale {
                return Err(Error::domain(format!(
                    "matrix is not symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let frob = m.rows().iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let threshold = tol * frob.max(1.0);

    let mut a = m.clone();
    let mut sweeps = 0;
    while off_diagonal_norm(&a) >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence {
                iterations: sweeps,
                residual: off_diagonal_norm(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let app = a.get(p, p) - t * apq;
                let aqq = a.get(q, q) + t * apq;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a.set(k, p, new_kp);
                    a.set(p, k, new_kp);
                    a.set(k, q, new_kq);
                    a.set(q, k, new_kq);
                }
                a.set(p, p, app);
                a.set(q, q, aqq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}
