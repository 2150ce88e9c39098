use super::{LinalgError, Result};
use crate::graph::IntMatrix;

/// Default off-diagonal convergence threshold.
pub const DEFAULT_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations,
/// sorted descending.
pub fn symmetric_eigenvalues(m: &IntMatrix, tol: f64) -> Result<Vec<f64>> {
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.order();
    let mut a: Vec<f64> = m.rows().flatten().map(|&v| v as f64).collect();
    jacobi_in_place(&mut a, n, tol)?;
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

fn max_off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut worst = 0.0f64;
    for p in 0..n {
        for q in p + 1..n {
            worst = worst.max(a[p * n + q].abs());
        }
    }
    worst
}

fn jacobi_in_place(a: &mut [f64], n: usize, tol: f64) -> Result<()> {
    for _ in 0..MAX_SWEEPS {
        let off = max_off_diagonal(a, n);
        if off < tol {
            return Ok(());
        }
        let skip = tol * 1e-3;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= skip {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    a[p * n + k] = a[k * n + p];
                    a[q * n + k] = a[k * n + q];
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    Err(LinalgError::NoConvergence { sweeps: MAX_SWEEPS })
}
