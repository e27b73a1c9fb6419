//! Cyclic Jacobi eigendecomposition for small symmetric matrices.
//!
//! Jacobi is the right tool at this scale: unconditionally convergent on
//! symmetric input, orthonormal eigenvectors for free, and tiny
//! eigenvalues come out with high relative accuracy, which matters when a
//! verdict hinges on whether an eigenvalue of the restricted pairing is
//! zero. Matrices here are n <= a few dozen; nobody needs QR.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Eigenvalues in descending order; `vectors` holds the matching
/// orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl SymmetricEigen {
    /// The k-th eigenvector (column k), copied out.
    pub fn vector(&self, k: usize) -> Vec<f64> {
        (0..self.vectors.rows()).map(|i| self.vectors.get(i, k)).collect()
    }
}

const MAX_SWEEPS: usize = 60;

/// Decomposes a symmetric matrix. The input is symmetrized
/// (`(a + a^T) / 2`) before the sweeps, so callers that assemble their
/// matrix from products need not worry about last-bit asymmetry.
pub fn symmetric_eigen(m: &Matrix) -> Result<SymmetricEigen> {
    if !m.is_square() {
        return Err(m.shape_mismatch(&Matrix::zeros(m.cols(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Err(Error::InvalidArgument("cannot decompose an empty matrix".into()));
    }
    if m.data().iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }

    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, 0.5 * (m.get(i, j) + m.get(j, i)));
        }
    }

    let mut v = Matrix::identity(n);
    let mut d: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];
    let scale = a.frobenius().max(f64::MIN_POSITIVE);

    for sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off += a.get(p, q).abs();
            }
        }
        if off <= 1e-15 * scale {
            return Ok(sorted_descending(d, v));
        }

        // Early sweeps skip elements below a coarse threshold; later
        // sweeps rotate everything that still moves the diagonal.
        let tresh = if sweep < 3 { 0.2 * off / (n * n) as f64 } else { 0.0 };

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let g = 100.0 * apq.abs();
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a.set(p, q, 0.0);
                    continue;
                }
                if apq.abs() <= tresh {
                    continue;
                }

                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;

                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a.set(p, q, 0.0);

                for j in 0..p {
                    rotate(&mut a, j, p, j, q, s, tau);
                }
                for j in p + 1..q {
                    rotate(&mut a, p, j, j, q, s, tau);
                }
                for j in q + 1..n {
                    rotate(&mut a, p, j, q, j, s, tau);
                }
                for j in 0..n {
                    rotate(&mut v, j, p, j, q, s, tau);
                }
            }
        }

        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

#[inline]
fn rotate(m: &mut Matrix, i: usize, j: usize, k: usize, l: usize, s: f64, tau: f64) {
    let g = m.get(i, j);
    let h = m.get(k, l);
    m.set(i, j, g - s * (h + g * tau));
    m.set(k, l, h + s * (g - h * tau));
}

fn sorted_descending(d: Vec<f64>, v: Matrix) -> SymmetricEigen {
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].partial_cmp(&d[i]).expect("finite eigenvalues"));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, new_col, v.get(row, old_col));
        }
    }
    SymmetricEigen { values, vectors }
}
