//! Dense row-major matrices.
//!
//! Deliberately small: the checks in this crate live at desk scale
//! (operators on R^2 through R^6, sampled functions with a few thousand
//! grid points), so a plain `Vec<f64>` store with the handful of products
//! the algorithms need beats pulling in a linear-algebra framework.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds from row-major data; `data.len()` must equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::BadMatrixData { rows, cols, got: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            if row.len() != c {
                return Err(Error::BadMatrixData { rows: r, cols: c, got: row.len() });
            }
            data.extend_from_slice(row);
        }
        Matrix::new(r, c, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == 0.0)
    }

    pub fn same_shape(&self, other: &Matrix) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    pub(crate) fn shape_mismatch(&self, other: &Matrix) -> Error {
        Error::ShapeMismatch {
            a_rows: self.rows,
            a_cols: self.cols,
            b_rows: other.rows,
            b_cols: other.cols,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(self.shape_mismatch(other));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        Ok(out)
    }

    /// `self + lambda * other`, the pencil every line search walks along.
    pub fn scaled_add(&self, lambda: f64, other: &Matrix) -> Result<Matrix> {
        if !self.same_shape(other) {
            return Err(self.shape_mismatch(other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + lambda * b)
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    /// `A^T A`, symmetric by construction (the product is filled from one
    /// triangle).
    pub fn gram(&self) -> Matrix {
        let n = self.cols;
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = 0.0;
                for k in 0..self.rows {
                    s += self.data[k * n + i] * self.data[k * n + j];
                }
                g.data[i * n + j] = s;
                g.data[j * n + i] = s;
            }
        }
        g
    }

    /// Operator norm as a map `l1 -> l1`: the largest column sum of
    /// absolute values. Exact, no iteration.
    pub fn l1_operator_norm(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).abs()).sum())
            .fold(0.0_f64, f64::max)
    }

    /// Operator norm as a map `linf -> linf`: the largest row sum of
    /// absolute values. Exact, no iteration.
    pub fn linf_operator_norm(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.abs()).sum())
            .fold(0.0_f64, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// `(A^T B + B^T A) / 2`: the symmetric pairing whose restriction to the
/// top singular subspace of `A` drives the spectral orthogonality check.
pub fn symmetric_pairing(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if !a.same_shape(b) {
        return Err(a.shape_mismatch(b));
    }
    let atb = a.transpose().matmul(b)?;
    let n = atb.rows();
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            s.set(i, j, 0.5 * (atb.get(i, j) + atb.get(j, i)));
        }
    }
    Ok(s)
}
