//! Real bilinear forms and their orthogonality.
//!
//! A matrix `A` represents the form `T_A(x, y) = <x, A y>` on a pair of
//! Euclidean spaces. Three facts make the form's geometry finite: the
//! family is linear in the matrix (`T_A + t T_B = T_{A+tB}`), the sup of
//! `|T_A|` over unit pairs is the spectral norm of `A`, and the pairs
//! attaining that sup are exactly `(+-Ay/|A|, y)` with `y` a unit vector
//! in the top right-singular subspace. Orthogonality of forms thereby
//! reduces to orthogonality of the representing matrices under the
//! spectral norm, and the matrix witness lifts to a witness pair.

use crate::attainment::{spectral_norm, top_singular, TopSingularData};
use crate::certificate::{OrthCertificate, Witness};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::operator::bhatia_semrl_check;
use crate::DEFAULT_GAP_TOL;

/// The bilinear form `T_A(x, y) = <x, A y>` represented by a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Self {
        BilinearForm { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Dimension of the left slot.
    pub fn left_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Dimension of the right slot.
    pub fn right_dim(&self) -> usize {
        self.matrix.cols()
    }
}

/// Evaluates `T_A(x, y) = x^T A y`.
pub fn bilinear_eval(form: &BilinearForm, x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != form.left_dim() {
        return Err(Error::DimensionMismatch { expected: form.left_dim(), got: x.len() });
    }
    let ay = form.matrix.matvec(y)?;
    Ok(x.iter().zip(&ay).map(|(a, b)| a * b).sum())
}

/// Norm of the form, `sup |T_A(x, y)|` over Euclidean unit pairs, which
/// equals the spectral norm of the representing matrix. Zero for the
/// zero form.
pub fn bilinear_norm(form: &BilinearForm) -> f64 {
    spectral_norm(&form.matrix)
}

/// The norm-attaining pairs of a nonzero form, as a parametrization.
///
/// Every attaining pair is `(sign * A y / |A|, y)` with `y` unit in the
/// top right-singular subspace, so the set is described by the subspace
/// data plus a sign; [`member`](BilinearAttainment::member) instantiates
/// one pair and [`enumerate`](BilinearAttainment::enumerate) lists them
/// all when the subspace is a line.
#[derive(Debug, Clone)]
pub struct BilinearAttainment {
    matrix: Matrix,
    /// Top right-singular data of the representing matrix.
    pub top: TopSingularData,
}

/// Computes the attainment parametrization; errors on the zero form,
/// whose attainment set is empty of unit pairs.
pub fn bilinear_attainment(form: &BilinearForm) -> Result<BilinearAttainment> {
    let top = top_singular(&form.matrix, DEFAULT_GAP_TOL)?;
    Ok(BilinearAttainment { matrix: form.matrix.clone(), top })
}

impl BilinearAttainment {
    /// The attaining pair with `y` the normalized combination of the
    /// subspace basis by `coeffs` and `x = sign * A y / |A|`.
    pub fn member(&self, coeffs: &[f64], negate: bool) -> Result<(Vec<f64>, Vec<f64>)> {
        if coeffs.len() != self.top.basis.len() {
            return Err(Error::DimensionMismatch {
                expected: self.top.basis.len(),
                got: coeffs.len(),
            });
        }
        let len = coeffs.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !len.is_finite() || len == 0.0 {
            return Err(Error::InvalidArgument(
                "attainment coefficients must be finite and not all zero".into(),
            ));
        }
        let mut y = vec![0.0; self.matrix.cols()];
        for (c, basis_vec) in coeffs.iter().zip(&self.top.basis) {
            for (yi, b) in y.iter_mut().zip(basis_vec) {
                *yi += c / len * b;
            }
        }
        let mut x = self.matrix.matvec(&y)?;
        let s = if negate { -1.0 } else { 1.0 };
        for xi in &mut x {
            *xi *= s / self.top.sigma_max;
        }
        Ok((x, y))
    }

    /// Both sign branches explicitly, when the subspace is a line: the
    /// two pairs through `y = v1`, each standing for itself and its
    /// simultaneous sign flip. `None` when the subspace has dimension
    /// two or more and the attaining set is a continuum.
    pub fn enumerate(&self) -> Option<Vec<(Vec<f64>, Vec<f64>)>> {
        if self.top.basis.len() != 1 {
            return None;
        }
        Some(vec![self.member(&[1.0], false).unwrap(), self.member(&[1.0], true).unwrap()])
    }
}

/// Decides `T_A` orthogonal to `T_B` in the space of bounded bilinear
/// forms.
///
/// Through the attainment parametrization the question collapses to the
/// matrices: `T_A` is orthogonal to `T_B` iff some top right-singular
/// unit `y0` of `A` has `<A y0, B y0> = 0`, the same condition the
/// spectral-norm matrix check decides. This delegates there and lifts
/// the witness to the pair `(x0, y0)`, `x0 = A y0 / |A|` with the sign
/// fixed so `T_A(x0, y0) = +|T_A|`. Non-orthogonal certificates keep
/// the matrix evidence, which transfers verbatim: the norm of
/// `T_A + lambda T_B` is the spectral norm of `A + lambda B`.
pub fn bilinear_orth_check(
    f: &BilinearForm,
    g: &BilinearForm,
    tol: f64,
) -> Result<OrthCertificate> {
    let mut cert = bhatia_semrl_check(&f.matrix, &g.matrix, tol)?;
    if let Some(Witness::Vector(y0)) = cert.witness.take() {
        let ay = f.matrix.matvec(&y0)?;
        let len: f64 = ay.iter().map(|c| c * c).sum::<f64>().sqrt();
        let x0: Vec<f64> = ay.iter().map(|c| c / len).collect();
        cert = cert.with_witness(Witness::Pair { x: x0, y: y0 });
    }
    Ok(cert)
}
