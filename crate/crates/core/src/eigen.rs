//! Thin adapters onto nalgebra's dense eigen- and singular-value solvers.

use alloc::vec::Vec;

use nalgebra::{DMatrix, Schur, SymmetricEigen, SVD};

use crate::{CMatrix, Complex, Error, Result};

const MAX_ITER: usize = 10_000;

fn to_na(m: &CMatrix) -> DMatrix<Complex> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.as_slice())
}

/// Eigenvalues of a general square complex matrix (complex Schur form).
pub(crate) fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex>> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let schur = Schur::try_new(to_na(m), f64::EPSILON, MAX_ITER).ok_or(Error::EigenFailure)?;
    let (_, t) = schur.unpack();
    // Complex Schur form is upper triangular up to roundoff.
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

/// Eigenvalues of the Hermitian part `(M + M^*)/2`, ascending.
pub(crate) fn hermitian_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let h = (m + &m.adjoint()).scale_real(0.5);
    let eig = SymmetricEigen::try_new(to_na(&h), f64::EPSILON, MAX_ITER).ok_or(Error::EigenFailure)?;
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.total_cmp(b));
    Ok(vals)
}

/// `sigma_min / sigma_max`, zero for a zero or empty matrix.
pub(crate) fn singular_value_ratio(m: &CMatrix) -> f64 {
    if m.rows() == 0 || m.cols() == 0 || m.norm_max() == 0.0 {
        return 0.0;
    }
    let Some(svd) = SVD::try_new(to_na(m), false, false, f64::EPSILON, MAX_ITER) else {
        return 0.0;
    };
    let sv = &svd.singular_values;
    let max = sv.iter().copied().fold(0.0, f64::max);
    let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
    if m.rows() != m.cols() || max == 0.0 {
        return 0.0;
    }
    min / max
}
