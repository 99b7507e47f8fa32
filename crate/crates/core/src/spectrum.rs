//! Eigenvalues of general (non-Hermitian) matrices.
//!
//! Backed by nalgebra's complex Schur decomposition. Used to check results,
//! never as an input to the region computations.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{Complex, ComplexMatrix};

const SCHUR_TOL: f64 = 1e-14;
const SCHUR_MAX_ITER: usize = 10_000;

/// Eigenvalues sorted by real part, then imaginary part.
pub fn eigenvalues(a: &ComplexMatrix) -> Result<Vec<Complex>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "eigenvalues need a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let m = DMatrix::from_row_slice(n, n, a.as_slice());
    let schur = m
        .try_schur(SCHUR_TOL, SCHUR_MAX_ITER)
        .ok_or_else(|| Error::Parameter("Schur iteration did not converge".into()))?;
    let (_, t) = schur.unpack();
    let mut values: Vec<Complex> = (0..n).map(|i| t[(i, i)]).collect();
    values.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(values)
}

/// Smallest singular value of `A − λI` relative to `1 + ‖A‖_max`, computed
/// through the Hermitian eigenvalues of (A − λI)*(A − λI).
pub fn eigen_residual(a: &ComplexMatrix, lambda: Complex) -> Result<f64> {
    let n = a.rows();
    let shifted = a.shift_diagonal(-lambda);
    let m = DMatrix::from_row_slice(n, n, shifted.as_slice());
    let sv = m.singular_values();
    let smallest = sv.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(smallest / (1.0 + a.max_abs()))
}
