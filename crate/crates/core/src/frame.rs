//! The spectral frame of a rotated matrix: the eigen-decomposition of its
//! Hermitian part and the blocks of its skew part expressed in that basis.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::linalg::{
    eig_hermitian, hermitian_part, largest_singular_value_sq, skew_part, Complex, ComplexMatrix,
};

/// Gap δ_k − δ_{k+1} (relative to 1 + ‖A‖_max) below which a frame is flagged
/// as degenerate.
const DEGENERATE_GAP: f64 = 1e-10;

/// All quantities derived from `(A, k, θ)`.
///
/// With H(e^{iθ}A) = U·diag(δ)·U* and Y = U*·S(e^{iθ}A)·U partitioned as
/// `[[Y_k, −V_k*], [V_k, Ỹ_k]]`, the frame stores δ, U, Y, the blocks Y_k and
/// V_k, κ = σ₁(V_k)² and δ_{k+1}.
#[derive(Clone, Debug)]
pub struct SpectralFrame {
    pub k: usize,
    pub theta: f64,
    /// e^{iθ}·A
    pub a_rot: ComplexMatrix,
    /// Eigenvalues δ₁ ≥ … ≥ δ_n of H(a_rot).
    pub deltas: Vec<f64>,
    /// Unitary matrix whose columns are the eigenvectors u_j.
    pub u: ComplexMatrix,
    /// S(a_rot), kept for the closed-form evaluators.
    pub skew: ComplexMatrix,
    /// U*·S(a_rot)·U, exactly skew-Hermitian.
    pub y: ComplexMatrix,
    pub delta_k_block: Vec<f64>,
    pub y_k: ComplexMatrix,
    pub v_k: ComplexMatrix,
    /// σ₁(V_k)²
    pub kappa: f64,
    /// δ_{k+1}
    pub delta_next: f64,
    /// Set when δ_k and δ_{k+1} coincide; U then depends on the solver's
    /// choice of basis for the shared eigenspace.
    pub degenerate: bool,
    /// 1 + ‖A‖_max, the magnitude used for relative tolerances.
    pub scale: f64,
}

pub fn build_frame(a: &ComplexMatrix, k: usize, theta: f64) -> Result<SpectralFrame> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "frame needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if k == 0 || k >= n {
        return Err(Error::Parameter(format!(
            "k must lie in [1, {}] for a {n}x{n} matrix, got {k}",
            n.saturating_sub(1)
        )));
    }
    if !theta.is_finite() {
        return Err(Error::Parameter(format!("rotation angle {theta} is not finite")));
    }

    let a_rot = a.scale(Complex::from_polar(1.0, theta));
    let eig = eig_hermitian(&hermitian_part(&a_rot)?)?;
    let skew = skew_part(&a_rot)?;
    let u = eig.vectors;
    let y = skew_part(&(&(&u.adjoint() * &skew) * &u))?;
    let y_k = y.submatrix(0, 0, k, k);
    let v_k = y.submatrix(k, 0, n - k, k);
    let kappa = largest_singular_value_sq(&v_k);
    let deltas = eig.values;
    let scale = 1.0 + a.max_abs();

    Ok(SpectralFrame {
        k,
        theta,
        delta_k_block: deltas[..k].to_vec(),
        delta_next: deltas[k],
        degenerate: deltas[k - 1] - deltas[k] <= DEGENERATE_GAP * scale,
        a_rot,
        deltas,
        u,
        skew,
        y,
        y_k,
        v_k,
        kappa,
        scale,
    })
}

impl SpectralFrame {
    pub fn n(&self) -> usize {
        self.deltas.len()
    }

    pub fn delta_max(&self) -> f64 {
        self.deltas[0]
    }

    pub fn delta_min(&self) -> f64 {
        self.deltas[self.deltas.len() - 1]
    }

    /// W_k = Δ_k + Y_k − (s + it)·I_k.
    pub fn w_matrix(&self, s: f64, t: f64) -> ComplexMatrix {
        let lambda = Complex::new(s, t);
        let mut w = self.y_k.clone();
        for (j, &d) in self.delta_k_block.iter().enumerate() {
            w[(j, j)] += Complex::new(d, 0.0) - lambda;
        }
        w
    }
}

/// Cache of frames keyed by matrix contents, `k` and θ. Safe to fill from
/// several threads; entries are deterministic so concurrent inserts of the
/// same key are harmless.
#[derive(Default)]
pub struct FrameCache {
    frames: RwLock<HashMap<(u64, usize, u64), Arc<SpectralFrame>>>,
}

impl FrameCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_build(
        &self,
        a: &ComplexMatrix,
        k: usize,
        theta: f64,
    ) -> Result<Arc<SpectralFrame>> {
        let key = (matrix_hash(a), k, theta.to_bits());
        if let Some(frame) = self.frames.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(frame));
        }
        let frame = Arc::new(build_frame(a, k, theta)?);
        self.frames
            .write()
            .expect("cache lock")
            .insert(key, Arc::clone(&frame));
        Ok(frame)
    }

    pub fn len(&self) -> usize {
        self.frames.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn matrix_hash(a: &ComplexMatrix) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    (a.rows(), a.cols()).hash(&mut h);
    for z in a.as_slice() {
        z.re.to_bits().hash(&mut h);
        z.im.to_bits().hash(&mut h);
    }
    h.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_part;

    fn a_tilde() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[3.0, 0.0, -2.0], &[0.0, 1.0, -4.0], &[2.0, 4.0, 0.0]])
            .unwrap()
    }

    fn test_matrix() -> ComplexMatrix {
        ComplexMatrix::from_fn(5, 5, |i, j| {
            let x = (i * 7 + j * 3) as f64;
            Complex::new((x * 0.37).sin(), (x * 0.91).cos())
        })
    }

    #[test]
    fn a_tilde_frames() {
        let f1 = build_frame(&a_tilde(), 1, 0.0).unwrap();
        assert!((f1.kappa - 4.0).abs() < 1e-12);
        assert!((f1.delta_next - 1.0).abs() < 1e-12);
        for (d, want) in f1.deltas.iter().zip([3.0, 1.0, 0.0]) {
            assert!((d - want).abs() < 1e-12);
        }
        let f2 = build_frame(&a_tilde(), 2, 0.0).unwrap();
        assert!((f2.kappa - 20.0).abs() < 1e-12);
        assert!(f2.delta_next.abs() < 1e-12);
        assert!(!f2.degenerate);
    }

    #[test]
    fn hermitian_input_has_no_coupling() {
        let h = hermitian_part(&test_matrix()).unwrap();
        for k in 1..5 {
            let f = build_frame(&h, k, 0.0).unwrap();
            assert_eq!(f.y.max_abs(), 0.0);
            assert_eq!(f.kappa, 0.0);
            let w = f.w_matrix(0.3, -0.2);
            for i in 0..k {
                for j in 0..k {
                    let want = if i == j {
                        Complex::new(f.deltas[i] - 0.3, 0.2)
                    } else {
                        Complex::new(0.0, 0.0)
                    };
                    assert_eq!(w[(i, j)], want);
                }
            }
        }
    }

    #[test]
    fn k_out_of_range() {
        let a = a_tilde();
        assert!(matches!(build_frame(&a, 0, 0.0), Err(Error::Parameter(_))));
        assert!(matches!(build_frame(&a, 3, 0.0), Err(Error::Parameter(_))));
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(build_frame(&rect, 1, 0.0), Err(Error::Dimension(_))));
    }

    #[test]
    fn block_structure_and_diagonalization() {
        let a = test_matrix();
        for k in 1..5 {
            let f = build_frame(&a, k, 0.7).unwrap();
            let n = f.n();
            let tol = 1e-10 * (1.0 + f.skew.max_abs());
            assert!((&f.y.adjoint() + &f.y).max_abs() <= tol);
            let upper_right = f.y.submatrix(0, k, k, n - k);
            assert!((&upper_right + &f.v_k.adjoint()).max_abs() <= tol);
            let h = hermitian_part(&f.a_rot).unwrap();
            let d = &(&f.u.adjoint() * &h) * &f.u;
            assert!((&d - &ComplexMatrix::from_diagonal(&f.deltas)).max_abs() <= 1e-9 * f.scale);
            assert_eq!(f.delta_next, f.deltas[k]);
            assert!(f.kappa >= 0.0);
        }
    }

    #[test]
    fn w_matrix_hermitian_part_is_shifted_deltas() {
        let f = build_frame(&test_matrix(), 3, 1.1).unwrap();
        let w = f.w_matrix(0.25, 1.5);
        let hw = hermitian_part(&w).unwrap();
        let shifted: Vec<f64> = f.delta_k_block.iter().map(|d| d - 0.25).collect();
        assert!((&hw - &ComplexMatrix::from_diagonal(&shifted)).max_abs() < 1e-14);
    }

    #[test]
    fn k1_scalar_w() {
        let f = build_frame(&test_matrix(), 1, 0.0).unwrap();
        let u1 = f.u.column(0);
        let su1 = f.skew.mul_vec(&u1);
        let alpha: Complex = u1.iter().zip(&su1).map(|(a, b)| a.conj() * b).sum();
        let w = f.w_matrix(0.1, 0.2);
        let want = Complex::new(f.deltas[0] - 0.1, alpha.im - 0.2);
        assert!((w[(0, 0)] - want).norm() < 1e-13);
    }

    #[test]
    fn rotation_matches_prerotated_matrix() {
        let a = test_matrix();
        let theta = 2.3;
        let f = build_frame(&a, 2, theta).unwrap();
        let g = build_frame(&a.scale(Complex::from_polar(1.0, theta)), 2, 0.0).unwrap();
        for (x, y) in f.deltas.iter().zip(&g.deltas) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn cache_reuses_frames() {
        let cache = FrameCache::new();
        let a = a_tilde();
        let f = cache.get_or_build(&a, 1, 0.5).unwrap();
        let g = cache.get_or_build(&a, 1, 0.5).unwrap();
        assert!(Arc::ptr_eq(&f, &g));
        cache.get_or_build(&a, 2, 0.5).unwrap();
        assert_eq!(cache.len(), 2);
    }
}
