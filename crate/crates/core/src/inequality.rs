//! The eigenvalue inequality as a signed field over the (s, t) plane.
//!
//! For a frame of `(A, k, θ)` and λ = s + it,
//!
//! ```text
//! g(s, t) = κ·λ_max(M_k) − |det W_k|²·(s − δ_{k+1}),   M_k = H(det W_k · adj(W_k*))
//! ```
//!
//! Every eigenvalue of e^{iθ}A satisfies g ≥ 0, and Γ_k is the zero set of g.
//! Alongside the generic evaluator live the closed forms for k = 1 (the cubic)
//! and k = 2, the λ_min companion γ_k, and the squared polynomial whose zero set
//! is Γ₂ ∪ γ₂.

use crate::error::{Error, Result};
use crate::frame::{build_frame, SpectralFrame};
use crate::linalg::{
    adjugate, determinant, eig2_hermitian, hermitian_part, lambda_extreme_hermitian, Complex,
    ComplexMatrix, Extreme,
};

/// One evaluation of the inequality at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IneqValue {
    /// `rhs − lhs`; non-negative inside the allowed region.
    pub g: f64,
    /// |det W_k|²·(s − δ_{k+1})
    pub lhs: f64,
    /// κ·λ(M_k)
    pub rhs: f64,
    /// The extreme eigenvalue of M_k that was used.
    pub lambda_mk: f64,
    pub det_wk: Complex,
}

/// Slack allowed below zero when deciding membership: 1e−9·(1 + ‖A‖_max)^{2k+1}.
pub fn membership_tolerance(frame: &SpectralFrame) -> f64 {
    1e-9 * frame.scale.powi(2 * frame.k as i32 + 1)
}

/// M_k = H(det W_k · adj(W_k*)), exactly Hermitian.
pub fn mk_matrix(frame: &SpectralFrame, s: f64, t: f64) -> ComplexMatrix {
    let w = frame.w_matrix(s, t);
    mk_from_w(&w).0
}

fn mk_from_w(w: &ComplexMatrix) -> (ComplexMatrix, Complex) {
    let det = determinant(w).expect("W_k is square");
    let adj_star = adjugate(&w.adjoint()).expect("W_k is square");
    let m = hermitian_part(&adj_star.scale(det)).expect("square");
    (m, det)
}

fn evaluate(frame: &SpectralFrame, s: f64, t: f64, which: Extreme) -> IneqValue {
    let w = frame.w_matrix(s, t);
    let (m, det_wk) = if frame.k == 2 {
        // same quantities, without the temporaries of the generic path
        let det = w[(0, 0)] * w[(1, 1)] - w[(0, 1)] * w[(1, 0)];
        let mut m = ComplexMatrix::zeros(2, 2);
        let m21 = (w[(1, 0)] * -det.conj() - w[(0, 1)].conj() * det) * 0.5;
        m[(0, 0)] = Complex::new((det * w[(1, 1)].conj()).re, 0.0);
        m[(1, 1)] = Complex::new((det * w[(0, 0)].conj()).re, 0.0);
        m[(1, 0)] = m21;
        m[(0, 1)] = m21.conj();
        (m, det)
    } else {
        mk_from_w(&w)
    };
    let lambda_mk = match frame.k {
        1 => m[(0, 0)].re,
        2 => {
            let (hi, lo) = eig2_hermitian(m[(0, 0)].re, m[(1, 0)], m[(1, 1)].re);
            match which {
                Extreme::Max => hi,
                Extreme::Min => lo,
            }
        }
        _ => lambda_extreme_hermitian(&m, which).expect("M_k is Hermitian"),
    };
    let lhs = det_wk.norm_sqr() * (s - frame.delta_next);
    let rhs = frame.kappa * lambda_mk;
    IneqValue {
        g: rhs - lhs,
        lhs,
        rhs,
        lambda_mk,
        det_wk,
    }
}

/// The inequality with λ_max(M_k); its zero set is Γ_k.
pub fn g_value(frame: &SpectralFrame, s: f64, t: f64) -> IneqValue {
    evaluate(frame, s, t, Extreme::Max)
}

/// The companion with λ_min(M_k); its zero set is γ_k. Identical to
/// [`g_value`] for k = 1.
pub fn g_min_value(frame: &SpectralFrame, s: f64, t: f64) -> IneqValue {
    evaluate(frame, s, t, Extreme::Min)
}

fn require_k(frame: &SpectralFrame, k: usize, what: &str) -> Result<()> {
    if frame.k == k {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "{what} is defined for k = {k}, frame has k = {}",
            frame.k
        )))
    }
}

fn inner(x: &[Complex], y: &[Complex]) -> Complex {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

/// Coefficients of the k = 1 cubic, taken straight from S·u₁.
#[derive(Clone, Copy, Debug)]
pub struct CubicCoefficients {
    pub delta1: f64,
    pub delta2: f64,
    /// α = Im(u₁* S u₁)
    pub alpha: f64,
    /// K₁ = ‖S u₁‖² − α²
    pub k1: f64,
}

impl CubicCoefficients {
    pub fn new(frame: &SpectralFrame) -> Result<Self> {
        require_k(frame, 1, "the cubic inequality")?;
        let u1 = frame.u.column(0);
        let su1 = frame.skew.mul_vec(&u1);
        let alpha = inner(&u1, &su1).im;
        let k1 = inner(&su1, &su1).re - alpha * alpha;
        Ok(Self {
            delta1: frame.deltas[0],
            delta2: frame.deltas[1],
            alpha,
            k1,
        })
    }

    /// K₁(δ₁ − s) − [(δ₁ − s)² + (α − t)²](s − δ₂)
    pub fn eval(&self, s: f64, t: f64) -> f64 {
        let d1 = self.delta1 - s;
        let a = self.alpha - t;
        self.k1 * d1 - (d1 * d1 + a * a) * (s - self.delta2)
    }
}

/// The k = 1 cubic at one point; same sign and zero set as [`g_value`].
pub fn cubic_g1(frame: &SpectralFrame, s: f64, t: f64) -> Result<f64> {
    Ok(CubicCoefficients::new(frame)?.eval(s, t))
}

/// Coefficients of the explicit three-eigenvalue inequality (k = 2), built
/// from S·u₁ and S·u₂ without going through V₂.
#[derive(Clone, Copy, Debug)]
pub struct ExplicitK2 {
    pub deltas: [f64; 3],
    /// α = Im(u₁* S u₁)
    pub alpha: f64,
    /// β = Im(u₂* S u₂)
    pub beta: f64,
    /// γ = u₂* S u₁
    pub gamma: Complex,
    pub k2: f64,
}

impl ExplicitK2 {
    pub fn new(frame: &SpectralFrame) -> Result<Self> {
        require_k(frame, 2, "the explicit k = 2 inequality")?;
        let u1 = frame.u.column(0);
        let u2 = frame.u.column(1);
        let su1 = frame.skew.mul_vec(&u1);
        let su2 = frame.skew.mul_vec(&u2);
        let alpha = inner(&u1, &su1).im;
        let beta = inner(&u2, &su2).im;
        let gamma = inner(&u2, &su1);
        let n1 = inner(&su1, &su1).re;
        let n2 = inner(&su2, &su2).re;
        let cross = inner(&su2, &su1) + Complex::i() * gamma * (alpha + beta);
        let radical = ((n1 - n2 - alpha * alpha + beta * beta).powi(2) + 4.0 * cross.norm_sqr()).sqrt();
        let k2 = 0.5
            * (n1 + n2 - alpha * alpha - beta * beta - 2.0 * gamma.norm_sqr() + radical);
        Ok(Self {
            deltas: [frame.deltas[0], frame.deltas[1], frame.deltas[2]],
            alpha,
            beta,
            gamma,
            k2,
        })
    }

    /// The diagonal and off-diagonal entries (m₁, m₂, m₃) of M₂.
    pub fn m_entries(&self, s: f64, t: f64) -> (f64, Complex, f64) {
        let d1 = self.deltas[0] - s;
        let d2 = self.deltas[1] - s;
        let a = self.alpha - t;
        let b = self.beta - t;
        let g2 = self.gamma.norm_sqr();
        let m1 = d1 * (d2 * d2 + b * b) + d2 * g2;
        let m2 = Complex::i() * self.gamma * (d1 * b + d2 * a);
        let m3 = d2 * (d1 * d1 + a * a) + d1 * g2;
        (m1, m2, m3)
    }

    /// |det W₂|²
    pub fn det_sq(&self, s: f64, t: f64) -> f64 {
        let d1 = self.deltas[0] - s;
        let d2 = self.deltas[1] - s;
        let a = self.alpha - t;
        let b = self.beta - t;
        let re = d1 * d2 - a * b + self.gamma.norm_sqr();
        let im = d1 * b + d2 * a;
        re * re + im * im
    }

    /// Right-hand side minus left-hand side of the inequality.
    pub fn eval(&self, s: f64, t: f64) -> f64 {
        let (m1, m2, m3) = self.m_entries(s, t);
        let rhs = 0.5 * self.k2 * (m1 + m3 + ((m1 - m3).powi(2) + 4.0 * m2.norm_sqr()).sqrt());
        rhs - self.det_sq(s, t) * (s - self.deltas[2])
    }
}

pub fn explicit_g2(frame: &SpectralFrame, s: f64, t: f64) -> Result<f64> {
    Ok(ExplicitK2::new(frame)?.eval(s, t))
}

/// 4|det W₂|⁴(s − δ₃)² − 4K₂·tr M₂·|det W₂|²(s − δ₃) + 4K₂²·det M₂, which
/// vanishes on Γ₂ ∪ γ₂.
pub fn union_poly_value(frame: &SpectralFrame, s: f64, t: f64) -> Result<f64> {
    require_k(frame, 2, "the union polynomial")?;
    let w = frame.w_matrix(s, t);
    let (m, det) = mk_from_w(&w);
    let trace = m[(0, 0)].re + m[(1, 1)].re;
    let det_m = m[(0, 0)].re * m[(1, 1)].re - m[(1, 0)].norm_sqr();
    let d2 = det.norm_sqr();
    let x = s - frame.delta_next;
    let k2 = frame.kappa;
    Ok(4.0 * d2 * d2 * x * x - 4.0 * k2 * trace * d2 * x + 4.0 * k2 * k2 * det_m)
}

/// Both sides of the sufficient condition ‖v₁‖² < K₂·(δ₁ − δ₂)/(δ₁ + δ₂ − 2δ₃)
/// for the cubic Γ₁ to cut inside Γ₂ at s = (δ₁ + δ₂)/2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CrossingCondition {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

/// Evaluates the crossing condition; the derivation assumes a real matrix, so
/// complex input is rejected.
pub fn crossing_condition(a: &ComplexMatrix) -> Result<CrossingCondition> {
    if !a.is_real() {
        return Err(Error::Parameter(
            "the crossing condition is only derived for real matrices".into(),
        ));
    }
    if a.rows() < 3 {
        return Err(Error::Parameter(format!(
            "the crossing condition needs n >= 3, got n = {}",
            a.rows()
        )));
    }
    let frame = build_frame(a, 2, 0.0)?;
    let v1 = frame.v_k.column(0);
    let v2 = frame.v_k.column(1);
    let n1 = inner(&v1, &v1).re;
    let n2 = inner(&v2, &v2).re;
    let k2 = 0.5 * (n1 + n2 + ((n1 - n2).powi(2) + 4.0 * inner(&v2, &v1).norm_sqr()).sqrt());
    let [d1, d2, d3] = [frame.deltas[0], frame.deltas[1], frame.deltas[2]];
    let denom = d1 + d2 - 2.0 * d3;
    let rhs = if denom > 0.0 { k2 * (d1 - d2) / denom } else { 0.0 };
    Ok(CrossingCondition {
        holds: n1 < rhs,
        lhs: n1,
        rhs,
    })
}
