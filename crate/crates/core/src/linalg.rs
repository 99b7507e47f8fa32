//! Dense complex matrices and the small-matrix spectral routines the region
//! computations are built on.
//!
//! Everything here targets small dense matrices (n up to a few dozen). The
//! Hermitian eigensolver is a cyclic complex Jacobi iteration, which converges
//! unconditionally and returns eigenvectors orthonormal to machine precision.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Relative tolerance used when checking that an input is Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major entries, rejecting non-finite values.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(idx) = data.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite {
                row: idx / cols.max(1),
                col: idx % cols.max(1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        Self::from_row_major(rows.len(), cols, rows.concat())
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<Complex>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Real diagonal matrix.
    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(d, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.is_finite())
    }

    /// Largest entry modulus, ‖·‖_max.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, factor: Complex) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    /// `self + shift·I`.
    pub fn shift_diagonal(&self, shift: Complex) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] += shift;
        }
        m
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols);
        Self::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)])
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diagonal(&self) -> Vec<Complex> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    /// `self · x` for a vector `x`.
    pub fn mul_vec(&self, x: &[Complex]) -> Vec<Complex> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Largest deviation from Hermitian symmetry, max |m_ij − conj(m_ji)|.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;

    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[l * rhs.cols + j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:>10.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// H(A) = (A + A*)/2, exactly Hermitian.
pub fn hermitian_part(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.require_square("hermitian_part")?;
    let n = a.rows;
    let mut h = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = Complex::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let z = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    Ok(h)
}

/// S(A) = (A − A*)/2, exactly skew-Hermitian.
pub fn skew_part(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.require_square("skew_part")?;
    let n = a.rows;
    let mut s = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        s[(i, i)] = Complex::new(0.0, a[(i, i)].im);
        for j in i + 1..n {
            let z = (a[(i, j)] - a[(j, i)].conj()) * 0.5;
            s[(i, j)] = z;
            s[(j, i)] = -z.conj();
        }
    }
    Ok(s)
}

/// Projects a nearly Hermitian matrix onto the Hermitian matrices.
pub fn symmetrize(m: &ComplexMatrix) -> ComplexMatrix {
    // the square check already happened in every caller
    hermitian_part(m).expect("square matrix")
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigenDecomposition {
    /// Eigenvalues in non-increasing order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: ComplexMatrix,
}

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian
/// matrix, by cyclic complex Jacobi rotations.
///
/// Each eigenvector is phase-normalized: its first component of largest
/// modulus is made real and positive. Equal eigenvalues keep the order in
/// which the solver produced them.
pub fn eig_hermitian(h: &ComplexMatrix) -> Result<HermitianEigenDecomposition> {
    h.require_square("eig_hermitian")?;
    let deviation = h.hermitian_deviation();
    if deviation > HERMITIAN_TOL * (1.0 + h.max_abs()) {
        return Err(Error::NotHermitian { deviation });
    }
    let n = h.rows;
    let mut a = symmetrize(h);
    let mut v = ComplexMatrix::identity(n);

    let norm = a.frobenius_norm();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * norm || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&x, &y| diag[y].total_cmp(&diag[x]));

    let values = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        let mut vec = v.column(src);
        fix_phase(&mut vec);
        for (row, z) in vec.into_iter().enumerate() {
            vectors[(row, col)] = z;
        }
    }
    Ok(HermitianEigenDecomposition { values, vectors })
}

/// Zeroes `a[p][q]` with the unitary J = D·R, where D makes the pivot real
/// and R is the classical real Jacobi rotation.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let g_pp = Complex::new(c, 0.0);
    let g_pq = Complex::new(s, 0.0);
    let g_qp = phase.conj() * -s;
    let g_qq = phase.conj() * c;

    let n = a.rows;
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

/// Rotates `vec` so its first largest-modulus component is real positive.
fn fix_phase(vec: &mut [Complex]) {
    let max = vec.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return;
    }
    let pivot = vec
        .iter()
        .position(|z| z.norm() >= max * (1.0 - 1e-12))
        .expect("non-empty vector");
    let rot = vec[pivot].conj() / vec[pivot].norm();
    for z in vec.iter_mut() {
        *z *= rot;
    }
    vec[pivot] = Complex::new(vec[pivot].norm(), 0.0);
}

/// Determinant: explicit cofactor formulas up to 3×3, partial-pivoted
/// elimination beyond.
pub fn determinant(m: &ComplexMatrix) -> Result<Complex> {
    m.require_square("determinant")?;
    Ok(det_unchecked(m))
}

fn det_unchecked(m: &ComplexMatrix) -> Complex {
    let e = |i, j| m[(i, j)];
    match m.rows {
        0 => ONE,
        1 => e(0, 0),
        2 => e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
        3 => {
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
                - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        }
        _ => match lu_decompose(m) {
            Some(lu) => lu.determinant(),
            None => ZERO,
        },
    }
}

struct Lu {
    n: usize,
    factors: ComplexMatrix,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    fn determinant(&self) -> Complex {
        (0..self.n).fold(Complex::new(self.sign, 0.0), |acc, i| acc * self.factors[(i, i)])
    }

    fn solve(&self, b: &[Complex]) -> Vec<Complex> {
        let n = self.n;
        let lu = &self.factors;
        let mut x: Vec<Complex> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = lu[(i, j)];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = lu[(i, j)];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= lu[(i, i)];
        }
        x
    }

    fn inverse(&self) -> ComplexMatrix {
        let n = self.n;
        let mut inv = ComplexMatrix::zeros(n, n);
        let mut e = vec![ZERO; n];
        for j in 0..n {
            e.iter_mut().for_each(|z| *z = ZERO);
            e[j] = ONE;
            for (i, z) in self.solve(&e).into_iter().enumerate() {
                inv[(i, j)] = z;
            }
        }
        inv
    }
}

/// Doolittle LU with partial pivoting; `None` when a pivot is exactly zero.
fn lu_decompose(m: &ComplexMatrix) -> Option<Lu> {
    let n = m.rows;
    let mut a = m.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm()))
            .expect("non-empty range");
        if a[(pivot, col)].norm() == 0.0 {
            return None;
        }
        if pivot != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(pivot, j)];
                a[(pivot, j)] = tmp;
            }
            perm.swap(col, pivot);
            sign = -sign;
        }
        let d = a[(col, col)];
        for i in col + 1..n {
            let f = a[(i, col)] / d;
            a[(i, col)] = f;
            for j in col + 1..n {
                let u = a[(col, j)];
                a[(i, j)] -= f * u;
            }
        }
    }
    Some(Lu {
        n,
        factors: a,
        perm,
        sign,
    })
}

fn one_norm(m: &ComplexMatrix) -> f64 {
    (0..m.cols)
        .map(|j| (0..m.rows).map(|i| m[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Condition number (1-norm) above which the adjugate falls back to cofactors.
const ADJUGATE_COND_LIMIT: f64 = 1e12;

/// Adjugate (transposed cofactor matrix), so that adj(M)·M = det(M)·I.
///
/// A 1×1 matrix has adjugate [[1]]. Up to 4×4 the cofactors are expanded
/// directly; larger well-conditioned inputs use det·inverse.
pub fn adjugate(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    m.require_square("adjugate")?;
    let n = m.rows;
    if n == 0 {
        return Err(Error::Dimension("adjugate of an empty matrix".into()));
    }
    if n == 1 {
        return Ok(ComplexMatrix::identity(1));
    }
    if n == 2 {
        let mut adj = ComplexMatrix::zeros(2, 2);
        adj[(0, 0)] = m[(1, 1)];
        adj[(0, 1)] = -m[(0, 1)];
        adj[(1, 0)] = -m[(1, 0)];
        adj[(1, 1)] = m[(0, 0)];
        return Ok(adj);
    }
    if n > 4 {
        if let Some(lu) = lu_decompose(m) {
            let inv = lu.inverse();
            if one_norm(m) * one_norm(&inv) <= ADJUGATE_COND_LIMIT {
                return Ok(inv.scale(lu.determinant()));
            }
        }
    }
    Ok(cofactor_adjugate(m))
}

fn cofactor_adjugate(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.rows;
    let mut adj = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // adj[i][j] is the (j, i) cofactor
            let minor = ComplexMatrix::from_fn(n - 1, n - 1, |r, c| {
                let rr = if r < j { r } else { r + 1 };
                let cc = if c < i { c } else { c + 1 };
                m[(rr, cc)]
            });
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            adj[(i, j)] = det_unchecked(&minor) * sign;
        }
    }
    adj
}

/// σ₁(V)², the squared largest singular value; zero for an empty matrix.
pub fn largest_singular_value_sq(v: &ComplexMatrix) -> f64 {
    if v.rows == 0 || v.cols == 0 {
        return 0.0;
    }
    if v.cols == 1 {
        return v.data.iter().map(|z| z.norm_sqr()).sum();
    }
    let gram = symmetrize(&(&v.adjoint() * v));
    lambda_extreme_hermitian(&gram, Extreme::Max)
        .expect("Gram matrix is Hermitian")
        .max(0.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Max,
    Min,
}

/// Largest or smallest eigenvalue of a Hermitian matrix, in closed form for
/// 1×1 and 2×2 inputs.
pub fn lambda_extreme_hermitian(m: &ComplexMatrix, which: Extreme) -> Result<f64> {
    m.require_square("lambda_extreme_hermitian")?;
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOL * (1.0 + m.max_abs()) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(match m.rows {
        0 => return Err(Error::Dimension("empty matrix has no eigenvalues".into())),
        1 => m[(0, 0)].re,
        2 => {
            let (hi, lo) = eig2_hermitian(m[(0, 0)].re, m[(1, 0)], m[(1, 1)].re);
            match which {
                Extreme::Max => hi,
                Extreme::Min => lo,
            }
        }
        _ => {
            let values = eig_hermitian(m)?.values;
            match which {
                Extreme::Max => values[0],
                Extreme::Min => values[values.len() - 1],
            }
        }
    })
}

/// Eigenvalues (max, min) of [[m1, conj(m2)], [m2, m3]].
pub(crate) fn eig2_hermitian(m1: f64, m2: Complex, m3: f64) -> (f64, f64) {
    let trace = m1 + m3;
    let disc = (m1 - m3).hypot(2.0 * m2.norm());
    let det = m1 * m3 - m2.norm_sqr();
    // take the root without cancellation, recover the other from the determinant
    if trace >= 0.0 {
        let hi = 0.5 * (trace + disc);
        let lo = if hi != 0.0 { det / hi } else { 0.0 };
        (hi, lo.min(hi))
    } else {
        let lo = 0.5 * (trace - disc);
        let hi = if lo != 0.0 { det / lo } else { 0.0 };
        (hi.max(lo), lo)
    }
}
