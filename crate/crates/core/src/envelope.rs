//! Rotation envelopes, the numerical range and rank-ℓ half-plane
//! intersections, sampled on a finite set of angles.

use rayon::prelude::*;

use crate::curve::{CurveKind, CurveSet, Polyline, Window};
use crate::error::{Error, Result};
use crate::frame::{build_frame, SpectralFrame};
use crate::inequality::{g_value, membership_tolerance};
use crate::linalg::{eig_hermitian, hermitian_part, Complex, ComplexMatrix};

pub const DEFAULT_THETA_COUNT: usize = 120;

/// Slack on Re(e^{iθ}p) ≤ δ_ℓ(θ), relative to 1 + ‖A‖_max.
const HALF_PLANE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RasterKind {
    Envelope,
    NumRange,
    RankNumRange,
}

impl RasterKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RasterKind::Envelope => "envelope",
            RasterKind::NumRange => "numrange",
            RasterKind::RankNumRange => "rank_numrange",
        }
    }
}

/// Cell membership over a window. Row `j = 0` is at `t_min`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionRaster {
    pub window: Window,
    pub bits: Vec<bool>,
    pub theta_count: usize,
    /// k for envelopes, 0 for half-plane rasters.
    pub k: usize,
    /// ℓ for half-plane rasters.
    pub ell: Option<usize>,
    pub kind: RasterKind,
}

impl RegionRaster {
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[j * self.window.cols + i]
    }

    /// Membership of the cell containing `p`; false outside the window.
    pub fn contains_point(&self, p: Complex) -> bool {
        self.window
            .raster_cell_of(p.re, p.im)
            .is_some_and(|(i, j)| self.get(i, j))
    }

    pub fn member_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Cellwise inclusion; windows must match.
    pub fn is_subset_of(&self, other: &RegionRaster) -> bool {
        self.window == other.window && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }
}

/// θ_m = 2πm/count for m = 0…count−1.
pub fn theta_grid(count: usize) -> Vec<f64> {
    (0..count)
        .map(|m| std::f64::consts::TAU * m as f64 / count as f64)
        .collect()
}

/// One frame per angle, built in parallel.
pub fn envelope_frames(a: &ComplexMatrix, k: usize, thetas: &[f64]) -> Result<Vec<SpectralFrame>> {
    if thetas.is_empty() {
        return Err(Error::Parameter("need at least one rotation angle".into()));
    }
    thetas.par_iter().map(|&theta| build_frame(a, k, theta)).collect()
}

/// Whether `p` lies in every rotated region e^{−iθ}E_k(e^{iθ}A) of `frames`.
pub fn frames_contain(frames: &[SpectralFrame], p: Complex) -> bool {
    frames.iter().all(|f| {
        let q = p * Complex::from_polar(1.0, f.theta);
        g_value(f, q.re, q.im).g >= -membership_tolerance(f)
    })
}

/// Smallest g over the frames at `p`, with the angle where it occurs.
pub fn min_g_over_frames(frames: &[SpectralFrame], p: Complex) -> (f64, f64) {
    frames
        .iter()
        .map(|f| {
            let q = p * Complex::from_polar(1.0, f.theta);
            (g_value(f, q.re, q.im).g, f.theta)
        })
        .fold((f64::INFINITY, 0.0), |best, cur| if cur.0 < best.0 { cur } else { best })
}

pub fn envelope_membership(a: &ComplexMatrix, k: usize, thetas: &[f64], p: Complex) -> Result<bool> {
    Ok(frames_contain(&envelope_frames(a, k, thetas)?, p))
}

fn raster_from<F>(window: &Window, member: F) -> Vec<bool>
where
    F: Fn(Complex) -> bool + Sync,
{
    let mut bits = vec![false; window.cols * window.rows];
    bits.par_chunks_mut(window.cols)
        .enumerate()
        .for_each(|(j, row)| {
            for (i, b) in row.iter_mut().enumerate() {
                let (s, t) = window.cell_center(i, j);
                *b = member(Complex::new(s, t));
            }
        });
    bits
}

pub fn envelope_raster(
    a: &ComplexMatrix,
    k: usize,
    theta_count: usize,
    window: &Window,
) -> Result<RegionRaster> {
    let frames = envelope_frames(a, k, &theta_grid(theta_count))?;
    Ok(envelope_raster_from_frames(&frames, window))
}

/// Raster over explicitly given frames; `theta_count` is recorded as the
/// number of frames.
pub fn envelope_raster_from_frames(frames: &[SpectralFrame], window: &Window) -> RegionRaster {
    RegionRaster {
        window: *window,
        bits: raster_from(window, |p| frames_contain(frames, p)),
        theta_count: frames.len(),
        k: frames.first().map_or(0, |f| f.k),
        ell: None,
        kind: RasterKind::Envelope,
    }
}

/// Boundary points u₁(θ)*·A·u₁(θ) of F(A), one per angle, where u₁(θ) is the
/// top eigenvector of H(e^{iθ}A). Consecutive repeats are dropped.
pub fn numerical_range_boundary(a: &ComplexMatrix, theta_count: usize) -> Result<CurveSet> {
    if theta_count < 3 {
        return Err(Error::Parameter(format!(
            "numerical range needs at least 3 angles, got {theta_count}"
        )));
    }
    if !a.is_square() {
        return Err(Error::Dimension(format!("{}x{} matrix", a.rows(), a.cols())));
    }
    let scale = 1.0 + a.max_abs();
    let raw: Vec<Complex> = theta_grid(theta_count)
        .par_iter()
        .map(|&theta| {
            let h = hermitian_part(&a.scale(Complex::from_polar(1.0, theta)))?;
            let u = eig_hermitian(&h)?.vectors.column(0);
            let au = a.mul_vec(&u);
            Ok(u.iter().zip(&au).map(|(x, y)| x.conj() * y).sum())
        })
        .collect::<Result<_>>()?;
    let mut points: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
    for z in raw {
        let p = (z.re, z.im);
        let repeat = |q: &(f64, f64)| (q.0 - p.0).hypot(q.1 - p.1) <= 1e-12 * scale;
        if !points.last().is_some_and(repeat) {
            points.push(p);
        }
    }
    while points.len() > 1 && (points[0].0 - points[points.len() - 1].0).hypot(points[0].1 - points[points.len() - 1].1) <= 1e-12 * scale {
        points.pop();
    }
    let (mut s_min, mut s_max, mut t_min, mut t_max) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(s, t) in &points {
        s_min = s_min.min(s);
        s_max = s_max.max(s);
        t_min = t_min.min(t);
        t_max = t_max.max(t);
    }
    let pad = 1e-9 * scale;
    let window = Window {
        s_min: s_min - pad,
        s_max: s_max + pad,
        t_min: t_min - pad,
        t_max: t_max + pad,
        cols: theta_count,
        rows: theta_count,
    };
    Ok(CurveSet {
        polylines: vec![Polyline {
            closed: points.len() >= 3,
            points,
            label: None,
        }],
        window,
        kind: CurveKind::NumRange,
        warnings: Vec::new(),
    })
}

/// Membership in the intersection over θ of e^{−iθ}{Re ≤ δ_ℓ(θ)}.
pub fn rank_numrange_raster(
    a: &ComplexMatrix,
    ell: usize,
    theta_count: usize,
    window: &Window,
) -> Result<RegionRaster> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("{}x{} matrix", a.rows(), a.cols())));
    }
    let n = a.rows();
    if ell == 0 || ell > n {
        return Err(Error::Parameter(format!("ell must lie in [1, {n}], got {ell}")));
    }
    if theta_count == 0 {
        return Err(Error::Parameter("need at least one rotation angle".into()));
    }
    let tol = HALF_PLANE_TOL * (1.0 + a.max_abs());
    let planes: Vec<(Complex, f64)> = theta_grid(theta_count)
        .par_iter()
        .map(|&theta| {
            let rot = Complex::from_polar(1.0, theta);
            let d = eig_hermitian(&hermitian_part(&a.scale(rot))?)?.values;
            Ok((rot, d[ell - 1]))
        })
        .collect::<Result<_>>()?;
    let bits = raster_from(window, |p| {
        planes.iter().all(|&(rot, d)| (p * rot).re <= d + tol)
    });
    Ok(RegionRaster {
        window: *window,
        bits,
        theta_count,
        k: 0,
        ell: Some(ell),
        kind: if ell == 1 {
            RasterKind::NumRange
        } else {
            RasterKind::RankNumRange
        },
    })
}

/// Γ_k of each rotated matrix mapped back by e^{−iθ} and clipped to `window`.
pub fn rotated_gamma_curves(frames: &[SpectralFrame], window: &Window) -> Vec<CurveSet> {
    let center = Complex::new(0.5 * (window.s_min + window.s_max), 0.5 * (window.t_min + window.t_max));
    let radius = 0.5 * (window.s_max - window.s_min).hypot(window.t_max - window.t_min);
    frames
        .iter()
        .map(|f| {
            let rot = Complex::from_polar(1.0, f.theta);
            let c = center * rot;
            let local = Window {
                s_min: c.re - radius,
                s_max: c.re + radius,
                t_min: c.im - radius,
                t_max: c.im + radius,
                cols: window.cols.max(2),
                rows: window.cols.max(2),
            };
            let traced = crate::curve::gamma_curve(f, &local);
            let back = rot.conj();
            let mut polylines = Vec::new();
            for p in traced.polylines {
                let mut run: Vec<(f64, f64)> = Vec::new();
                for (s, t) in p.points {
                    let z = Complex::new(s, t) * back;
                    if window.contains(z.re, z.im) {
                        run.push((z.re, z.im));
                    } else if run.len() >= 2 {
                        polylines.push(Polyline {
                            points: std::mem::take(&mut run),
                            closed: false,
                            label: None,
                        });
                    } else {
                        run.clear();
                    }
                }
                if run.len() >= 2 {
                    polylines.push(Polyline {
                        points: run,
                        closed: false,
                        label: None,
                    });
                }
            }
            CurveSet {
                polylines,
                window: *window,
                kind: CurveKind::GammaMax,
                warnings: traced.warnings,
            }
        })
        .collect()
}
