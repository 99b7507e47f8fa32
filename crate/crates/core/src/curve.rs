//! Polyline extraction of implicit curves on a rectangular (s, t) window.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frame::SpectralFrame;
use crate::inequality::{g_min_value, g_value, union_poly_value};
use crate::linalg::{eig_hermitian, hermitian_part, Complex};

pub const DEFAULT_GRID: (usize, usize) = (800, 600);
pub const DEFAULT_MARGIN: f64 = 0.25;

/// A rectangle of the (s, t) plane with a sampling resolution.
///
/// For curve tracing, `cols × rows` are grid nodes spanning the closed
/// rectangle. For rasters, `cols × rows` are cells tiling it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub s_min: f64,
    pub s_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub cols: usize,
    pub rows: usize,
}

impl Window {
    pub fn new(s_min: f64, s_max: f64, t_min: f64, t_max: f64, cols: usize, rows: usize) -> Result<Self> {
        let w = Self {
            s_min,
            s_max,
            t_min,
            t_max,
            cols,
            rows,
        };
        w.validate()?;
        Ok(w)
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.s_min, self.s_max, self.t_min, self.t_max]
            .iter()
            .all(|x| x.is_finite());
        if !finite || self.s_min >= self.s_max || self.t_min >= self.t_max {
            return Err(Error::Parameter(format!(
                "window [{}, {}] x [{}, {}] is empty or not finite",
                self.s_min, self.s_max, self.t_min, self.t_max
            )));
        }
        if self.cols < 2 || self.rows < 2 {
            return Err(Error::Parameter(format!(
                "grid {}x{} needs at least 2x2 samples",
                self.cols, self.rows
            )));
        }
        Ok(())
    }

    pub fn with_grid(self, cols: usize, rows: usize) -> Result<Self> {
        Self::new(self.s_min, self.s_max, self.t_min, self.t_max, cols, rows)
    }

    /// Node spacing along s when tracing.
    pub fn cell_width(&self) -> f64 {
        (self.s_max - self.s_min) / (self.cols - 1) as f64
    }

    /// Node spacing along t when tracing.
    pub fn cell_height(&self) -> f64 {
        (self.t_max - self.t_min) / (self.rows - 1) as f64
    }

    pub fn node(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.s_min + i as f64 * self.cell_width(),
            self.t_min + j as f64 * self.cell_height(),
        )
    }

    pub fn raster_cell_width(&self) -> f64 {
        (self.s_max - self.s_min) / self.cols as f64
    }

    pub fn raster_cell_height(&self) -> f64 {
        (self.t_max - self.t_min) / self.rows as f64
    }

    /// Center of raster cell `(i, j)`; row `j = 0` is at `t_min`.
    pub fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.s_min + (i as f64 + 0.5) * self.raster_cell_width(),
            self.t_min + (j as f64 + 0.5) * self.raster_cell_height(),
        )
    }

    /// Raster cell containing `(s, t)`, if inside the window.
    pub fn raster_cell_of(&self, s: f64, t: f64) -> Option<(usize, usize)> {
        if !self.contains(s, t) {
            return None;
        }
        let i = ((s - self.s_min) / self.raster_cell_width()) as usize;
        let j = ((t - self.t_min) / self.raster_cell_height()) as usize;
        Some((i.min(self.cols - 1), j.min(self.rows - 1)))
    }

    pub fn contains(&self, s: f64, t: f64) -> bool {
        (self.s_min..=self.s_max).contains(&s) && (self.t_min..=self.t_max).contains(&t)
    }

    /// Smallest window (with this window's grid) covering both.
    pub fn union(&self, other: &Window) -> Window {
        Window {
            s_min: self.s_min.min(other.s_min),
            s_max: self.s_max.max(other.s_max),
            t_min: self.t_min.min(other.t_min),
            t_max: self.t_max.max(other.t_max),
            ..*self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    GammaMax,
    GammaMin,
    Union,
    Hyperbola,
    NumRange,
}

impl CurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveKind::GammaMax => "gamma_max",
            CurveKind::GammaMin => "gamma_min",
            CurveKind::Union => "union",
            CurveKind::Hyperbola => "hyperbola",
            CurveKind::NumRange => "numrange",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveWarning {
    /// δ_k = δ_{k+1}; the frame basis is not unique.
    DegenerateFrame,
    /// V_k = 0: the curve is the line s = δ_{k+1} plus isolated points.
    VanishingCoupling,
    /// γ_k for k ≥ 3.
    Experimental,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    pub points: Vec<(f64, f64)>,
    /// Closed polylines do not repeat their first vertex.
    pub closed: bool,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveSet {
    pub polylines: Vec<Polyline>,
    pub window: Window,
    pub kind: CurveKind,
    pub warnings: Vec<CurveWarning>,
}

impl CurveSet {
    pub fn closed_count(&self) -> usize {
        self.polylines.iter().filter(|p| p.closed).count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.polylines.iter().flat_map(|p| p.points.iter().copied())
    }

    pub fn is_empty(&self) -> bool {
        self.polylines.is_empty()
    }
}

/// Default window for the curves of a frame.
///
/// s spans [δ_{k+1} − m·span, δ₁ + m·span + √κ] and t is symmetric with
/// half-width max(√κ + span, 1)·(1 + m), where span = δ₁ − δ_n. The window is
/// then widened to cover the bounding box of the numerical range of the
/// rotated matrix, which contains its spectrum.
pub fn auto_window(frame: &SpectralFrame, margin: f64) -> Window {
    let span = frame.delta_max() - frame.delta_min();
    let root_kappa = frame.kappa.sqrt();
    let mut s_min = frame.delta_next - margin * span;
    let mut s_max = frame.delta_max() + margin * span + root_kappa;
    let mut half = (root_kappa + span).max(1.0) * (1.0 + margin);

    // Im(x* A x) is bounded by the extreme eigenvalues of H(−i·A)
    let imag = hermitian_part(&frame.a_rot.scale(Complex::new(0.0, -1.0))).expect("square");
    let mu = eig_hermitian(&imag).expect("Hermitian").values;
    let im_bound = mu[0].abs().max(mu[mu.len() - 1].abs());
    half = half.max(im_bound * (1.0 + margin));
    s_min = s_min.min(frame.delta_min() - margin * span);
    s_max = s_max.max(frame.delta_max() + margin * span);
    if s_max - s_min <= 0.0 {
        let pad = margin.max(0.25) * (1.0 + s_min.abs());
        s_min -= pad;
        s_max += pad;
    }
    let (cols, rows) = DEFAULT_GRID;
    Window {
        s_min,
        s_max,
        t_min: -half,
        t_max: half,
        cols,
        rows,
    }
}

const NONE: usize = usize::MAX;

/// Traces `{f = 0}` over `window` with marching squares.
///
/// Grid values are computed in parallel; linking is a deterministic pass in
/// edge order, so polylines touching the window boundary come first, then
/// closed loops. Vertices are placed by linear interpolation of `f` along
/// cell edges, and saddle cells are resolved by sampling the cell center.
pub fn trace_implicit<F>(window: &Window, kind: CurveKind, f: F) -> CurveSet
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let (cols, rows) = (window.cols, window.rows);
    let mut values = vec![0.0; cols * rows];
    values
        .par_chunks_mut(cols)
        .enumerate()
        .for_each(|(j, row)| {
            for (i, v) in row.iter_mut().enumerate() {
                let (s, t) = window.node(i, j);
                *v = f(s, t);
            }
        });
    let polylines = link_contours(window, &values, &f);
    CurveSet {
        polylines,
        window: *window,
        kind,
        warnings: Vec::new(),
    }
}

fn inside(v: f64) -> bool {
    v >= 0.0
}

fn link_contours<F>(window: &Window, values: &[f64], f: &F) -> Vec<Polyline>
where
    F: Fn(f64, f64) -> f64,
{
    let (cols, rows) = (window.cols, window.rows);
    let h_count = rows * (cols - 1);
    let edge_count = h_count + cols * (rows - 1);
    let h_edge = |i: usize, j: usize| j * (cols - 1) + i;
    let v_edge = |i: usize, j: usize| h_count + j * cols + i;
    let val = |i: usize, j: usize| values[j * cols + i];

    let mut position = vec![(f64::NAN, f64::NAN); edge_count];
    let mut neighbors = vec![[NONE; 2]; edge_count];

    let crossing = |a: (f64, f64), va: f64, b: (f64, f64), vb: f64| -> (f64, f64) {
        let frac = if va.is_finite() && vb.is_finite() && va != vb {
            (va / (va - vb)).clamp(0.0, 1.0)
        } else {
            0.5
        };
        (a.0 + frac * (b.0 - a.0), a.1 + frac * (b.1 - a.1))
    };

    let link = |neighbors: &mut Vec<[usize; 2]>, a: usize, b: usize| {
        for (x, y) in [(a, b), (b, a)] {
            let slot = &mut neighbors[x];
            if slot[0] == NONE {
                slot[0] = y;
            } else {
                slot[1] = y;
            }
        }
    };

    for j in 0..rows - 1 {
        for i in 0..cols - 1 {
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let vals = corners.map(|(a, b)| val(a, b));
            let case = vals
                .iter()
                .enumerate()
                .fold(0u8, |acc, (bit, &v)| acc | ((inside(v) as u8) << bit));
            if case == 0 || case == 15 {
                continue;
            }
            // edges: bottom, right, top, left; edge e joins corners e and e+1
            let edges = [h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)];
            for e in 0..4 {
                let (c0, c1) = (e, (e + 1) % 4);
                if inside(vals[c0]) != inside(vals[c1]) && position[edges[e]].0.is_nan() {
                    position[edges[e]] = crossing(
                        window.node(corners[c0].0, corners[c0].1),
                        vals[c0],
                        window.node(corners[c1].0, corners[c1].1),
                        vals[c1],
                    );
                }
            }
            const BOTTOM: usize = 0;
            const RIGHT: usize = 1;
            const TOP: usize = 2;
            const LEFT: usize = 3;
            let pairs: &[(usize, usize)] = match case {
                5 | 10 => {
                    let (s, t) = window.node(i, j);
                    let center = f(s + 0.5 * window.cell_width(), t + 0.5 * window.cell_height());
                    // case 5: bottom-left and top-right inside
                    match (case, inside(center)) {
                        (5, true) | (10, false) => &[(BOTTOM, RIGHT), (LEFT, TOP)],
                        _ => &[(LEFT, BOTTOM), (RIGHT, TOP)],
                    }
                }
                _ => {
                    let crossed: Vec<usize> = (0..4)
                        .filter(|&e| inside(vals[e]) != inside(vals[(e + 1) % 4]))
                        .collect();
                    link(&mut neighbors, edges[crossed[0]], edges[crossed[1]]);
                    &[]
                }
            };
            for &(a, b) in pairs {
                link(&mut neighbors, edges[a], edges[b]);
            }
        }
    }

    let mut visited = vec![false; edge_count];
    let mut polylines = Vec::new();
    let walk = |start: usize, visited: &mut Vec<bool>| -> (Vec<usize>, bool) {
        let mut chain = Vec::new();
        let mut prev = NONE;
        let mut cur = start;
        loop {
            visited[cur] = true;
            chain.push(cur);
            let next = neighbors[cur]
                .iter()
                .copied()
                .find(|&n| n != NONE && n != prev && !visited[n]);
            match next {
                Some(n) => {
                    prev = cur;
                    cur = n;
                }
                None => break,
            }
        }
        let closed = chain.len() > 2 && neighbors[cur].contains(&start);
        (chain, closed)
    };

    // open chains start at edge points with a single neighbor
    for pass in 0..2 {
        for e in 0..edge_count {
            if visited[e] || neighbors[e][0] == NONE {
                continue;
            }
            let degree = neighbors[e].iter().filter(|&&n| n != NONE).count();
            if pass == 0 && degree != 1 {
                continue;
            }
            let (chain, closed) = walk(e, &mut visited);
            let mut points: Vec<(f64, f64)> = Vec::with_capacity(chain.len());
            for &id in &chain {
                let p = position[id];
                if points.last() != Some(&p) {
                    points.push(p);
                }
            }
            if closed && points.len() > 1 && points.first() == points.last() {
                points.pop();
            }
            polylines.push(Polyline {
                points,
                closed,
                label: None,
            });
        }
    }
    polylines
}

/// Γ_k of a frame: the zero set of [`g_value`].
pub fn gamma_curve(frame: &SpectralFrame, window: &Window) -> CurveSet {
    let mut set = if vanishing_coupling(frame) {
        vertical_line(frame.delta_next, window, CurveKind::GammaMax)
    } else {
        trace_implicit(window, CurveKind::GammaMax, |s, t| g_value(frame, s, t).g)
    };
    if frame.degenerate {
        set.warnings.push(CurveWarning::DegenerateFrame);
    }
    set
}

/// γ_k of a frame: the zero set of [`g_min_value`].
pub fn gamma_min_curve(frame: &SpectralFrame, window: &Window) -> CurveSet {
    let mut set = if vanishing_coupling(frame) {
        vertical_line(frame.delta_next, window, CurveKind::GammaMin)
    } else {
        trace_implicit(window, CurveKind::GammaMin, |s, t| g_min_value(frame, s, t).g)
    };
    if frame.k >= 3 {
        set.warnings.push(CurveWarning::Experimental);
    }
    if frame.degenerate {
        set.warnings.push(CurveWarning::DegenerateFrame);
    }
    set
}

/// Γ₂ ∪ γ₂ as the zero set of the squared polynomial (k = 2 only).
pub fn union_curve(frame: &SpectralFrame, window: &Window) -> Result<CurveSet> {
    union_poly_value(frame, 0.0, 0.0)?;
    Ok(trace_implicit(window, CurveKind::Union, |s, t| {
        union_poly_value(frame, s, t).expect("k = 2 checked")
    }))
}

fn vanishing_coupling(frame: &SpectralFrame) -> bool {
    frame.kappa.sqrt() <= 1e-14 * frame.scale
}

fn vertical_line(s: f64, window: &Window, kind: CurveKind) -> CurveSet {
    let polylines = if (window.s_min..=window.s_max).contains(&s) {
        vec![Polyline {
            points: vec![(s, window.t_min), (s, window.t_max)],
            closed: false,
            label: None,
        }]
    } else {
        Vec::new()
    };
    CurveSet {
        polylines,
        window: *window,
        kind,
        warnings: vec![CurveWarning::VanishingCoupling],
    }
}

/// The hyperbolas (s − (δ_j + δ_i)/2)² − t² = ((δ_j − δ_i)/2)² for every pair
/// j < i among δ₁…δ_{k+1}, clipped to the window. Both branches are emitted;
/// equal deltas give the pair of lines t = ±(s − δ_j).
pub fn hyperbola_set(deltas: &[f64], k: usize, window: &Window) -> Result<CurveSet> {
    if k == 0 || deltas.len() < k + 1 {
        return Err(Error::Parameter(format!(
            "need at least k + 1 = {} deltas, got {}",
            k + 1,
            deltas.len()
        )));
    }
    if deltas.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parameter("deltas must be non-increasing".into()));
    }
    let samples = sample_ts(window);
    let mut polylines = Vec::new();
    for j in 0..=k {
        for i in j + 1..=k {
            let center = 0.5 * (deltas[j] + deltas[i]);
            let semi = 0.5 * (deltas[j] - deltas[i]);
            for side in [-1.0, 1.0] {
                let branch = |t: f64| center + side * semi.hypot(t);
                for mut poly in clip_branch(&branch, &samples, window) {
                    poly.label = Some(format!("{},{}", j + 1, i + 1));
                    polylines.push(poly);
                }
            }
        }
    }
    Ok(CurveSet {
        polylines,
        window: *window,
        kind: CurveKind::Hyperbola,
        warnings: Vec::new(),
    })
}

fn sample_ts(window: &Window) -> Vec<f64> {
    let n = 2 * window.rows;
    let mut ts: Vec<f64> = (0..=n)
        .map(|m| window.t_min + (window.t_max - window.t_min) * m as f64 / n as f64)
        .collect();
    if window.t_min < 0.0 && window.t_max > 0.0 {
        ts.push(0.0);
        ts.sort_by(f64::total_cmp);
        ts.dedup();
    }
    ts
}

/// Splits the graph s = branch(t) into the runs that stay inside the window,
/// adding the exact exit points on the s-boundaries.
fn clip_branch(branch: &dyn Fn(f64) -> f64, ts: &[f64], window: &Window) -> Vec<Polyline> {
    let in_s = |s: f64| (window.s_min..=window.s_max).contains(&s);
    let boundary_point = |t0: f64, t1: f64| -> (f64, f64) {
        // bisect on the transition of in_s between t0 (inside) and t1
        let (mut a, mut b) = (t0, t1);
        for _ in 0..60 {
            let mid = 0.5 * (a + b);
            if in_s(branch(mid)) {
                a = mid;
            } else {
                b = mid;
            }
        }
        (branch(a).clamp(window.s_min, window.s_max), a)
    };
    let mut out = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    for (idx, &t) in ts.iter().enumerate() {
        let s = branch(t);
        if in_s(s) {
            if current.is_empty() && idx > 0 {
                current.push(boundary_point(t, ts[idx - 1]));
            }
            current.push((s, t));
        } else if !current.is_empty() {
            current.push(boundary_point(ts[idx - 1], t));
            out.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out.into_iter()
        .filter(|p| p.len() >= 2)
        .map(|points| Polyline {
            points,
            closed: false,
            label: None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::build_frame;
    use crate::linalg::ComplexMatrix;

    fn unit_window(cols: usize, rows: usize) -> Window {
        Window::new(-2.0, 2.0, -1.5, 1.5, cols, rows).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(Window::new(1.0, 1.0, 0.0, 1.0, 10, 10).is_err());
        assert!(Window::new(0.0, 1.0, 0.0, 1.0, 1, 10).is_err());
        assert!(Window::new(0.0, f64::NAN, 0.0, 1.0, 10, 10).is_err());
        let w = unit_window(5, 4);
        assert_eq!(w.node(0, 0), (-2.0, -1.5));
        assert_eq!(w.node(4, 3), (2.0, 1.5));
        assert_eq!(w.raster_cell_of(-2.0, -1.5), Some((0, 0)));
        assert_eq!(w.raster_cell_of(2.0, 1.5), Some((4, 3)));
        assert_eq!(w.raster_cell_of(2.1, 0.0), None);
    }

    #[test]
    fn vertical_line_from_linear_field() {
        let w = unit_window(41, 31);
        let set = trace_implicit(&w, CurveKind::GammaMax, |s, _| s);
        assert_eq!(set.polylines.len(), 1);
        let line = &set.polylines[0];
        assert!(!line.closed);
        assert!(line.points.iter().all(|&(s, _)| s.abs() < 1e-12));
        let ts: Vec<f64> = line.points.iter().map(|p| p.1).collect();
        assert!(ts.contains(&-1.5) && ts.contains(&1.5));
    }

    #[test]
    fn unit_circle_is_one_closed_loop() {
        let w = unit_window(81, 61);
        let set = trace_implicit(&w, CurveKind::GammaMax, |s, t| s * s + t * t - 1.0);
        assert_eq!(set.polylines.len(), 1);
        assert!(set.polylines[0].closed);
        let diag = w.cell_width().hypot(w.cell_height());
        for (s, t) in set.vertices() {
            assert!((s.hypot(t) - 1.0).abs() < 2.0 * diag);
            assert!(w.contains(s, t));
        }
        let pts = &set.polylines[0].points;
        for pair in pts.windows(2) {
            let d = (pair[0].0 - pair[1].0).hypot(pair[0].1 - pair[1].1);
            assert!(d <= 2.0 * diag);
        }
    }

    #[test]
    fn no_sign_change_gives_empty_set() {
        let set = trace_implicit(&unit_window(10, 10), CurveKind::GammaMax, |s, t| 1.0 + s * s + t * t);
        assert!(set.is_empty());
    }

    #[test]
    fn saddle_cells_resolved_by_center() {
        // f = s*t has a saddle at the origin; the center decides the pairing
        let w = Window::new(-1.0, 1.0, -1.0, 1.0, 4, 4).unwrap();
        let set = trace_implicit(&w, CurveKind::GammaMax, |s, t| s * t - 0.01);
        assert_eq!(set.polylines.len(), 2);
        assert!(set.polylines.iter().all(|p| !p.closed));
    }

    #[test]
    fn hyperbolas_for_three_pairs() {
        let w = Window::new(-1.0, 6.0, -4.0, 4.0, 100, 100).unwrap();
        let set = hyperbola_set(&[5.0, 3.5, 1.0, 0.0], 3, &w).unwrap();
        let mut labels: Vec<String> = set.polylines.iter().filter_map(|p| p.label.clone()).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels, vec!["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"]);
        for p in &set.polylines {
            let (j, i) = p.label.as_ref().unwrap().split_once(',').unwrap();
            let d = [5.0, 3.5, 1.0, 0.0];
            let (dj, di): (f64, f64) = (d[j.parse::<usize>().unwrap() - 1], d[i.parse::<usize>().unwrap() - 1]);
            for &(s, t) in &p.points {
                let lhs = (s - 0.5 * (dj + di)).powi(2) - t * t;
                assert!((lhs - (0.5 * (dj - di)).powi(2)).abs() < 1e-9, "{lhs}");
                assert!(w.contains(s, t));
            }
        }
    }

    #[test]
    fn hyperbola_passes_through_its_deltas() {
        let w = Window::new(-1.0, 3.0, -2.0, 2.0, 50, 50).unwrap();
        let set = hyperbola_set(&[2.0, 1.0], 1, &w).unwrap();
        let on_axis: Vec<f64> = set
            .vertices()
            .filter(|&(_, t)| t == 0.0)
            .map(|(s, _)| s)
            .collect();
        assert!(on_axis.iter().any(|&s| (s - 2.0).abs() < 1e-15));
        assert!(on_axis.iter().any(|&s| (s - 1.0).abs() < 1e-15));
    }

    #[test]
    fn equal_deltas_give_lines() {
        let w = Window::new(-3.0, 3.0, -2.0, 2.0, 50, 50).unwrap();
        let set = hyperbola_set(&[1.0, 1.0], 1, &w).unwrap();
        for (s, t) in set.vertices() {
            assert!(((s - 1.0).abs() - t.abs()).abs() < 1e-12);
        }
        assert!(hyperbola_set(&[0.0, 1.0], 1, &w).is_err());
        assert!(hyperbola_set(&[1.0], 1, &w).is_err());
    }

    #[test]
    fn block_diagonal_matrix_gives_vertical_line() {
        let a = ComplexMatrix::from_real_rows(&[
            &[3.0, 1.0, 0.0],
            &[-1.0, 2.0, 0.0],
            &[0.0, 0.0, 0.5],
        ])
        .unwrap();
        let frame = build_frame(&a, 2, 0.0).unwrap();
        let w = auto_window(&frame, DEFAULT_MARGIN).with_grid(60, 40).unwrap();
        let set = gamma_curve(&frame, &w);
        assert!(set.warnings.contains(&CurveWarning::VanishingCoupling));
        assert_eq!(set.polylines.len(), 1);
        assert!(set.vertices().all(|(s, _)| (s - 0.5).abs() < 1e-12));
    }

    #[test]
    fn auto_window_covers_hermitian_range() {
        let h = ComplexMatrix::from_diagonal(&[4.0, 1.0, -2.0]);
        let frame = build_frame(&h, 1, 0.0).unwrap();
        let w = auto_window(&frame, DEFAULT_MARGIN);
        assert!(w.s_min <= -2.0 && w.s_max >= 4.0);
        assert!(w.t_min < 0.0 && w.t_max > 0.0);
    }
}
