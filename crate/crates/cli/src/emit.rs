//! SVG, CSV and PGM writers.

use std::fmt::Write;

use specbound::{Complex, CurveKind, CurveSet, RegionRaster, Window};

/// Everything drawn in one SVG, in (s, t) coordinates.
#[derive(Clone, Debug)]
pub struct Figure {
    pub window: Window,
    pub title: String,
    pub raster: Option<RegionRaster>,
    pub curves: Vec<CurveSet>,
    pub delta_lines: Vec<f64>,
    pub eigenvalues: Vec<Complex>,
}

const WIDTH: f64 = 800.0;
const BOX: f64 = 6.0;

fn canvas_height(w: &Window) -> f64 {
    let aspect = (w.t_max - w.t_min) / (w.s_max - w.s_min);
    (WIDTH * aspect).clamp(200.0, 1600.0).round()
}

struct Mapping {
    window: Window,
    height: f64,
}

impl Mapping {
    fn x(&self, s: f64) -> f64 {
        (s - self.window.s_min) / (self.window.s_max - self.window.s_min) * WIDTH
    }

    fn y(&self, t: f64) -> f64 {
        (self.window.t_max - t) / (self.window.t_max - self.window.t_min) * self.height
    }
}

fn style(kind: CurveKind) -> &'static str {
    match kind {
        CurveKind::GammaMax => r##"stroke="#000000" stroke-width="1.2""##,
        CurveKind::GammaMin => r##"stroke="#1f5fbf" stroke-width="1" stroke-dasharray="5 3""##,
        CurveKind::Union => r##"stroke="#555555" stroke-width="1""##,
        CurveKind::Hyperbola => r##"stroke="#2a8a2a" stroke-width="0.8" stroke-dasharray="2 2""##,
        CurveKind::NumRange => r##"stroke="#b22222" stroke-width="1.2""##,
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn render_svg(fig: &Figure) -> String {
    let w = fig.window;
    let height = canvas_height(&w);
    let map = Mapping { window: w, height };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" data-s-min="{}" data-s-max="{}" data-t-min="{}" data-t-max="{}" data-grid="{}x{}">"#,
        w.s_min, w.s_max, w.t_min, w.t_max, w.cols, w.rows
    );
    let _ = writeln!(out, "<title>{}</title>", escape(&fig.title));
    let _ = writeln!(
        out,
        r#"<defs><clipPath id="plot"><rect x="0" y="0" width="{WIDTH}" height="{height}"/></clipPath></defs>"#
    );
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{WIDTH}" height="{height}" fill="#ffffff"/>"##);
    let _ = writeln!(out, r#"<g clip-path="url(#plot)">"#);

    if let Some(r) = &fig.raster {
        let rw = r.window;
        let cell_w = WIDTH / rw.cols as f64;
        let cell_h = height / rw.rows as f64;
        let _ = writeln!(
            out,
            r##"<g class="raster" data-kind="{}" data-theta-count="{}" fill="#c6d9f1">"##,
            r.kind.as_str(),
            r.theta_count
        );
        for row in 0..rw.rows {
            let j = rw.rows - 1 - row;
            let mut i = 0;
            while i < rw.cols {
                if !r.get(i, j) {
                    i += 1;
                    continue;
                }
                let start = i;
                while i < rw.cols && r.get(i, j) {
                    i += 1;
                }
                let _ = writeln!(
                    out,
                    r#"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#,
                    start as f64 * cell_w,
                    row as f64 * cell_h,
                    (i - start) as f64 * cell_w,
                    cell_h
                );
            }
        }
        out.push_str("</g>\n");
    }

    // real axis
    if w.t_min < 0.0 && w.t_max > 0.0 {
        let _ = writeln!(
            out,
            r##"<line class="axis" x1="0" y1="{y:.3}" x2="{WIDTH}" y2="{y:.3}" stroke="#bbbbbb" stroke-width="0.5"/>"##,
            y = map.y(0.0)
        );
    }

    for &d in &fig.delta_lines {
        if d < w.s_min || d > w.s_max {
            continue;
        }
        let x = map.x(d);
        let _ = writeln!(
            out,
            r##"<line class="delta" data-delta="{d}" x1="{x:.3}" y1="0" x2="{x:.3}" y2="{height}" stroke="#888888" stroke-width="0.8" stroke-dasharray="6 4"/>"##
        );
    }

    for (id, set) in fig.curves.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<g class="{}" data-set="{id}" fill="none" {}>"#,
            set.kind.as_str(),
            style(set.kind)
        );
        for poly in &set.polylines {
            if poly.points.len() < 2 {
                continue;
            }
            let mut d = String::new();
            for (m, &(s, t)) in poly.points.iter().enumerate() {
                let _ = write!(d, "{}{:.3},{:.3}", if m == 0 { "M" } else { " L" }, map.x(s), map.y(t));
            }
            if poly.closed {
                d.push_str(" Z");
            }
            match &poly.label {
                Some(label) => {
                    let _ = writeln!(out, r#"<path data-pair="{}" d="{d}"/>"#, escape(label));
                }
                None => {
                    let _ = writeln!(out, r#"<path d="{d}"/>"#);
                }
            }
        }
        out.push_str("</g>\n");
    }

    if !fig.eigenvalues.is_empty() {
        out.push_str(r##"<g class="eigenvalues" fill="none" stroke="#d40000" stroke-width="1">"##);
        out.push('\n');
        for z in &fig.eigenvalues {
            let _ = writeln!(
                out,
                r#"<rect data-re="{}" data-im="{}" x="{:.3}" y="{:.3}" width="{BOX}" height="{BOX}"/>"#,
                z.re,
                z.im,
                map.x(z.re) - BOX / 2.0,
                map.y(z.im) - BOX / 2.0
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// `curve_id,kind,s,t`, one row per vertex. Curve ids run over all sets in
/// order; closed polylines do not repeat their first vertex.
pub fn curves_csv(sets: &[CurveSet]) -> String {
    let mut out = String::from("curve_id,kind,s,t\n");
    let mut id = 0;
    for set in sets {
        for poly in &set.polylines {
            for &(s, t) in &poly.points {
                let _ = writeln!(out, "{id},{},{s},{t}", set.kind.as_str());
            }
            id += 1;
        }
    }
    out
}

/// Binary PGM with the first image row at `t_max`.
pub fn raster_pgm(r: &RegionRaster) -> Vec<u8> {
    let (cols, rows) = (r.window.cols, r.window.rows);
    let mut out = format!("P5\n{cols} {rows}\n255\n").into_bytes();
    out.reserve(cols * rows);
    for j in (0..rows).rev() {
        out.extend((0..cols).map(|i| if r.get(i, j) { 255u8 } else { 0 }));
    }
    out
}
