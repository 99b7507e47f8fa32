//! Closed forms for matrices whose frame has Y_k = 0 and U = I, where M_k is
//! diagonal and Γ_k is a chain of cubics glued along hyperbolas.

use crate::error::{Error, Result};

/// The hyperbola (s − center)² − t² = semi_axis² separating the regions where
/// diagonal entries `j` and `i` (0-based, j < i) of M_k dominate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionBoundary {
    pub j: usize,
    pub i: usize,
    pub center: f64,
    pub semi_axis: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalCaseReport {
    pub deltas: Vec<f64>,
    pub epsilon_thresholds: Vec<f64>,
    /// `(s₋, s₊)` for each δ_j, j = 1…k, at the report's ε.
    pub s_pm: Vec<Option<(f64, f64)>>,
    pub region_boundaries: Vec<RegionBoundary>,
}

fn check_deltas(deltas: &[f64], needed: usize) -> Result<()> {
    if deltas.len() < needed {
        return Err(Error::Parameter(format!(
            "need at least {needed} deltas, got {}",
            deltas.len()
        )));
    }
    if deltas.iter().any(|d| !d.is_finite()) || deltas.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parameter("deltas must be finite and non-increasing".into()));
    }
    Ok(())
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Parameter("k must be positive".into()));
    }
    Ok(())
}

/// ε₁…ε_k: the coupling strengths at which loop j merges with its neighbor.
pub fn epsilon_thresholds(deltas: &[f64], k: usize) -> Result<Vec<f64>> {
    check_k(k)?;
    check_deltas(deltas, k + 1)?;
    let last = deltas[k];
    let mut eps: Vec<f64> = (0..k - 1)
        .map(|j| ((deltas[j + 1] - last) * (deltas[j] - deltas[j + 1])).max(0.0).sqrt())
        .collect();
    eps.push(0.5 * (deltas[k - 1] - last));
    Ok(eps)
}

/// Real-axis crossings of the cubic through δ_j, or `None` when ε exceeds
/// (δ_j − δ_last)/2.
pub fn s_pm(delta_j: f64, delta_last: f64, eps: f64) -> Option<(f64, f64)> {
    let half = 0.5 * (delta_j - delta_last);
    let disc = half * half - eps * eps;
    if disc < 0.0 {
        return None;
    }
    let mid = 0.5 * (delta_j + delta_last);
    let root = disc.sqrt();
    Some((mid - root, mid + root))
}

/// 0-based index of the diagonal entry of M_k that is its largest eigenvalue
/// at `s + it`. Entry j beats entry i > j iff (δ_j − s)(δ_i − s) ≤ t².
pub fn region_index(deltas: &[f64], k: usize, s: f64, t: f64) -> Result<usize> {
    check_k(k)?;
    check_deltas(deltas, k)?;
    let t2 = t * t;
    let mut best = 0;
    for i in 1..k {
        if (deltas[best] - s) * (deltas[i] - s) > t2 {
            best = i;
        }
    }
    Ok(best)
}

/// δ₁…δ_{k+1} with every ε_j equal to (δ_k − δ_{k+1})/2.
pub fn simultaneous_merge_deltas(delta_last: f64, delta_k: f64, k: usize) -> Result<Vec<f64>> {
    check_k(k)?;
    if !delta_k.is_finite() || !delta_last.is_finite() || delta_k <= delta_last {
        return Err(Error::Parameter(format!(
            "need delta_k > delta_last, got {delta_k} and {delta_last}"
        )));
    }
    let gap2 = (delta_k - delta_last).powi(2);
    let mut out = vec![0.0; k + 1];
    out[k] = delta_last;
    out[k - 1] = delta_k;
    for j in (1..k).rev() {
        out[j - 1] = out[j] + gap2 / (4.0 * (out[j] - delta_last));
    }
    Ok(out)
}

/// ε²(δ_j − s) − [(δ_j − s)² + t²](s − δ_{k+1}) with j = region_index. Has the
/// sign of g wherever the products over the other deltas are nonzero.
pub fn diagonal_gamma_prediction(deltas: &[f64], k: usize, eps: f64, s: f64, t: f64) -> Result<f64> {
    check_deltas(deltas, k + 1)?;
    let j = region_index(deltas, k, s, t)?;
    let dj = deltas[j] - s;
    Ok(eps * eps * dj - (dj * dj + t * t) * (s - deltas[k]))
}

/// Points where Γ₂ and γ₂ meet for k = 2: where the two diagonal entries of
/// M₂ coincide on the curve. These solve
/// 2s² − (δ₁ + δ₂ + 2δ₃)s + (δ₁ + δ₂)δ₃ + ε² = 0 with t² = (δ₁ − s)(δ₂ − s).
pub fn diagonal_meeting_points(deltas: &[f64], eps: f64) -> Result<Vec<(f64, f64)>> {
    check_deltas(deltas, 3)?;
    let (d1, d2, d3) = (deltas[0], deltas[1], deltas[2]);
    let b = d1 + d2 + 2.0 * d3;
    let c = (d1 + d2) * d3 + eps * eps;
    let disc = b * b - 8.0 * c;
    if disc < 0.0 {
        return Ok(Vec::new());
    }
    let root = disc.sqrt();
    let mut points = Vec::new();
    for s in [(b - root) / 4.0, (b + root) / 4.0] {
        let t2 = (d1 - s) * (d2 - s);
        if t2 >= 0.0 {
            let t = t2.sqrt();
            points.push((s, t));
            if t > 0.0 {
                points.push((s, -t));
            }
        }
    }
    Ok(points)
}

pub fn diagonal_case_report(deltas: &[f64], k: usize, eps: f64) -> Result<DiagonalCaseReport> {
    let epsilon_thresholds = epsilon_thresholds(deltas, k)?;
    let last = deltas[k];
    let s_pm = deltas[..k].iter().map(|&d| s_pm(d, last, eps)).collect();
    let mut region_boundaries = Vec::new();
    for j in 0..=k {
        for i in j + 1..=k {
            region_boundaries.push(RegionBoundary {
                j,
                i,
                center: 0.5 * (deltas[j] + deltas[i]),
                semi_axis: 0.5 * (deltas[j] - deltas[i]),
            });
        }
    }
    Ok(DiagonalCaseReport {
        deltas: deltas[..=k].to_vec(),
        epsilon_thresholds,
        s_pm,
        region_boundaries,
    })
}
