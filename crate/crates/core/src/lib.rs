//! Eigenvalue inclusion regions for non-Hermitian matrices.
//!
//! For a square matrix `A`, rotation angle θ and block size `k`, the
//! Hermitian/skew-Hermitian splitting of e^{iθ}A yields a real polynomial
//! inequality g(s, t) ≥ 0 satisfied by every eigenvalue s + it of e^{iθ}A.
//! This crate evaluates g, traces its zero set Γ_k, intersects the rotated
//! regions into an envelope and compares against the numerical range.
//!
//! ```
//! use specbound::{build_frame, build_matrix, g_value, MatrixSpec};
//!
//! let a = build_matrix(&MatrixSpec::ATilde).unwrap();
//! let frame = build_frame(&a, 2, 0.0).unwrap();
//! assert!((frame.kappa - 20.0).abs() < 1e-12);
//! assert!(g_value(&frame, 2.0, 3.0).g.abs() < 1e-9);
//! ```

pub mod curve;
pub mod diagonal;
pub mod envelope;
pub mod error;
pub mod frame;
pub mod gallery;
pub mod inequality;
pub mod linalg;
pub mod spectrum;

pub use curve::{
    auto_window, gamma_curve, gamma_min_curve, hyperbola_set, trace_implicit, union_curve,
    CurveKind, CurveSet, CurveWarning, Polyline, Window, DEFAULT_GRID, DEFAULT_MARGIN,
};
pub use diagonal::{
    diagonal_case_report, diagonal_gamma_prediction, diagonal_meeting_points, epsilon_thresholds,
    region_index, s_pm, simultaneous_merge_deltas, DiagonalCaseReport, RegionBoundary,
};
pub use envelope::{
    envelope_frames, envelope_membership, envelope_raster, numerical_range_boundary,
    rank_numrange_raster, theta_grid, RasterKind, RegionRaster, DEFAULT_THETA_COUNT,
};
pub use error::{Error, Result};
pub use frame::{build_frame, FrameCache, SpectralFrame};
pub use gallery::{build_matrix, random_matrix, random_unitary, MatrixSpec, CATALOGUE};
pub use inequality::{
    crossing_condition, cubic_g1, explicit_g2, g_min_value, g_value, membership_tolerance,
    mk_matrix, union_poly_value, CrossingCondition, IneqValue,
};
pub use linalg::{
    adjugate, determinant, eig_hermitian, hermitian_part, lambda_extreme_hermitian,
    largest_singular_value_sq, skew_part, Complex, ComplexMatrix, Extreme,
    HermitianEigenDecomposition,
};
pub use spectrum::eigenvalues;
