//! Fixtures shared by the benchmarks.

use specbound::{build_frame, random_matrix, ComplexMatrix, SpectralFrame};

/// Seeded random complex matrix of order `n`.
pub fn fixture(n: usize) -> ComplexMatrix {
    random_matrix(n, true, 42).expect("valid order")
}

pub fn fixture_frame(n: usize, k: usize) -> SpectralFrame {
    build_frame(&fixture(n), k, 0.3).expect("valid k")
}
