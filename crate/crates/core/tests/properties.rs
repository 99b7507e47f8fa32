use proptest::prelude::*;
use specbound::envelope::frames_contain;
use specbound::{
    adjugate, build_frame, determinant, diagonal_gamma_prediction, eig_hermitian,
    envelope_frames, epsilon_thresholds, g_value, hermitian_part, largest_singular_value_sq,
    random_matrix, random_unitary, region_index, simultaneous_merge_deltas, skew_part,
    trace_implicit, Complex, ComplexMatrix, CurveKind, Window,
};

fn matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * n).prop_map(move |v| {
        let data = v.into_iter().map(|(re, im)| Complex::new(re, im)).collect();
        ComplexMatrix::from_row_major(n, n, data).unwrap()
    })
}

fn square() -> impl Strategy<Value = ComplexMatrix> {
    (2usize..7).prop_flat_map(matrix)
}

fn descending(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-5.0..5.0f64, len).prop_map(|mut v| {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn split_reassembles(a in square()) {
        let h = hermitian_part(&a).unwrap();
        let s = skew_part(&a).unwrap();
        prop_assert!((&(&h + &s) - &a).max_abs() <= 1e-15);
        prop_assert_eq!(h.hermitian_deviation(), 0.0);
        prop_assert!((&s.adjoint() + &s).max_abs() == 0.0);
    }

    #[test]
    fn adjugate_identity(a in square()) {
        let adj = adjugate(&a).unwrap();
        let det = determinant(&a).unwrap();
        let want = ComplexMatrix::identity(a.rows()).scale(det);
        prop_assert!((&(&adj * &a) - &want).max_abs() <= 1e-10);
        prop_assert!((&(&a * &adj) - &want).max_abs() <= 1e-10);
    }

    #[test]
    fn hermitian_eigen_residual(a in square()) {
        let h = hermitian_part(&a).unwrap();
        let e = eig_hermitian(&h).unwrap();
        let n = h.rows();
        let lam = ComplexMatrix::from_diagonal(&e.values);
        let scale = 1.0 + h.max_abs();
        prop_assert!((&(&h * &e.vectors) - &(&e.vectors * &lam)).max_abs() <= 1e-12 * scale);
        prop_assert!((&(&e.vectors.adjoint() * &e.vectors) - &ComplexMatrix::identity(n)).max_abs() <= 1e-12);
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn singular_value_bounds_rayleigh(
        a in square(),
        x in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 6),
    ) {
        let v = a.submatrix(0, 0, a.rows(), a.cols() - 1);
        let x: Vec<Complex> = x[..v.cols()].iter().map(|&(re, im)| Complex::new(re, im)).collect();
        let norm2: f64 = x.iter().map(|z| z.norm_sqr()).sum();
        prop_assume!(norm2 > 1e-6);
        let vx: f64 = v.mul_vec(&x).iter().map(|z| z.norm_sqr()).sum();
        prop_assert!(vx / norm2 <= largest_singular_value_sq(&v) * (1.0 + 1e-12) + 1e-14);
    }

    #[test]
    fn g_scales_homogeneously(
        a in matrix(5), k in 1usize..4, c in 0.2..4.0f64, s in -2.0..2.0f64, t in -2.0..2.0f64,
    ) {
        let f = build_frame(&a, k, 0.0).unwrap();
        let fc = build_frame(&a.scale(Complex::new(c, 0.0)), k, 0.0).unwrap();
        let g = g_value(&f, s, t).g;
        let gc = g_value(&fc, c * s, c * t).g;
        let expect = c.powi(2 * k as i32 + 1) * g;
        let mag = c.powi(2 * k as i32 + 1) * f.scale.powi(2 * k as i32 + 1);
        prop_assert!((gc - expect).abs() <= 1e-10 * mag, "{gc} vs {expect}");
    }

    #[test]
    fn g_is_unitarily_invariant(a in matrix(5), seed in 0u64..1000, k in 1usize..4,
                                s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let q = random_unitary(5, seed).unwrap();
        let b = &(&q.adjoint() * &a) * &q;
        let fa = build_frame(&a, k, 0.0).unwrap();
        let fb = build_frame(&b, k, 0.0).unwrap();
        prop_assume!(!fa.degenerate);
        let (ga, gb) = (g_value(&fa, s, t).g, g_value(&fb, s, t).g);
        prop_assert!((ga - gb).abs() <= 1e-9 * fa.scale.powi(2 * k as i32 + 1), "{ga} vs {gb}");
    }

    #[test]
    fn transpose_and_adjoint_relations(a in matrix(4), k in 1usize..4,
                                       s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let fa = build_frame(&a, k, 0.0).unwrap();
        let ft = build_frame(&a.transpose(), k, 0.0).unwrap();
        let fs = build_frame(&a.adjoint(), k, 0.0).unwrap();
        let tol = 1e-9 * fa.scale.powi(2 * k as i32 + 1);
        let g = g_value(&fa, s, t).g;
        prop_assert!((g - g_value(&ft, s, t).g).abs() <= tol);
        prop_assert!((g - g_value(&fs, s, -t).g).abs() <= tol);
    }

    #[test]
    fn theta_refinement_shrinks_envelope(seed in 0u64..500, k in 1usize..3,
                                         s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let a = random_matrix(4, true, seed).unwrap();
        let coarse: Vec<f64> = (0..6).map(|m| std::f64::consts::TAU * m as f64 / 6.0).collect();
        let fine: Vec<f64> = (0..12).map(|m| std::f64::consts::TAU * m as f64 / 12.0).collect();
        let p = Complex::new(s, t);
        let in_fine = frames_contain(&envelope_frames(&a, k, &fine).unwrap(), p);
        let in_coarse = frames_contain(&envelope_frames(&a, k, &coarse).unwrap(), p);
        prop_assert!(!in_fine || in_coarse);
    }

    #[test]
    fn thresholds_stay_below_half_gap(d in descending(6), k in 1usize..6) {
        let eps = epsilon_thresholds(&d, k).unwrap();
        prop_assert_eq!(eps.len(), k);
        for (j, e) in eps.iter().enumerate() {
            prop_assert!(*e >= 0.0 && *e <= 0.5 * (d[j] - d[k]) + 1e-12);
        }
    }

    #[test]
    fn merged_deltas_give_equal_thresholds(last in -3.0..3.0f64, gap in 0.05..3.0f64, k in 1usize..7) {
        let d = simultaneous_merge_deltas(last, last + gap, k).unwrap();
        for e in epsilon_thresholds(&d, k).unwrap() {
            prop_assert!((e - gap / 2.0).abs() <= 1e-12 * (1.0 + gap));
        }
    }

    #[test]
    fn region_index_is_the_argmax(d in descending(5), k in 1usize..5, s in -6.0..6.0f64, t in -6.0..6.0f64) {
        let entry = |j: usize| {
            let others: f64 = (0..k).filter(|&r| r != j).map(|r| (d[r] - s).powi(2) + t * t).product();
            (d[j] - s) * others
        };
        let best = (0..k).map(entry).fold(f64::NEG_INFINITY, f64::max);
        let got = region_index(&d, k, s, t).unwrap();
        prop_assert!(entry(got) >= best - 1e-9 * (1.0 + best.abs()));
    }

    /// With H diagonal and Y_k = 0, g is the cubic prediction times the
    /// product over the other diagonal entries.
    #[test]
    fn diagonal_frames_match_prediction(
        d in descending(3), tail in prop::collection::vec(0.0..1.0f64, 2),
        v in prop::collection::vec(-1.0..1.0f64, 4), y in -1.0..1.0f64,
        s in -6.0..6.0f64, t in -6.0..6.0f64,
    ) {
        prop_assume!(d[0] - d[1] > 1e-3 && d[1] - d[2] > 1e-3);
        let k = 2;
        // tail of H strictly below δ₂, the second entry equal to δ₃
        let h_tail = [d[2], d[2] - 0.5 - tail[0]];
        let mut a = ComplexMatrix::from_diagonal(&[d[0], d[1], h_tail[0], h_tail[1]]);
        for r in 0..2 {
            for c in 0..2 {
                let val = Complex::new(v[2 * r + c], 0.0);
                a[(2 + r, c)] = val;
                a[(c, 2 + r)] = -val;
            }
        }
        a[(3, 2)] = Complex::new(y, 0.0);
        a[(2, 3)] = Complex::new(-y, 0.0);
        let frame = build_frame(&a, k, 0.0).unwrap();
        let eps = frame.kappa.sqrt();
        let pred = diagonal_gamma_prediction(&frame.deltas, k, eps, s, t).unwrap();
        let j = region_index(&frame.deltas, k, s, t).unwrap();
        let other = 1 - j;
        let prod = (frame.deltas[other] - s).powi(2) + t * t;
        let g = g_value(&frame, s, t).g;
        prop_assert!((g - pred * prod).abs() <= 1e-9 * (1.0 + g.abs()), "{g} vs {}", pred * prod);
    }

    #[test]
    fn traced_circle_vertices_are_close(r in 0.3..1.3f64, cx in -0.5..0.5f64) {
        let w = Window::new(-2.0, 2.0, -2.0, 2.0, 120, 100).unwrap();
        let set = trace_implicit(&w, CurveKind::GammaMax, |s, t| r * r - (s - cx).powi(2) - t * t);
        prop_assert_eq!(set.closed_count(), 1);
        let tol = 2.0 * w.cell_width().hypot(w.cell_height());
        for (s, t) in set.vertices() {
            prop_assert!(((s - cx).hypot(t) - r).abs() <= tol);
        }
    }
}

#[test]
fn hermitian_eigen_sweep() {
    for seed in 0..10_000u64 {
        let n = 1 + (seed % 8) as usize;
        let h = hermitian_part(&random_matrix(n, seed % 3 != 0, seed).unwrap()).unwrap();
        let e = eig_hermitian(&h).unwrap();
        let lam = ComplexMatrix::from_diagonal(&e.values);
        let resid = (&(&h * &e.vectors) - &(&e.vectors * &lam)).max_abs();
        assert!(resid <= 1e-12 * (1.0 + h.max_abs()), "seed {seed}: residual {resid:e}");
    }
}
