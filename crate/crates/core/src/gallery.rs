//! Named test matrices and seeded random matrices.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::linalg::{Complex, ComplexMatrix};

/// Largest order accepted for `frank` and the random generators.
pub const MAX_ORDER: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MatrixSpec {
    /// 4×4 Toeplitz matrix with an `i` in the top-right corner.
    ToeplitzEq1,
    ATilde,
    AHat { eps: f64 },
    PairA { eps: f64 },
    PairB { eps: f64 },
    MatrixC { eps: f64 },
    MatrixF { eps1: f64, eps2: f64 },
    MatrixA1,
    Frank { n: usize },
    /// Entries uniform in [−1, 1].
    RandomReal { n: usize, seed: Option<u64> },
    /// Real and imaginary parts uniform in [−1, 1].
    RandomComplex { n: usize, seed: Option<u64> },
}

/// Name, parameter list and defaults of every gallery entry.
pub const CATALOGUE: &[(&str, &str)] = &[
    ("toeplitz_eq1", "(none) 4x4 Toeplitz"),
    ("a_tilde", "(none) 3x3 real"),
    ("a_hat", "eps=1.01"),
    ("pair_A", "eps=0.45"),
    ("pair_B", "eps=0.35"),
    ("matrix_C", "eps=0.5"),
    ("matrix_F", "eps1=2.52,eps2=0.66"),
    ("matrix_A1", "(none) 4x4 complex"),
    ("frank", "n=11"),
    ("random_real", "n=5[,seed]"),
    ("random_complex", "n=5[,seed]"),
];

impl MatrixSpec {
    pub fn name(&self) -> &'static str {
        match self {
            MatrixSpec::ToeplitzEq1 => "toeplitz_eq1",
            MatrixSpec::ATilde => "a_tilde",
            MatrixSpec::AHat { .. } => "a_hat",
            MatrixSpec::PairA { .. } => "pair_A",
            MatrixSpec::PairB { .. } => "pair_B",
            MatrixSpec::MatrixC { .. } => "matrix_C",
            MatrixSpec::MatrixF { .. } => "matrix_F",
            MatrixSpec::MatrixA1 => "matrix_A1",
            MatrixSpec::Frank { .. } => "frank",
            MatrixSpec::RandomReal { .. } => "random_real",
            MatrixSpec::RandomComplex { .. } => "random_complex",
        }
    }

    /// Fills in `seed` for random specs that were given none.
    pub fn with_default_seed(self, seed: u64) -> Self {
        match self {
            MatrixSpec::RandomReal { n, seed: None } => MatrixSpec::RandomReal { n, seed: Some(seed) },
            MatrixSpec::RandomComplex { n, seed: None } => {
                MatrixSpec::RandomComplex { n, seed: Some(seed) }
            }
            other => other,
        }
    }
}

impl fmt::Display for MatrixSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match *self {
            MatrixSpec::AHat { eps }
            | MatrixSpec::PairA { eps }
            | MatrixSpec::PairB { eps }
            | MatrixSpec::MatrixC { eps } => write!(f, ":{eps}"),
            MatrixSpec::MatrixF { eps1, eps2 } => write!(f, ":{eps1},{eps2}"),
            MatrixSpec::Frank { n } => write!(f, ":{n}"),
            MatrixSpec::RandomReal { n, seed } | MatrixSpec::RandomComplex { n, seed } => {
                write!(f, ":{n}")?;
                match seed {
                    Some(s) => write!(f, ",{s}"),
                    None => Ok(()),
                }
            }
            _ => Ok(()),
        }
    }
}

impl FromStr for MatrixSpec {
    type Err = Error;

    /// Parses `name` or `name:p1[,p2]`.
    fn from_str(text: &str) -> Result<Self> {
        let (name, params) = match text.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p)),
            None => (text.trim(), None),
        };
        let params: Vec<&str> = params
            .map(|p| p.split(',').map(str::trim).collect())
            .unwrap_or_default();
        let malformed = |what: &str| Error::Parameter(format!("{name}: {what}"));
        let real = |idx: usize, default: f64| -> Result<f64> {
            match params.get(idx) {
                None => Ok(default),
                Some(p) => p
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| malformed(&format!("bad parameter `{p}`"))),
            }
        };
        let count = |idx: usize, default: usize| -> Result<usize> {
            match params.get(idx) {
                None => Ok(default),
                Some(p) => p.parse::<usize>().map_err(|_| malformed(&format!("bad order `{p}`"))),
            }
        };
        let seed = |idx: usize| -> Result<Option<u64>> {
            params
                .get(idx)
                .map(|p| p.parse::<u64>().map_err(|_| malformed(&format!("bad seed `{p}`"))))
                .transpose()
        };
        let max_params = |m: usize| -> Result<()> {
            if params.len() > m {
                Err(malformed(&format!("takes at most {m} parameters")))
            } else {
                Ok(())
            }
        };

        let spec = match name {
            "toeplitz_eq1" => {
                max_params(0)?;
                MatrixSpec::ToeplitzEq1
            }
            "a_tilde" => {
                max_params(0)?;
                MatrixSpec::ATilde
            }
            "a_hat" => {
                max_params(1)?;
                MatrixSpec::AHat { eps: real(0, 1.01)? }
            }
            "pair_A" => {
                max_params(1)?;
                MatrixSpec::PairA { eps: real(0, 0.45)? }
            }
            "pair_B" => {
                max_params(1)?;
                MatrixSpec::PairB { eps: real(0, 0.35)? }
            }
            "matrix_C" => {
                max_params(1)?;
                MatrixSpec::MatrixC { eps: real(0, 0.5)? }
            }
            "matrix_F" => {
                max_params(2)?;
                MatrixSpec::MatrixF {
                    eps1: real(0, 2.52)?,
                    eps2: real(1, 0.66)?,
                }
            }
            "matrix_A1" => {
                max_params(0)?;
                MatrixSpec::MatrixA1
            }
            "frank" => {
                max_params(1)?;
                MatrixSpec::Frank { n: count(0, 11)? }
            }
            "random_real" => {
                max_params(2)?;
                MatrixSpec::RandomReal {
                    n: count(0, 5)?,
                    seed: seed(1)?,
                }
            }
            "random_complex" => {
                max_params(2)?;
                MatrixSpec::RandomComplex {
                    n: count(0, 5)?,
                    seed: seed(1)?,
                }
            }
            _ => return Err(Error::UnknownMatrix(name.to_string())),
        };
        Ok(spec)
    }
}

pub fn build_matrix(spec: &MatrixSpec) -> Result<ComplexMatrix> {
    match *spec {
        MatrixSpec::ToeplitzEq1 => {
            let mut a = ComplexMatrix::from_real_rows(&[
                &[1.0, 1.0, 0.0, 0.0],
                &[2.0, 1.0, 1.0, 0.0],
                &[3.0, 2.0, 1.0, 1.0],
                &[4.0, 3.0, 2.0, 1.0],
            ])?;
            a[(0, 3)] = Complex::new(0.0, 1.0);
            Ok(a)
        }
        MatrixSpec::ATilde => {
            ComplexMatrix::from_real_rows(&[&[3.0, 0.0, -2.0], &[0.0, 1.0, -4.0], &[2.0, 4.0, 0.0]])
        }
        MatrixSpec::AHat { eps } => ComplexMatrix::from_real_rows(&[
            &[2.0, 0.0, 0.0, -eps],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, -1.0],
            &[eps, 0.0, 1.0, 0.0],
        ]),
        MatrixSpec::PairA { eps } => pair(1.36, eps),
        MatrixSpec::PairB { eps } => pair(1.16, eps),
        MatrixSpec::MatrixC { eps } => {
            let c = eps / std::f64::consts::SQRT_2;
            ComplexMatrix::from_real_rows(&[
                &[941.0 / 580.0, 0.0, 0.0, 0.0, 0.0, -c],
                &[0.0, 29.0 / 20.0, 0.0, 0.0, -c, 0.0],
                &[0.0, 0.0, 5.0 / 4.0, 0.0, 0.0, -c],
                &[0.0, 0.0, 0.0, 1.0, -c, 0.0],
                &[0.0, c, 0.0, c, 0.0, -0.25],
                &[c, 0.0, c, 0.0, 0.25, 0.0],
            ])
        }
        MatrixSpec::MatrixF { eps1, eps2 } => ComplexMatrix::from_real_rows(&[
            &[5.0, -eps2, 0.0, 0.0],
            &[eps2, 5.0, -eps1, 0.0],
            &[0.0, eps1, 0.0, -1.0],
            &[0.0, 0.0, 1.0, 0.0],
        ]),
        MatrixSpec::MatrixA1 => {
            let c = Complex::new;
            ComplexMatrix::from_rows(&[
                vec![c(14.0, 19.0), c(-4.0, -1.0), c(-55.0, -13.0), c(-32.0, 13.0)],
                vec![c(27.0, 2.0), c(14.0, -25.0), c(64.0, 0.0), c(72.0, 0.0)],
                vec![c(54.0, 1.0), c(47.0, -3.0), c(14.0, 44.0), c(-32.0, -42.0)],
                vec![c(76.0, 0.0), c(73.0, 0.0), c(4.0, -2.0), c(-11.0, 24.0)],
            ])
        }
        MatrixSpec::Frank { n } => {
            check_order(n)?;
            Ok(ComplexMatrix::from_fn(n, n, |i, j| {
                // 1-based: 0 below the subdiagonal, n+1−i on it, n+1−j above
                let (i, j) = (i + 1, j + 1);
                let v = if j + 2 <= i {
                    0
                } else if j + 1 == i {
                    n + 1 - i
                } else {
                    n + 1 - j
                };
                Complex::new(v as f64, 0.0)
            }))
        }
        MatrixSpec::RandomReal { n, seed } => random_matrix(n, false, seed.unwrap_or(0)),
        MatrixSpec::RandomComplex { n, seed } => random_matrix(n, true, seed.unwrap_or(0)),
    }
}

fn pair(corner: f64, eps: f64) -> Result<ComplexMatrix> {
    ComplexMatrix::from_real_rows(&[
        &[corner, 0.0, 0.0, -eps / 2.0],
        &[0.0, 1.0, -eps, 0.0],
        &[0.0, eps, 0.0, -0.25],
        &[eps / 2.0, 0.0, 0.25, 0.0],
    ])
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Parameter(format!("order must lie in [1, {MAX_ORDER}], got {n}")));
    }
    Ok(())
}

/// Seeded random matrix from a SplitMix64 stream, filled row-major. Complex
/// entries draw the real part before the imaginary part.
pub fn random_matrix(n: usize, complex: bool, seed: u64) -> Result<ComplexMatrix> {
    check_order(n)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut data = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        let re = rng.random_range(-1.0..=1.0);
        let im = if complex { rng.random_range(-1.0..=1.0) } else { 0.0 };
        data.push(Complex::new(re, im));
    }
    ComplexMatrix::from_row_major(n, n, data)
}

/// Random unitary matrix: Gram–Schmidt on a seeded random complex matrix.
pub fn random_unitary(n: usize, seed: u64) -> Result<ComplexMatrix> {
    let g = random_matrix(n, true, seed)?;
    let mut q = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut v = g.column(j);
        for _ in 0..2 {
            for p in 0..j {
                let proj: Complex = (0..n).map(|r| q[(r, p)].conj() * v[r]).sum();
                for (r, x) in v.iter_mut().enumerate() {
                    *x -= proj * q[(r, p)];
                }
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm <= 1e-12 {
            return Err(Error::Parameter("random unitary: rank-deficient draw".into()));
        }
        for r in 0..n {
            q[(r, j)] = v[r] / norm;
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant, eig_hermitian, hermitian_part};

    #[test]
    fn parse_and_display_roundtrip() {
        for text in [
            "toeplitz_eq1",
            "a_hat:1.01",
            "pair_A:0.55",
            "matrix_F:2.48,1",
            "frank:7",
            "random_complex:5,42",
            "random_real:3",
        ] {
            let spec: MatrixSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("a_hat".parse::<MatrixSpec>().unwrap(), MatrixSpec::AHat { eps: 1.01 });
        assert!(matches!("nope".parse::<MatrixSpec>(), Err(Error::UnknownMatrix(_))));
        assert!("a_hat:x".parse::<MatrixSpec>().is_err());
        assert!("a_hat:1,2".parse::<MatrixSpec>().is_err());
        assert!("a_hat:nan".parse::<MatrixSpec>().is_err());
        assert!("frank:-1".parse::<MatrixSpec>().is_err());
        assert_eq!(CATALOGUE.len(), 11);
        for (name, _) in CATALOGUE {
            assert_eq!(name.parse::<MatrixSpec>().unwrap().name(), *name);
        }
    }

    #[test]
    fn toeplitz_top_right_is_i() {
        let a = build_matrix(&MatrixSpec::ToeplitzEq1).unwrap();
        assert_eq!(a[(0, 3)], Complex::new(0.0, 1.0));
        assert_eq!(a[(3, 0)], Complex::new(4.0, 0.0));
        assert_eq!(a[(2, 2)], Complex::new(1.0, 0.0));
    }

    #[test]
    fn hermitian_parts_of_named_matrices() {
        let cases: [(MatrixSpec, &[f64]); 4] = [
            (MatrixSpec::ATilde, &[3.0, 1.0, 0.0]),
            (MatrixSpec::AHat { eps: 1.01 }, &[2.0, 1.0, 0.0, 0.0]),
            (MatrixSpec::PairA { eps: 0.5 }, &[1.36, 1.0, 0.0, 0.0]),
            (MatrixSpec::MatrixC { eps: 0.5 }, &[941.0 / 580.0, 29.0 / 20.0, 1.25, 1.0, 0.0, 0.0]),
        ];
        for (spec, want) in cases {
            let a = build_matrix(&spec).unwrap();
            let d = eig_hermitian(&hermitian_part(&a).unwrap()).unwrap().values;
            for (x, y) in d.iter().zip(want) {
                assert!((x - y).abs() < 1e-12, "{spec}: {d:?}");
            }
        }
    }

    #[test]
    fn frank_structure_and_determinant() {
        let a = build_matrix(&MatrixSpec::Frank { n: 4 }).unwrap();
        let want = [[4.0, 3.0, 2.0, 1.0], [3.0, 3.0, 2.0, 1.0], [0.0, 2.0, 2.0, 1.0], [0.0, 0.0, 1.0, 1.0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a[(i, j)].re, want[i][j]);
            }
        }
        for n in 1..=11 {
            let d = determinant(&build_matrix(&MatrixSpec::Frank { n }).unwrap()).unwrap();
            assert!((d - Complex::new(1.0, 0.0)).norm() < 1e-6, "n={n}: {d}");
        }
    }

    #[test]
    fn random_is_seeded_and_bounded() {
        let a = random_matrix(5, true, 7).unwrap();
        assert_eq!(a, random_matrix(5, true, 7).unwrap());
        assert_ne!(a, random_matrix(5, true, 8).unwrap());
        assert!(a.as_slice().iter().all(|z| z.re.abs() <= 1.0 && z.im.abs() <= 1.0));
        assert!(random_matrix(4, false, 3).unwrap().is_real());
        assert!(random_matrix(0, false, 3).is_err());
        let spec = MatrixSpec::RandomReal { n: 3, seed: None }.with_default_seed(9);
        assert_eq!(spec, MatrixSpec::RandomReal { n: 3, seed: Some(9) });
    }

    #[test]
    fn random_unitary_is_unitary() {
        let q = random_unitary(6, 11).unwrap();
        let e = &(&q.adjoint() * &q) - &ComplexMatrix::identity(6);
        assert!(e.max_abs() < 1e-13);
    }
}
