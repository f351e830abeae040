//! Random SL(2,C) representations and the brute-force numeric oracles.

use std::collections::HashMap;
use std::ops::Mul;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{TracePoly, TraceVar};
use crate::reduce::reduce_trace;
use crate::word::Word;

/// Determinant tolerance accepted by [`Representation::new`].
pub const DET_TOLERANCE: f64 = 1e-9;

/// Residual threshold for [`oracle_reduce`].
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// Entries `a, b, c` are resampled while `|a|` is below this bound.
pub const MIN_PIVOT: f64 = 0.1;

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Mat2::new(one, zero, zero, one)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Inverse of a determinant-one matrix.
    pub fn sl2_inverse(&self) -> Self {
        Mat2::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        [self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// One SL(2,C) matrix per free generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    matrices: Vec<Mat2>,
}

impl Representation {
    pub fn new(matrices: Vec<Mat2>) -> Result<Self> {
        for (i, m) in matrices.iter().enumerate() {
            let det = m.det();
            if (det - 1.0).norm() > DET_TOLERANCE {
                return Err(Error::NotUnimodular { index: i + 1, det: det.to_string() });
            }
        }
        Ok(Representation { matrices })
    }

    pub fn identity(rank: usize) -> Self {
        Representation { matrices: vec![Mat2::identity(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Mat2] {
        &self.matrices
    }

    /// Deterministic sample for `seed`; equivalent to stream 0.
    pub fn sample(rank: usize, seed: u64) -> Self {
        Self::sample_stream(rank, seed, 0)
    }

    /// Independent samples are indexed by `(seed, stream)`.
    pub fn sample_stream(rank: usize, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self::sample_with(rank, &mut rng)
    }

    pub fn sample_with<R: Rng>(rank: usize, rng: &mut R) -> Self {
        assert!(rank >= 1, "rank must be positive");
        let box_point = |rng: &mut R| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        let matrices = (0..rank)
            .map(|_| loop {
                let a = box_point(rng);
                let b = box_point(rng);
                let c = box_point(rng);
                if a.norm() < MIN_PIVOT {
                    continue;
                }
                let d = (Complex64::new(1.0, 0.0) + b * c) / a;
                break Mat2::new(a, b, c, d);
            })
            .collect();
        Representation { matrices }
    }

    /// Ordered product of the generator matrices along `w`.
    pub fn eval_word(&self, w: &Word) -> Mat2 {
        w.letters().iter().fold(Mat2::identity(), |acc, l| {
            let m = self.matrices[l.index() as usize - 1];
            acc * if l.is_inverse() { m.sl2_inverse() } else { m }
        })
    }

    pub fn trace(&self, w: &Word) -> Complex64 {
        self.eval_word(w).trace()
    }

    /// Value of every canonical coordinate `t[I]` at this representation.
    pub fn coordinate_values(&self) -> HashMap<TraceVar, Complex64> {
        TraceVar::basis(self.rank())
            .into_iter()
            .map(|v| {
                let tr = self.trace(&v.word());
                (v, tr)
            })
            .collect()
    }

    /// Representation of the target group pulled back along generator images:
    /// generator `i` goes to the matrix of `images[i-1]`.
    pub fn compose(&self, images: &[Word]) -> Representation {
        Representation { matrices: images.iter().map(|w| self.eval_word(w)).collect() }
    }
}

/// Relative difference with the scale floored at `floor`.
pub fn relative_residual(x: Complex64, y: Complex64, scale: f64, floor: f64) -> f64 {
    (x - y).norm() / scale.max(floor)
}

/// Outcome of comparing an exact reduction against direct matrix products.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub word: Word,
    pub polynomial: TracePoly,
    pub samples: usize,
    pub max_residual: f64,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.max_residual < ORACLE_TOLERANCE
    }
}

/// Residual of `|tr ρ(w) − P(coordinates of ρ)|` relative to the size of the
/// terms of `P`, maximised over random representations.
pub fn polynomial_residual(w: &Word, poly: &TracePoly, rank: usize, samples: usize, seed: u64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for s in 0..samples {
        let rep = Representation::sample_stream(rank, seed, s as u64);
        let direct = rep.trace(w);
        let vals = rep.coordinate_values();
        let via = poly.eval_map(&vals)?;
        let scale = poly.eval_magnitude(&vals)?.max(direct.norm());
        worst = worst.max(relative_residual(direct, via, scale, 1.0));
    }
    Ok(worst)
}

pub fn oracle_reduce(w: &Word, samples: usize, seed: u64) -> Result<OracleReport> {
    let rank = (w.max_index() as usize).max(1);
    let polynomial = reduce_trace(w)?;
    let max_residual = polynomial_residual(w, &polynomial, rank, samples, seed)?;
    Ok(OracleReport { word: w.clone(), polynomial, samples, max_residual })
}
