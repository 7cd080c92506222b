//! Seeded random rationals, cochains and subspaces for checks and tests.

use crate::exactlin::{Matrix, Rational, Subspace};
use crate::multilin::{vec_space, Cochain, CochainSpace};
use num_traits::Zero;
use rand::Rng;
pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng as SampleRng;

pub fn rng(seed: u64) -> SampleRng {
    SampleRng::seed_from_u64(seed)
}

/// A rational with numerator in `-3..=3` and denominator in `1..=2`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=2).into())
}

/// A nonzero rational drawn like [`rational`].
pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn vector<R: Rng>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rational(rng)).collect()
}

/// Each coefficient is nonzero with probability `density`.
pub fn cochain<R: Rng>(rng: &mut R, space: CochainSpace, density: f64) -> Cochain {
    let data = (0..space.dim())
        .map(|_| if rng.gen_bool(density) { nonzero_rational(rng) } else { Rational::zero() })
        .collect();
    Cochain::from_data(space, data)
}

/// A random skew bilinear map on `Q^n`.
pub fn skew_bracket<R: Rng>(rng: &mut R, n: usize) -> Cochain {
    cochain(rng, vec_space(n, 2), 0.6)
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_vec(rows, cols, (0..rows * cols).map(|_| rational(rng)).collect())
}

pub fn invertible_matrix<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, n, n);
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// A random subspace of `Q^n` of dimension exactly `k`.
pub fn subspace<R: Rng>(rng: &mut R, n: usize, k: usize) -> Subspace {
    loop {
        let m = matrix(rng, n, k);
        if m.rank() == k {
            return Subspace::span(&m);
        }
    }
}
