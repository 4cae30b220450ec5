//! Seeded random inputs for the verification suites.
//!
//! Everything here is deterministic in the seed, so a failing check can be
//! replayed exactly. Coefficients are small rationals; matrices are real
//! symmetric with entries in `[-1, 1]`.

use crate::distributions::Distribution;
use crate::operator_model::ModelInput;
use crate::series::{all_words, Rational, Series};
use ndarray::Array2;
use num::complex::Complex64;
use num::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A dense series with numerators in `-9..=9` and denominators in
/// `1..=9`, on every word up to the degree.
pub fn random_series(rng: &mut ChaCha8Rng, k: usize, degree: usize) -> Series {
    let entries = all_words(k, degree).into_iter().map(|w| {
        let numer = rng.random_range(-9..=9i64);
        let denom = rng.random_range(1..=9i64);
        (w, Rational::new(BigInt::from(numer), BigInt::from(denom)))
    });
    Series::from_coeffs(k, degree, entries).expect("enumerated words are valid")
}

/// A distribution with random moments, same coefficient ranges as
/// [`random_series`].
pub fn random_distribution(rng: &mut ChaCha8Rng, k: usize, degree: usize) -> Distribution {
    Distribution::from_moments(random_series(rng, k, degree))
}

/// A model input with `k` random real symmetric `d x d` matrices and a
/// random real unit state.
pub fn random_hermitian_input(rng: &mut ChaCha8Rng, d: usize, k: usize) -> ModelInput {
    let mut matrices = Vec::with_capacity(k);
    for _ in 0..k {
        let raw = Array2::from_shape_fn((d, d), |_| rng.random_range(-1.0..=1.0));
        let symmetric = Array2::from_shape_fn((d, d), |(i, j)| {
            Complex64::new((raw[[i, j]] + raw[[j, i]]) / 2.0, 0.0)
        });
        matrices.push(symmetric);
    }
    let state = loop {
        let raw: Vec<f64> = (0..d).map(|_| rng.random_range(-1.0..=1.0)).collect();
        let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.1 {
            break raw
                .into_iter()
                .map(|x| Complex64::new(x / norm, 0.0))
                .collect::<Vec<_>>();
        }
    };
    ModelInput::new(matrices, state).expect("construction is symmetric and normalized")
}
