//! Seeded samplers for separable two-qubit states.
//!
//! Every sampler builds a fresh [`ChaCha8Rng`] from its seed, so outputs are
//! a pure function of the arguments and may be drawn concurrently.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::bell::bell_diagonal;
use super::ket::Ket;
use super::mixture::{from_product_mixture, ProductMixtureSpec, ProductTerm};
use crate::matcore::{c, DensityMatrix};

/// Recorded in sweep output so runs can be reproduced elsewhere.
pub const PRNG_NAME: &str = "ChaCha8Rng (rand_chacha 0.3, seed_from_u64)";

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point on the probability simplex with `n` vertices: normalized
/// `-ln u` for uniform `u` in `(0, 1]`.
pub(crate) fn flat_simplex<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    if total > 0.0 {
        raw.into_iter().map(|x| x / total).collect()
    } else {
        vec![1.0 / n as f64; n]
    }
}

/// Haar-random qubit ket: a normalized pair of standard complex Gaussians.
pub(crate) fn haar_qubit<R: Rng>(rng: &mut R) -> Ket {
    loop {
        let mut g = || rng.sample::<f64, _>(StandardNormal);
        let amps = vec![c(g(), g()), c(g(), g())];
        if let Ok(ket) = Ket::normalized(amps) {
            return ket;
        }
    }
}

/// Random separable two-qubit state with `k` product terms.
///
/// Draw order: `k` simplex weights, then for each term the A ket followed
/// by the B ket.
///
/// # Panics
///
/// If `k == 0`.
pub fn random_separable(seed: u64, k: usize) -> (DensityMatrix, ProductMixtureSpec) {
    assert!(k >= 1, "random_separable needs at least one term");
    let mut rng = rng_from_seed(seed);
    let weights = flat_simplex(&mut rng, k);
    let terms = weights
        .into_iter()
        .map(|p| {
            let a = haar_qubit(&mut rng);
            let b = haar_qubit(&mut rng);
            ProductTerm { p, a, b }
        })
        .collect();
    let spec = ProductMixtureSpec { terms };
    let rho = from_product_mixture(&spec).expect("sampled product mixture is a valid state");
    (rho, spec)
}

/// Random PPT Bell-diagonal state: flat simplex weights conditioned on
/// `max lambda <= 1/2` by rejection.
pub fn random_bell_diagonal_separable(seed: u64) -> (DensityMatrix, [f64; 4]) {
    let mut rng = rng_from_seed(seed);
    loop {
        let w = flat_simplex(&mut rng, 4);
        if w.iter().all(|&x| x <= 0.5) {
            let lambdas = [w[0], w[1], w[2], w[3]];
            let rho = bell_diagonal(lambdas).expect("simplex weights form a probability vector");
            return (rho, lambdas);
        }
    }
}
