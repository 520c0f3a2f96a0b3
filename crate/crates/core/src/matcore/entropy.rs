//! Von Neumann and relative entropies, in bits.

use super::density::DensityMatrix;
use super::eigen::eig_hermitian;
use crate::error::{Error, Result};

/// Eigenvalues in `[-EIG_CLAMP, 0)` are treated as exact zeros.
pub const EIG_CLAMP: f64 = 1e-12;

/// Weight `lambda_i |<u_i|w_j>|^2` above which a null direction of the
/// second argument counts as a support violation.
pub const SUPPORT_TOL: f64 = 1e-10;

/// Round-off allowance below zero for quantities that are nonnegative in exact arithmetic.
pub const NONNEG_TOL: f64 = 1e-9;

/// `-x log2 x` with `0 log 0 = 0`.
#[inline]
pub fn neg_xlog2x(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.log2()
    } else {
        0.0
    }
}

/// Shannon entropy of a probability vector, in bits.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs.iter().copied().map(neg_xlog2x).sum()
}

fn clamp_eigenvalues(values: &[f64]) -> Result<Vec<f64>> {
    values
        .iter()
        .map(|&x| {
            if x < -EIG_CLAMP {
                Err(Error::NegativeEigenvalue(x))
            } else {
                Ok(x.max(0.0))
            }
        })
        .collect()
}

/// `S(rho) = -tr rho log2 rho`.
pub fn vn_entropy(rho: &DensityMatrix) -> Result<f64> {
    let spectrum = eig_hermitian(rho.matrix())?;
    Ok(shannon_entropy(&clamp_eigenvalues(spectrum.values())?))
}

/// `S(rho || tau) = tr rho log2 rho - tr rho log2 tau`.
///
/// Returns `f64::INFINITY` when the support of `rho` is not contained in the
/// support of `tau`.
pub fn rel_entropy(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<f64> {
    if rho.dims() != tau.dims() {
        return Err(Error::DimensionMismatch(
            format!("{:?}", rho.dims()),
            format!("{:?}", tau.dims()),
        ));
    }
    let sr = eig_hermitian(rho.matrix())?;
    let st = eig_hermitian(tau.matrix())?;
    let lam = clamp_eigenvalues(sr.values())?;
    let mu = clamp_eigenvalues(st.values())?;

    let n = rho.dim();
    let u = sr.vectors();
    let w = st.vectors();

    let neg_entropy: f64 = -shannon_entropy(&lam);
    let mut cross = 0.0;
    for (i, &li) in lam.iter().enumerate() {
        if li == 0.0 {
            continue;
        }
        for (j, &mj) in mu.iter().enumerate() {
            let overlap: num_complex::Complex64 =
                (0..n).map(|k| u[(k, i)].conj() * w[(k, j)]).sum();
            let weight = li * overlap.norm_sqr();
            if mj <= EIG_CLAMP {
                if weight > SUPPORT_TOL {
                    return Ok(f64::INFINITY);
                }
                continue;
            }
            cross += weight * mj.log2();
        }
    }
    let s = neg_entropy - cross;
    Ok(if (-NONNEG_TOL..0.0).contains(&s) {
        0.0
    } else {
        s
    })
}
