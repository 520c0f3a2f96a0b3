//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation zeroes one off-diagonal pair `(p, q)`. The phase of
//! `a[p, q]` is first absorbed into column `q`, after which the 2x2 block is
//! real symmetric and the classic Jacobi angle applies. For the small dense
//! matrices used here (at most 64x64) this converges quadratically and keeps
//! the eigenvectors orthonormal to machine precision.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Absolute Hermiticity tolerance accepted by [`eig_hermitian`].
pub const HERMITIAN_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues sorted descending, paired with orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    /// Column `k` is the eigenvector for `values[k]`.
    vectors: ComplexMatrix,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }

    pub fn min_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// `sum_k lambda_k v_k v_k^dagger`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.vectors.dim();
        ComplexMatrix::from_fn(n, |i, j| {
            self.values
                .iter()
                .enumerate()
                .map(|(k, &lam)| self.vectors[(i, k)] * self.vectors[(j, k)].conj() * lam)
                .sum()
        })
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Fails with [`Error::NotHermitian`] when `max |M - M^dagger|` exceeds
/// [`HERMITIAN_TOL`]; the Hermitian part is diagonalized otherwise.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<Spectrum> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let herm_err = m.hermiticity_error();
    if herm_err > HERMITIAN_TOL {
        return Err(Error::NotHermitian(herm_err));
    }

    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let scale = a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let mut converged = n <= 1 || scale == 0.0;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        converged = off_diagonal_norm(&a) <= 1e-15 * scale;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, k| v[(i, order[k])]);
    Ok(Spectrum { values, vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Applies `A <- U^dagger A U`, `V <- V U` with `U` chosen to zero `a[p, q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let g_abs = g.norm();
    if g_abs == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip rotations that cannot change the diagonal in floating point.
    if g_abs < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }

    let tau = (aqq - app) / (2.0 * g_abs);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // e^{-i alpha} where g = |g| e^{i alpha}
    let phase = (g / g_abs).conj();

    // U restricted to span{p, q}:
    //   [ c          s         ]
    //   [ -s e^{-ia} c e^{-ia} ]
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = phase * -s;
    let u_qq = phase * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orthonormality_error(s: &Spectrum) -> f64 {
        let v = s.vectors();
        v.adjoint()
            .matmul(v)
            .max_abs_diff(&ComplexMatrix::identity(v.dim()))
    }

    #[test]
    fn diagonal_input_is_returned_sorted() {
        let s = eig_hermitian(&ComplexMatrix::diag(&[0.25, 0.75])).unwrap();
        assert_eq!(s.values(), &[0.75, 0.25]);
        assert!((s.vectors()[(1, 0)].norm() - 1.0).abs() < 1e-15);
        assert!((s.vectors()[(0, 1)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn marginal_of_counterexample_has_closed_form_spectrum() {
        // Roots of x^2 - x + 1/8 = 0.
        let m = ComplexMatrix::from_real_rows(&[&[0.75, 0.25], &[0.25, 0.25]]);
        let s = eig_hermitian(&m).unwrap();
        let r = 2f64.sqrt();
        assert!((s.values()[0] - (2.0 + r) / 4.0).abs() < 1e-15);
        assert!((s.values()[1] - (2.0 - r) / 4.0).abs() < 1e-15);
        assert!((s.values()[0] - 0.853553).abs() < 1e-6);
        assert!((s.values()[1] - 0.146447).abs() < 1e-6);
    }

    #[test]
    fn complex_off_diagonal_is_handled() {
        let m = ComplexMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 1) => Complex64::new(0.0, -1.0),
            (1, 0) => Complex64::new(0.0, 1.0),
            _ => Complex64::new(0.0, 0.0),
        });
        let s = eig_hermitian(&m).unwrap();
        assert!((s.values()[0] - 1.0).abs() < 1e-15);
        assert!((s.values()[1] + 1.0).abs() < 1e-15);
        assert!(s.reconstruct().max_abs_diff(&m) < 1e-14);
        assert!(orthonormality_error(&s) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn degenerate_spectrum() {
        let s = eig_hermitian(&ComplexMatrix::identity(4).scale(0.25)).unwrap();
        assert!(s.values().iter().all(|&x| (x - 0.25).abs() < 1e-16));
        assert!(orthonormality_error(&s) < 1e-15);
    }
}
