use super::ket::Ket;
use crate::error::{Error, Result};
use crate::matcore::{c, ComplexMatrix, DensityMatrix};

/// The Bell basis in the order `Phi+, Phi-, Psi+, Psi-`.
pub fn bell_basis() -> [Ket; 4] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    let mk = |amps: [num_complex::Complex64; 4]| Ket::new(amps.to_vec()).expect("normalized");
    [
        mk([c(s, 0.0), z, z, c(s, 0.0)]),
        mk([c(s, 0.0), z, z, c(-s, 0.0)]),
        mk([z, c(s, 0.0), c(s, 0.0), z]),
        mk([z, c(s, 0.0), c(-s, 0.0), z]),
    ]
}

pub fn bell_phi_plus() -> DensityMatrix {
    DensityMatrix::new(bell_basis()[0].projector(), (2, 2)).expect("pure state")
}

/// `sum_i lambda_i |Bell_i><Bell_i|` for a probability 4-vector.
pub fn bell_diagonal(lambdas: [f64; 4]) -> Result<DensityMatrix> {
    if lambdas.iter().any(|&x| !x.is_finite() || x < 0.0) {
        return Err(Error::InvalidSpec(format!(
            "Bell weights {lambdas:?} must be nonnegative"
        )));
    }
    let total: f64 = lambdas.iter().sum();
    if (total - 1.0).abs() > super::mixture::WEIGHT_SUM_TOL {
        return Err(Error::InvalidSpec(format!(
            "Bell weights sum to {total}, not 1"
        )));
    }
    let mut acc = ComplexMatrix::zeros(4);
    for (ket, &w) in bell_basis().iter().zip(&lambdas) {
        acc = &acc + &ket.projector().scale(w);
    }
    DensityMatrix::new(acc, (2, 2))
}
