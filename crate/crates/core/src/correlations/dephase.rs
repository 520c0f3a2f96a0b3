use serde::Serialize;

use super::axis::MeasurementAxis;
use crate::error::{Error, Result};
use crate::matcore::{vn_entropy, DensityMatrix, NONNEG_TOL};

/// A state that is diagonal in the product basis of its two axes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassicalState {
    rho: DensityMatrix,
    axis_a: MeasurementAxis,
    axis_b: MeasurementAxis,
}

impl ClassicalState {
    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }

    pub fn axis_a(&self) -> MeasurementAxis {
        self.axis_a
    }

    pub fn axis_b(&self) -> MeasurementAxis {
        self.axis_b
    }

    pub fn axes(&self) -> (MeasurementAxis, MeasurementAxis) {
        (self.axis_a, self.axis_b)
    }
}

pub(crate) fn require_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.is_two_qubit() {
        Ok(())
    } else {
        let (da, db) = rho.dims();
        Err(Error::UnsupportedDims(da, db))
    }
}

/// Pinches `rho` onto the product basis of the two axes:
/// `sum_ij (P_i ⊗ P_j) rho (P_i ⊗ P_j)`.
pub fn dephase(
    rho: &DensityMatrix,
    axis_a: MeasurementAxis,
    axis_b: MeasurementAxis,
) -> Result<ClassicalState> {
    require_two_qubit(rho)?;
    let m = rho.matrix();
    let mut acc = crate::matcore::ComplexMatrix::zeros(4);
    for i in 0..2 {
        let pa = axis_a.projector(i);
        for j in 0..2 {
            let p = pa.kron(&axis_b.projector(j));
            acc = &acc + &p.matmul(m).matmul(&p);
        }
    }
    Ok(ClassicalState {
        rho: DensityMatrix::from_trusted(acc.hermitian_part(), (2, 2)),
        axis_a,
        axis_b,
    })
}

/// `S(dephase(rho)) - S(rho)`, which equals `S(rho ‖ dephase(rho))`.
pub fn classical_objective(
    rho: &DensityMatrix,
    axis_a: MeasurementAxis,
    axis_b: MeasurementAxis,
) -> Result<f64> {
    let chi = dephase(rho, axis_a, axis_b)?;
    let gap = vn_entropy(chi.rho())? - vn_entropy(rho)?;
    Ok(clamp_round_off(gap))
}

pub(crate) fn clamp_round_off(x: f64) -> f64 {
    if (-NONNEG_TOL..0.0).contains(&x) {
        0.0
    } else {
        x
    }
}
