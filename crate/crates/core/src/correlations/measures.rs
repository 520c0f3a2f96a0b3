use serde::Serialize;

use super::axis::MeasurementAxis;
use super::dephase::{require_two_qubit, ClassicalState};
use super::search::closest_classical;
use crate::error::Result;
use crate::matcore::{partial_trace, rel_entropy, DensityMatrix, Party, NONNEG_TOL};

/// Identity residuals above this indicate a numerical failure.
pub const IDENTITY_TOL: f64 = 1e-8;

/// `tr_B(rho) ⊗ tr_A(rho)`
pub fn marginal_product(rho: &DensityMatrix) -> DensityMatrix {
    partial_trace(rho, Party::B).kron(&partial_trace(rho, Party::A))
}

/// Total mutual information `T = S(rho ‖ pi_rho)`.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    rel_entropy(rho, &marginal_product(rho))
}

/// `C = S(chi ‖ pi_chi)`.
pub fn classical_correlation(chi: &ClassicalState) -> Result<f64> {
    mutual_information(chi.rho())
}

/// `L = S(pi_rho ‖ pi_chi)`.
pub fn l_quantity(rho: &DensityMatrix, chi: &ClassicalState) -> Result<f64> {
    rel_entropy(&marginal_product(rho), &marginal_product(chi.rho()))
}

/// All measures for one state, with the minimizing classical state.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationReport {
    pub t: f64,
    pub q: f64,
    pub c: f64,
    pub l: f64,
    /// `|t - (q + c - l)|`
    pub identity_residual: f64,
    pub axes: (MeasurementAxis, MeasurementAxis),
    /// `t <= q + c` up to [`NONNEG_TOL`].
    pub superadditive: bool,
    pub chi: ClassicalState,
    pub pi_rho: DensityMatrix,
    pub pi_chi: DensityMatrix,
}

impl CorrelationReport {
    /// Whether every reported quantity respects its exact-arithmetic bounds.
    pub fn is_consistent(&self) -> bool {
        self.identity_residual <= IDENTITY_TOL
            && [self.t, self.q, self.c, self.l]
                .iter()
                .all(|&x| x >= -NONNEG_TOL)
            && self.superadditive
    }
}

/// Computes `T`, `Q`, `C`, `L` for a two-qubit state, taking the state itself
/// as its closest separable state. Callers should certify separability first
/// (see [`ppt_check`](crate::states::ppt_check)).
pub fn analyze(rho: &DensityMatrix, grid_n: usize, refine: bool) -> Result<CorrelationReport> {
    require_two_qubit(rho)?;
    let pi_rho = marginal_product(rho);
    let t = rel_entropy(rho, &pi_rho)?;
    let (chi, q) = closest_classical(rho, grid_n, refine)?;
    let pi_chi = marginal_product(chi.rho());
    let c = rel_entropy(chi.rho(), &pi_chi)?;
    let l = rel_entropy(&pi_rho, &pi_chi)?;
    Ok(CorrelationReport {
        t,
        q,
        c,
        l,
        identity_residual: (t - (q + c - l)).abs(),
        axes: chi.axes(),
        superadditive: t <= q + c + NONNEG_TOL,
        chi,
        pi_rho,
        pi_chi,
    })
}
