use crate::error::{Error, Result};
use crate::matcore::{eig_hermitian, partial_transpose, DensityMatrix, Party};

/// A partial transpose whose minimum eigenvalue is at least `-PPT_TOL`
/// counts as positive.
pub const PPT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptResult {
    pub min_eigenvalue: f64,
    pub separable: bool,
}

/// Peres-Horodecki test. Exact for two qubits, so only `(2, 2)` inputs are accepted.
pub fn ppt_check(rho: &DensityMatrix) -> Result<PptResult> {
    if !rho.is_two_qubit() {
        let (da, db) = rho.dims();
        return Err(Error::UnsupportedDims(da, db));
    }
    let pt = partial_transpose(rho, Party::B);
    let min_eigenvalue = eig_hermitian(&pt)?.min_value();
    Ok(PptResult {
        min_eigenvalue,
        separable: min_eigenvalue >= -PPT_TOL,
    })
}
