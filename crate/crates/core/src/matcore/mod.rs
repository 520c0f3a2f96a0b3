//! Dense complex linear algebra for small bipartite systems: matrices,
//! Hermitian spectra, partial operations, and entropies.

mod density;
mod eigen;
mod entropy;
mod matrix;

pub(crate) use density::c;
pub use density::{
    partial_trace, partial_transpose, trace_distance, DensityMatrix, Party, MAX_DIM, STATE_TOL,
};
pub use eigen::{eig_hermitian, Spectrum, HERMITIAN_TOL};
pub use entropy::{
    neg_xlog2x, rel_entropy, shannon_entropy, vn_entropy, EIG_CLAMP, NONNEG_TOL, SUPPORT_TOL,
};
pub use matrix::{kron, ComplexMatrix};
