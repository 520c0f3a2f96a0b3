//! Relative-entropy correlation measures for two-qubit separable states.
//!
//! For a bipartite state `rho` the crate computes
//!
//! | quantity | definition |
//! |----------|------------|
//! | `T` | `S(rho ‖ pi_rho)`, total mutual information |
//! | `Q` | `min S(rho ‖ chi)` over classical states `chi`, the dissonance |
//! | `C` | `S(chi ‖ pi_chi)` at the minimizing `chi` |
//! | `L` | `S(pi_rho ‖ pi_chi)` |
//!
//! where `pi_x` is the product of the marginals of `x`. These satisfy
//! `T = Q + C - L` exactly, and since `L >= 0` every separable state obeys
//! `T <= Q + C`.
//!
//! ```
//! use dissonance_core::{analyze, states::counterexample_state};
//!
//! let report = analyze(&counterexample_state(), 16, true).unwrap();
//! assert!((report.q - 0.5).abs() < 1e-4);
//! assert!(report.l > 0.2 && report.superadditive);
//! ```

pub mod correlations;
pub mod error;
pub mod matcore;
pub mod states;
pub mod sweep;

pub use correlations::{analyze, CorrelationReport, MeasurementAxis};
pub use error::{Error, Result};
pub use matcore::{ComplexMatrix, DensityMatrix, Party};
