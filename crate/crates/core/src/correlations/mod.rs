//! Correlation measures built from relative entropies, and the search for
//! the closest classical state.

mod axis;
mod dephase;
mod measures;
mod search;
mod simplex;

pub use axis::{axis_grid, MeasurementAxis};
pub use dephase::{classical_objective, dephase, ClassicalState};
pub use measures::{
    analyze, classical_correlation, l_quantity, marginal_product, mutual_information,
    CorrelationReport, IDENTITY_TOL,
};
pub use search::{closest_classical, MIN_GRID_N, REFINE_STARTS, TIE_TOL};
pub use simplex::{nelder_mead, SimplexOptions, SimplexResult};
