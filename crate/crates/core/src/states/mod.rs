//! Construction, sampling, file I/O, and separability certification of
//! the states under study.

mod bell;
mod ket;
mod mixture;
mod ppt;
mod sampler;
mod spec_file;

pub use bell::{bell_basis, bell_diagonal, bell_phi_plus};
pub use ket::{ket_h, Ket, KET_NORM_TOL};
pub use mixture::{
    counterexample_spec, counterexample_state, from_product_mixture, ProductMixtureSpec,
    ProductTerm, WEIGHT_SUM_TOL,
};
pub use ppt::{ppt_check, PptResult, PPT_TOL};
pub use sampler::{random_bell_diagonal_separable, random_separable, PRNG_NAME};
pub use spec_file::{
    parse_state, parse_state_spec, read_state_file, serialize_state, write_state_file, StateSpec,
};
