use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::eigen::eig_hermitian;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Tolerance for the Hermitian, unit-trace and PSD checks.
pub const STATE_TOL: f64 = 1e-10;

/// Largest supported total dimension `d_A * d_B`.
pub const MAX_DIM: usize = 64;

/// Selects one subsystem of a bipartite state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Party {
    A,
    B,
}

/// A validated bipartite density matrix. Party A is the most significant
/// tensor factor: basis index `i * d_B + j` is `|i>_A |j>_B`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    dims: (usize, usize),
}

impl DensityMatrix {
    /// Validates `mat` against the density-matrix invariants.
    pub fn new(mat: ComplexMatrix, dims: (usize, usize)) -> Result<Self> {
        let (da, db) = dims;
        if da == 0 || db == 0 || da * db > MAX_DIM {
            return Err(Error::UnsupportedDims(da, db));
        }
        if da * db != mat.dim() {
            return Err(Error::DimensionMismatch(
                format!("{da}x{db} party dims"),
                format!("{}x{} matrix", mat.dim(), mat.dim()),
            ));
        }
        if !mat.is_finite() {
            return Err(Error::NonFinite);
        }
        let herm = mat.hermiticity_error();
        if herm > STATE_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr = mat.trace();
        if (tr - 1.0).norm() > STATE_TOL {
            return Err(Error::InvalidTrace(tr.re));
        }
        let min_eig = eig_hermitian(&mat)?.min_value();
        if min_eig < -STATE_TOL {
            return Err(Error::NotPsd(min_eig));
        }
        Ok(Self { mat, dims })
    }

    /// Single-party state: dims `(d, 1)`.
    pub fn single(mat: ComplexMatrix) -> Result<Self> {
        let d = mat.dim();
        Self::new(mat, (d, 1))
    }

    /// Skips validation for matrices that are states by construction
    /// (marginals, products, pinchings of valid states).
    pub(crate) fn from_trusted(mat: ComplexMatrix, dims: (usize, usize)) -> Self {
        debug_assert_eq!(dims.0 * dims.1, mat.dim());
        Self { mat, dims }
    }

    pub fn maximally_mixed(dims: (usize, usize)) -> Self {
        let d = dims.0 * dims.1;
        Self::from_trusted(ComplexMatrix::identity(d).scale(1.0 / d as f64), dims)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn is_two_qubit(&self) -> bool {
        self.dims == (2, 2)
    }

    /// Product state `self ⊗ other`, tagged with dims `(dim(self), dim(other))`.
    pub fn kron(&self, other: &DensityMatrix) -> DensityMatrix {
        let mat = self.mat.kron(&other.mat);
        Self::from_trusted(mat, (self.dim(), other.dim()))
    }

    /// `U rho U^dagger` for a unitary `u`.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> DensityMatrix {
        let mat = u.matmul(&self.mat).matmul(&u.adjoint()).hermitian_part();
        Self::from_trusted(mat, self.dims)
    }
}

impl Serialize for DensityMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DensityMatrix", 3)?;
        st.serialize_field("dims", &[self.dims.0, self.dims.1])?;
        st.serialize_field(
            "re",
            &self.mat.entries().iter().map(|z| z.re).collect::<Vec<_>>(),
        )?;
        st.serialize_field(
            "im",
            &self.mat.entries().iter().map(|z| z.im).collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

/// Traces out `party`, returning the marginal of the other one with dims `(d, 1)`.
pub fn partial_trace(rho: &DensityMatrix, party: Party) -> DensityMatrix {
    let (da, db) = rho.dims();
    let m = rho.matrix();
    let mat = match party {
        Party::B => ComplexMatrix::from_fn(da, |i, k| {
            (0..db).map(|j| m[(i * db + j, k * db + j)]).sum()
        }),
        Party::A => ComplexMatrix::from_fn(db, |j, l| {
            (0..da).map(|i| m[(i * db + j, i * db + l)]).sum()
        }),
    };
    let d = mat.dim();
    DensityMatrix::from_trusted(mat, (d, 1))
}

/// Transposes the indices of `party`. The result is Hermitian with unit
/// trace but need not be positive.
pub fn partial_transpose(rho: &DensityMatrix, party: Party) -> ComplexMatrix {
    let (_, db) = rho.dims();
    let m = rho.matrix();
    ComplexMatrix::from_fn(rho.dim(), |r, c| {
        let (i, a) = (r / db, r % db);
        let (j, b) = (c / db, c % db);
        match party {
            Party::B => m[(i * db + b, j * db + a)],
            Party::A => m[(j * db + a, i * db + b)],
        }
    })
}

/// `(1/2) * sum |eig(a - b)|`
pub fn trace_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    let diff = a - b;
    Ok(0.5
        * eig_hermitian(&diff)?
            .values()
            .iter()
            .map(|x| x.abs())
            .sum::<f64>())
}

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
