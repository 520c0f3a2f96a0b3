//! JSON state files.
//!
//! ```json
//! {"product_mixture": {"terms": [{"p": 0.5, "a": [[1,0],[0,0]], "b": [[1,0],[0,0]]}]}}
//! {"dense": {"dims": [2,2], "re": [...16 reals...], "im": [...16 reals...]}}
//! ```
//!
//! Complex amplitudes are `[re, im]` pairs; dense matrices are row-major.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::ket::Ket;
use super::mixture::{from_product_mixture, ProductMixtureSpec, ProductTerm};
use crate::error::{Error, Result};
use crate::matcore::{c, ComplexMatrix, DensityMatrix};

/// A state description as stored on disk.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    ProductMixture(ProductMixtureSpec),
    Dense {
        dims: (usize, usize),
        matrix: ComplexMatrix,
    },
}

impl StateSpec {
    /// Builds and validates the density matrix.
    pub fn to_density(&self) -> Result<DensityMatrix> {
        let built = match self {
            StateSpec::ProductMixture(spec) => from_product_mixture(spec),
            StateSpec::Dense { dims, matrix } => DensityMatrix::new(matrix.clone(), *dims),
        };
        built.map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::InvariantViolation(other.to_string()),
        })
    }

    pub fn dense(rho: &DensityMatrix) -> Self {
        StateSpec::Dense {
            dims: rho.dims(),
            matrix: rho.matrix().clone(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
enum SpecFile {
    #[serde(rename = "product_mixture")]
    ProductMixture { terms: Vec<TermFile> },
    #[serde(rename = "dense")]
    Dense {
        dims: [usize; 2],
        re: Vec<f64>,
        im: Vec<f64>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    p: f64,
    a: Vec<[f64; 2]>,
    b: Vec<[f64; 2]>,
}

fn field_error(at: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        at: at.into(),
        message: message.into(),
    }
}

fn ket_from_pairs(pairs: &[[f64; 2]], field: &str) -> Result<Ket> {
    if pairs.is_empty() {
        return Err(field_error(field, "ket has no amplitudes"));
    }
    let amps = pairs.iter().map(|&[re, im]| c(re, im)).collect();
    Ket::new(amps).map_err(|e| Error::InvariantViolation(format!("{field}: {e}")))
}

/// Parses the JSON text of a state file into its description.
pub fn parse_state_spec(text: &str) -> Result<StateSpec> {
    let file: SpecFile = serde_json::from_str(text).map_err(|e| {
        field_error(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    match file {
        SpecFile::ProductMixture { terms } => {
            let mut out = Vec::with_capacity(terms.len());
            for (k, t) in terms.iter().enumerate() {
                out.push(ProductTerm {
                    p: t.p,
                    a: ket_from_pairs(&t.a, &format!("product_mixture.terms[{k}].a"))?,
                    b: ket_from_pairs(&t.b, &format!("product_mixture.terms[{k}].b"))?,
                });
            }
            let spec = ProductMixtureSpec { terms: out };
            spec.validate()
                .map_err(|e| Error::InvariantViolation(e.to_string()))?;
            Ok(StateSpec::ProductMixture(spec))
        }
        SpecFile::Dense {
            dims: [da, db],
            re,
            im,
        } => {
            let n = da * db;
            if n == 0 {
                return Err(field_error(
                    "dense.dims",
                    "party dimensions must be positive",
                ));
            }
            for (name, values) in [("dense.re", &re), ("dense.im", &im)] {
                if values.len() != n * n {
                    return Err(field_error(
                        name,
                        format!(
                            "expected {} entries for dims [{da}, {db}], found {}",
                            n * n,
                            values.len()
                        ),
                    ));
                }
            }
            let entries = re.iter().zip(&im).map(|(&x, &y)| c(x, y)).collect();
            let matrix = ComplexMatrix::from_row_major(entries).expect("length checked above");
            Ok(StateSpec::Dense {
                dims: (da, db),
                matrix,
            })
        }
    }
}

/// Parses a state file and validates the resulting density matrix.
pub fn parse_state(text: &str) -> Result<DensityMatrix> {
    parse_state_spec(text)?.to_density()
}

pub fn serialize_state(spec: &StateSpec) -> String {
    let file = match spec {
        StateSpec::ProductMixture(m) => SpecFile::ProductMixture {
            terms: m
                .terms
                .iter()
                .map(|t| TermFile {
                    p: t.p,
                    a: t.a.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
                    b: t.b.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
                })
                .collect(),
        },
        StateSpec::Dense { dims, matrix } => SpecFile::Dense {
            dims: [dims.0, dims.1],
            re: matrix.entries().iter().map(|z| z.re).collect(),
            im: matrix.entries().iter().map(|z| z.im).collect(),
        },
    };
    let mut text = serde_json::to_string_pretty(&file).expect("state spec serializes");
    text.push('\n');
    text
}

pub fn read_state_file(path: impl AsRef<Path>) -> Result<DensityMatrix> {
    parse_state(&std::fs::read_to_string(path)?)
}

pub fn write_state_file(path: impl AsRef<Path>, spec: &StateSpec) -> Result<()> {
    std::fs::write(path, serialize_state(spec))?;
    Ok(())
}
