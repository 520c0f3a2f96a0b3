use super::ket::{ket_h, Ket};
use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, DensityMatrix};

pub const WEIGHT_SUM_TOL: f64 = 1e-10;

/// One term `p |a><a| ⊗ |b><b|` of a product mixture.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductTerm {
    pub p: f64,
    pub a: Ket,
    pub b: Ket,
}

/// A convex combination of pure product states.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductMixtureSpec {
    pub terms: Vec<ProductTerm>,
}

impl ProductMixtureSpec {
    pub fn new(terms: Vec<ProductTerm>) -> Result<Self> {
        let spec = Self { terms };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let first = self
            .terms
            .first()
            .ok_or_else(|| Error::InvalidSpec("product mixture has no terms".into()))?;
        let (da, db) = (first.a.dim(), first.b.dim());
        let mut total = 0.0;
        for (k, term) in self.terms.iter().enumerate() {
            if !(term.p.is_finite() && (0.0..=1.0).contains(&term.p)) {
                return Err(Error::InvalidSpec(format!(
                    "term {k}: weight {} not in [0, 1]",
                    term.p
                )));
            }
            if term.a.dim() != da || term.b.dim() != db {
                return Err(Error::InvalidSpec(format!(
                    "term {k}: ket dims ({}, {}) differ from ({da}, {db})",
                    term.a.dim(),
                    term.b.dim()
                )));
            }
            total += term.p;
        }
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidSpec(format!("weights sum to {total}, not 1")));
        }
        Ok(())
    }

    pub fn dims(&self) -> (usize, usize) {
        self.terms
            .first()
            .map(|t| (t.a.dim(), t.b.dim()))
            .unwrap_or((0, 0))
    }
}

/// `sum_k p_k |a_k><a_k| ⊗ |b_k><b_k|`
pub fn from_product_mixture(spec: &ProductMixtureSpec) -> Result<DensityMatrix> {
    spec.validate()?;
    let (da, db) = spec.dims();
    let mut acc = ComplexMatrix::zeros(da * db);
    for term in &spec.terms {
        let pa = term.a.projector();
        let pb = term.b.projector();
        acc = &acc + &pa.kron(&pb).scale(term.p);
    }
    DensityMatrix::new(acc, (da, db))
}

/// `(1/2)(|00><00| + |1H><1H|)` as a product mixture.
pub fn counterexample_spec() -> ProductMixtureSpec {
    ProductMixtureSpec {
        terms: vec![
            ProductTerm {
                p: 0.5,
                a: Ket::zero(),
                b: Ket::zero(),
            },
            ProductTerm {
                p: 0.5,
                a: Ket::one(),
                b: ket_h(),
            },
        ],
    }
}

/// The separable state `(1/2)(|00><00| + |1H><1H|)`.
pub fn counterexample_state() -> DensityMatrix {
    from_product_mixture(&counterexample_spec()).expect("counterexample spec is valid")
}
