//! Factorization into monic irreducibles over finite fields `F_q`
//! (prime fields and their quadratic extensions).
//!
//! The pipeline is the classical one: squarefree decomposition, then
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree
//! splitting. The result is re-multiplied and compared against the input
//! on every call.

mod ddf;
mod edf;
mod rng;
mod squarefree;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::Field;
use crate::poly::Poly;

pub use ddf::distinct_degree;
pub use edf::equal_degree_split;
pub use rng::RngState;
pub use squarefree::squarefree_decompose;

/// `unit * prod(poly_i ^ mult_i)`, factors monic, irreducible, distinct
/// and in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<F: Field> {
    pub unit: F::Elem,
    pub factors: Vec<(Poly<F>, u32)>,
}

/// Serializable text form of a [`Factorization`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationText {
    pub unit: String,
    pub factors: Vec<FactorText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorText {
    pub poly: String,
    pub multiplicity: u32,
}

impl<F: Field> Factorization<F> {
    pub fn expand(&self, field: &F) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::constant(field, self.unit.clone()), |acc, (p, m)| {
                &acc * &p.pow(*m as u64)
            })
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree_sum(&self) -> usize {
        self.factors.iter().map(|(p, m)| p.deg() * *m as usize).sum()
    }

    pub fn to_text(&self, field: &F) -> FactorizationText {
        FactorizationText {
            unit: field.format_elem(&self.unit),
            factors: self
                .factors
                .iter()
                .map(|(p, m)| FactorText {
                    poly: p.to_string(),
                    multiplicity: *m,
                })
                .collect(),
        }
    }
}

/// Canonical factor order: by degree, then by coefficient indices read
/// from the leading coefficient down.
pub fn canonical_cmp<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Ordering {
    let field = a.field();
    a.deg().cmp(&b.deg()).then_with(|| {
        let ka = a.coeffs().iter().rev().map(|c| field.element_index(c));
        let kb = b.coeffs().iter().rev().map(|c| field.element_index(c));
        ka.cmp(kb)
    })
}

pub(crate) fn require_finite<F: Field>(field: &F) -> Result<u64> {
    field
        .order()
        .ok_or_else(|| Error::UnsupportedField(field.spec_string()))
}

/// Full factorization of a nonzero polynomial over a finite field.
pub fn factor<F: Field>(f: &Poly<F>, rng: &mut RngState) -> Result<Factorization<F>> {
    let field = f.field();
    require_finite(field)?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    }
    let (unit, monic) = f.monic_with_unit();
    let mut factors: Vec<(Poly<F>, u32)> = Vec::new();
    if !monic.is_constant() {
        for (part, mult) in squarefree_decompose(&monic)? {
            for (dd_part, d) in distinct_degree(&part)? {
                for irr in equal_degree_split(&dd_part, d, rng)? {
                    factors.push((irr, mult));
                }
            }
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    let out = Factorization { unit, factors };
    if out.expand(field) != *f {
        return Err(Error::Internal(format!("factorization of {f} does not multiply back")));
    }
    Ok(out)
}

/// Irreducibility test over a finite field.
pub fn is_irreducible<F: Field>(f: &Poly<F>) -> Result<bool> {
    require_finite(f.field())?;
    if f.is_constant() {
        return Ok(false);
    }
    let monic = f.monic();
    let sf = squarefree_decompose(&monic)?;
    if sf.len() != 1 || sf[0].1 != 1 {
        return Ok(false);
    }
    let parts = distinct_degree(&monic)?;
    Ok(parts.len() == 1 && parts[0].1 == monic.deg())
}
