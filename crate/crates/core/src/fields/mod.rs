//! Coefficient fields: prime fields `F_p`, the rationals, and quadratic
//! extensions `k(w)` with `w^2 = s*w + t` together with their conjugation.
//!
//! Field elements are plain values (`Field::Elem`); all arithmetic goes
//! through the field object, which carries the parameters (modulus,
//! minimal polynomial). [`Scalar`] pairs an element with its field for
//! callers that want checked, self-describing values.

mod descriptor;
mod prime;
mod quadratic;
mod rational;
mod scalar;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use descriptor::{FieldDescriptor, FieldKind};
pub use prime::{is_prime, PrimeField};
pub use quadratic::{QuadElem, QuadExt};
pub use rational::Rationals;
pub use scalar::Scalar;

/// A commutative field with exact arithmetic.
///
/// Finite fields additionally report their order and an enumeration of
/// their elements; the finite-field factorizer is written against those
/// methods only.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Image of the rational number `num/den`. Fails when `den` vanishes
    /// in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// 0 for the rationals and their extensions, `p` otherwise.
    fn characteristic(&self) -> u64;

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;

    /// Position of `a` in a fixed enumeration of a finite field, in
    /// `0..order()`. Zero maps to 0 and one maps to 1.
    ///
    /// Panics on infinite fields.
    fn element_index(&self, a: &Self::Elem) -> u64;

    /// Inverse of [`Field::element_index`].
    fn element_at(&self, index: u64) -> Self::Elem;

    fn is_extension(&self) -> bool {
        false
    }

    /// Whether `x^2 - s*x - t` has a root in this field.
    fn has_quadratic_root(&self, s: &Self::Elem, t: &Self::Elem) -> Result<bool>;

    /// Builds `a + b*w` from rational components. Only meaningful for
    /// quadratic extensions.
    fn ext_from_ratios(&self, _a: (&BigInt, &BigInt), _b: (&BigInt, &BigInt)) -> Result<Self::Elem> {
        Err(Error::NotExtension)
    }

    /// Canonical text for an element, as used by the polynomial printer.
    /// Extension elements are parenthesized; other elements may carry a
    /// leading minus sign.
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Field specification string in the CLI grammar.
    fn spec_string(&self) -> String;

    /// Monic gcd of two dense coefficient vectors, not both zero.
    ///
    /// The default is the Euclidean algorithm; fields with coefficient
    /// growth override it.
    fn gcd_coeffs(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        crate::poly::euclid_gcd_coeffs(self, a, b)
    }
}

/// Characteristic `p` and extension degree `e` of a finite field of
/// order `q = p^e`.
pub(crate) fn prime_power_parts<F: Field>(field: &F) -> Option<(u64, u32)> {
    let q = field.order()?;
    let p = field.characteristic();
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}
