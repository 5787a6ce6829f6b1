//! Dense univariate polynomials in `T` over a [`Field`].

mod division;
mod modgcd;
mod mul;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::fields::{Field, QuadExt};

pub(crate) use division::euclid_gcd_coeffs;
pub(crate) use modgcd::modular_gcd_rational;
pub use mul::KARATSUBA_THRESHOLD;
pub use text::parse_poly;

/// A polynomial `sum c_i T^i` with coefficients indexed by degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading
/// coefficient.
#[derive(Clone)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_i64s(field: &F, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &F) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// The indeterminate `T`.
    pub fn t(field: &F) -> Self {
        Poly::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &F, c: F::Elem, exp: usize) -> Self {
        let mut coeffs = vec![field.zero(); exp + 1];
        coeffs[exp] = c;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| self.field.is_one(c))
    }

    pub fn lead(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.spec_string(),
                other.field.spec_string(),
            ));
        }
        Ok(())
    }

    fn expect_same_field(&self, other: &Self) {
        if let Err(e) = self.same_field(other) {
            panic!("{e}");
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f.add(a, b)
            })
            .collect();
        Poly::new(f, coeffs)
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f.sub(a, b)
            })
            .collect();
        Poly::new(f, coeffs)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        Poly::new(&self.field, mul::mul_coeffs(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// `self^exp` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Multiplies by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(&self.field, coeffs)
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        self.monic_with_unit().1
    }

    /// `(u, m)` with `self = u * m` and `m` monic. Zero gives `(0, 0)`.
    pub fn monic_with_unit(&self) -> (F::Elem, Self) {
        match self.lead() {
            None => (self.field.zero(), self.clone()),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                (lc.clone(), self.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Applies `g` to every coefficient, producing a polynomial over `target`.
    pub fn map_coeffs<G: Field>(&self, target: &G, g: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
        Poly::new(target, self.coeffs.iter().map(g).collect())
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }
}

impl<K: Field> Poly<QuadExt<K>> {
    /// Coefficientwise conjugation `P_sigma`.
    pub fn sigma_map(&self) -> Self {
        let ext = &self.field;
        Poly::new(ext, self.coeffs.iter().map(|c| ext.sigma(c)).collect())
    }

    /// True iff every coefficient is fixed by the conjugation.
    pub fn in_base_field(&self) -> bool {
        let k = self.field.base();
        self.coeffs.iter().all(|c| k.is_zero(&c.c1))
    }

    /// Re-types a sigma-fixed polynomial over the base field.
    pub fn project_to_base(&self) -> Result<Poly<K>> {
        let ext = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| ext.project(c).ok_or(Error::NotInBaseField))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(ext.base(), coeffs))
    }

    pub fn embed(ext: &QuadExt<K>, p: &Poly<K>) -> Self {
        p.map_coeffs(ext, |c| ext.embed(c.clone()))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl<'a, 'b, F: Field> $trait<&'b Poly<F>> for &'a Poly<F> {
            type Output = Poly<F>;

            fn $method(self, rhs: &'b Poly<F>) -> Poly<F> {
                self.expect_same_field(rhs);
                self.$imp(rhs)
            }
        }

        impl<F: Field> $trait<Poly<F>> for Poly<F> {
            type Output = Poly<F>;

            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                self.expect_same_field(&rhs);
                (&self).$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_unchecked);
forward_binop!(Sub, sub, sub_unchecked);
forward_binop!(Mul, mul, mul_unchecked);

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|c| f.neg(c)).collect())
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly(self))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field.spec_string(), text::format_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn squares_and_cubes_over_f3() {
        let k = f3();
        let t1 = Poly::from_i64s(&k, &[1, 1]);
        assert_eq!(t1.pow(2), Poly::from_i64s(&k, &[1, 2, 1]));
        assert_eq!(t1.pow(3), Poly::from_i64s(&k, &[1, 0, 0, 1]));
        assert!(t1.pow(0).is_one());
    }

    #[test]
    fn trimming_and_degree() {
        let k = f3();
        let p = Poly::from_i64s(&k, &[1, 0, 3, 6]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::from_i64s(&k, &[0, 0]).degree(), None);
        assert!(Poly::from_i64s(&k, &[3]).is_zero());
    }

    #[test]
    fn mismatched_fields_error() {
        let a = Poly::t(&f3());
        let b = Poly::t(&PrimeField::new(5).unwrap());
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.try_mul(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn sigma_map_of_the_degenerate_lucas_parameter() {
        let k = QuadExt::new(
            Rationals,
            BigRational::from_integer(0.into()),
            BigRational::from_integer(2.into()),
        )
        .unwrap();
        let p = parse_poly("T^2 + (1+1*w)*T + (0+1*w)", &k).unwrap();
        let ps = p.sigma_map();
        assert_eq!(ps, parse_poly("T^2 + (1-1*w)*T + (0-1*w)", &k).unwrap());
        assert_eq!(ps.sigma_map(), p);
        assert!((&p + &ps).in_base_field());
        assert!(!(&p - &ps).in_base_field());
        let sqrt2 = Poly::constant(&k, k.generator());
        assert!(!sqrt2.in_base_field());
        assert_eq!(sqrt2.project_to_base(), Err(Error::NotInBaseField));
        let base_poly = Poly::from_i64s(&Rationals, &[1, 2, 3]);
        let lifted = Poly::embed(&k, &base_poly);
        assert_eq!(lifted.sigma_map(), lifted);
        assert_eq!(lifted.project_to_base().unwrap(), base_poly);
    }

    #[test]
    fn derivative_vanishes_on_pth_powers() {
        let k = f3();
        let p = Poly::from_i64s(&k, &[1, 0, 0, 2, 0, 0, 1]);
        assert!(p.derivative().is_zero());
    }
}
