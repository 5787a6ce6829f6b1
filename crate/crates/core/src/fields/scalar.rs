use std::fmt;

use super::{Field, QuadExt};
use crate::error::{Error, Result};

/// A field element bundled with the field it belongs to.
///
/// Binary operations check that both operands come from the same field.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar<F: Field> {
    field: F,
    value: F::Elem,
}

impl<F: Field> Scalar<F> {
    pub fn new(field: &F, value: F::Elem) -> Self {
        Scalar {
            field: field.clone(),
            value,
        }
    }

    pub fn from_i64(field: &F, n: i64) -> Self {
        Scalar::new(field, field.from_i64(n))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn value(&self) -> &F::Elem {
        &self.value
    }

    pub fn into_value(self) -> F::Elem {
        self.value
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.spec_string(),
                other.field.spec_string(),
            ));
        }
        Ok(())
    }

    fn lift(&self, value: F::Elem) -> Self {
        Scalar::new(&self.field, value)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.lift(self.field.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.lift(self.field.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.lift(self.field.mul(&self.value, &other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.lift(self.field.div(&self.value, &other.value)?))
    }

    pub fn neg(&self) -> Self {
        self.lift(self.field.neg(&self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        let v = self.field.inv(&self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.lift(v))
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    /// Equality that reports a field mismatch instead of answering `false`.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.value == other.value)
    }
}

impl<K: Field> Scalar<QuadExt<K>> {
    pub fn sigma(&self) -> Self {
        self.lift(self.field.sigma(&self.value))
    }
}

impl<F: Field> fmt::Display for Scalar<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::PrimeField;

    #[test]
    fn mismatched_fields_are_reported() {
        let f5 = PrimeField::new(5).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        let a = Scalar::from_i64(&f5, 2);
        let b = Scalar::from_i64(&f7, 2);
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.try_eq(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn inverse_and_division() {
        let f7 = PrimeField::new(7).unwrap();
        let three = Scalar::from_i64(&f7, 3);
        assert_eq!(three.inv().unwrap().value(), &5);
        let zero = Scalar::from_i64(&f7, 0);
        assert_eq!(zero.inv(), Err(Error::DivisionByZero));
        assert_eq!(three.div(&zero), Err(Error::DivisionByZero));
        assert_eq!(three.to_string(), "3");
    }
}
