use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Field;
use crate::error::{Error, Result};

/// The rational numbers, with arbitrary-precision numerator and
/// denominator kept in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

/// Exact square test for a rational in lowest terms.
pub(crate) fn is_rational_square(x: &BigRational) -> bool {
    if x.is_negative() {
        return false;
    }
    is_int_square(x.numer()) && is_int_square(x.denom())
}

fn is_int_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn element_index(&self, _a: &BigRational) -> u64 {
        panic!("the rationals are not enumerable as a finite field")
    }

    fn element_at(&self, _index: u64) -> BigRational {
        panic!("the rationals are not enumerable as a finite field")
    }

    fn has_quadratic_root(&self, s: &BigRational, t: &BigRational) -> Result<bool> {
        let disc = s * s + BigRational::from_integer(BigInt::from(4)) * t;
        Ok(is_rational_square(&disc))
    }

    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn spec_string(&self) -> String {
        "q".to_string()
    }

    fn gcd_coeffs(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        crate::poly::modular_gcd_rational(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn square_detection() {
        assert!(is_rational_square(&q(9, 4)));
        assert!(is_rational_square(&q(0, 1)));
        assert!(!is_rational_square(&q(2, 1)));
        assert!(!is_rational_square(&q(-4, 1)));
        assert!(!is_rational_square(&q(4, 3)));
    }

    #[test]
    fn sqrt_two_is_irrational() {
        assert!(!Rationals.has_quadratic_root(&q(0, 1), &q(2, 1)).unwrap());
        // x^2 = x + 2 has roots 2, -1
        assert!(Rationals.has_quadratic_root(&q(1, 1), &q(2, 1)).unwrap());
    }

    #[test]
    fn formatting_is_lowest_terms() {
        assert_eq!(Rationals.format_elem(&q(6, -4)), "-3/2");
        assert_eq!(Rationals.format_elem(&q(4, 2)), "2");
    }
}
