use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Field;
use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Residues modulo a prime `p < 2^32`, stored reduced in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

// Above this size the root search switches to Euler's criterion.
const EXHAUSTIVE_ROOT_SEARCH_LIMIT: u64 = 1 << 16;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_big(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }

    fn is_square(&self, a: u64) -> bool {
        if a == 0 || self.p == 2 {
            return true;
        }
        self.pow(&a, (self.p - 1) / 2) == 1
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_big(den);
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        self.div(&self.reduce_big(num), &d)
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.reduce_i64(t0))
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn element_index(&self, a: &u64) -> u64 {
        *a
    }

    fn element_at(&self, index: u64) -> u64 {
        index % self.p
    }

    fn has_quadratic_root(&self, s: &u64, t: &u64) -> Result<bool> {
        if self.p <= EXHAUSTIVE_ROOT_SEARCH_LIMIT {
            return Ok((0..self.p).any(|x| {
                let lhs = self.mul(&x, &x);
                let rhs = self.add(&self.mul(s, &x), t);
                lhs == rhs
            }));
        }
        // odd p: x^2 - s x - t has a root iff s^2 + 4t is a square
        let disc = self.add(&self.mul(s, s), &self.mul(&4, t));
        Ok(self.is_square(disc))
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn spec_string(&self) -> String {
        format!("fp:{}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert_eq!(PrimeField::new(9), Err(Error::CompositeModulus(9)));
        assert_eq!(PrimeField::new(1), Err(Error::CompositeModulus(1)));
        assert!(PrimeField::new(7).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn inverse_of_three_mod_seven() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn every_nonzero_residue_inverts() {
        for p in [2u64, 3, 5, 7, 101, 65537] {
            let f = PrimeField::new(p).unwrap();
            for a in (1..p).step_by((p / 50).max(1) as usize) {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn ratio_with_vanishing_denominator() {
        let f = PrimeField::new(2).unwrap();
        let r = f.from_ratio(&BigInt::from(1), &BigInt::from(2));
        assert_eq!(r, Err(Error::DivisionByZero));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), 3);
        assert_eq!(f5.from_ratio(&BigInt::from(-1), &BigInt::from(1)).unwrap(), 4);
    }

    #[test]
    fn euler_and_exhaustive_root_tests_agree() {
        // p just above the exhaustive limit uses Euler's criterion
        let p = 65537;
        let f = PrimeField::new(p).unwrap();
        for (s, t) in [(0u64, 3u64), (1, 1), (5, 7), (0, 4)] {
            let fast = f.has_quadratic_root(&s, &t).unwrap();
            let slow = (0..p).any(|x| f.mul(&x, &x) == f.add(&f.mul(&s, &x), &t));
            assert_eq!(fast, slow, "s={s} t={t}");
        }
    }
}
