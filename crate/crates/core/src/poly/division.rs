use num_bigint::BigUint;

use super::Poly;
use crate::error::{Error, Result};
use crate::fields::Field;

/// In-place long division of `rem` by the monic-izable `divisor`; returns
/// the quotient and leaves the remainder in `rem`.
fn long_division<F: Field>(field: &F, rem: &mut Vec<F::Elem>, divisor: &[F::Elem]) -> Vec<F::Elem> {
    let dn = divisor.len();
    if rem.len() < dn {
        return Vec::new();
    }
    let lead_inv = field.inv(&divisor[dn - 1]).expect("divisor is nonzero");
    let mut quot = vec![field.zero(); rem.len() - dn + 1];
    for i in (0..quot.len()).rev() {
        let c = field.mul(&rem[i + dn - 1], &lead_inv);
        if field.is_zero(&c) {
            continue;
        }
        for (j, d) in divisor.iter().enumerate() {
            let prod = field.mul(&c, d);
            rem[i + j] = field.sub(&rem[i + j], &prod);
        }
        quot[i] = c;
    }
    rem.truncate(dn - 1);
    while rem.last().is_some_and(|c| field.is_zero(c)) {
        rem.pop();
    }
    quot
}

pub(crate) fn euclid_gcd_coeffs<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut r0 = Poly::new(field, a.to_vec());
    let mut r1 = Poly::new(field, b.to_vec());
    while !r1.is_zero() {
        let mut rem = r0.coeffs;
        long_division(field, &mut rem, &r1.coeffs);
        r0 = r1;
        r1 = Poly::new(field, rem);
    }
    r0.monic().coeffs
}

impl<F: Field> Poly<F> {
    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        let quot = long_division(&self.field, &mut rem, &divisor.coeffs);
        Ok((Poly::new(&self.field, quot), Poly::new(&self.field, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient of an exact division; errors with the remainder otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible {
                remainder: r.to_string(),
            });
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic generator of the ideal `(self, other)`; `gcd(a, 0) = monic(a)`.
    pub fn gcd_monic(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(Error::GcdOfZeros),
            (false, true) => Ok(self.monic()),
            (true, false) => Ok(other.monic()),
            (false, false) => {
                let g = self.field.gcd_coeffs(&self.coeffs, &other.coeffs);
                Ok(Poly::new(&self.field, g))
            }
        }
    }

    /// Largest `e` with `pi^e | self`.
    pub fn ord_at(&self, pi: &Self) -> Result<u32> {
        self.same_field(pi)?;
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        if pi.is_constant() {
            return Err(Error::ConstantDivisor);
        }
        let mut e = 0;
        let mut cur = self.coeffs.clone();
        loop {
            let mut rem = cur.clone();
            let quot = long_division(&self.field, &mut rem, &pi.coeffs);
            if !rem.is_empty() {
                return Ok(e);
            }
            e += 1;
            cur = quot;
        }
    }

    /// Removes every irreducible factor of `other` from `self`, to full
    /// multiplicity. Returns the stripped polynomial (not normalized).
    pub fn strip_common(&self, other: &Self) -> Result<Self> {
        let mut cur = self.clone();
        if cur.is_zero() || other.is_zero() {
            return Ok(cur);
        }
        let mut g = cur.gcd_monic(other)?;
        while !g.is_constant() {
            cur = cur.exact_div(&g)?;
            g = cur.gcd_monic(&g)?;
        }
        Ok(cur)
    }

    pub fn mulmod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        self.try_mul(other)?.rem(modulus)
    }

    /// `self^exp mod modulus`.
    pub fn powmod(&self, exp: &BigUint, modulus: &Self) -> Result<Self> {
        let base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        for i in (0..exp.bits()).rev() {
            acc = acc.mulmod(&acc, modulus)?;
            if exp.bit(i) {
                acc = acc.mulmod(&base, modulus)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, Rationals};
    use crate::poly::parse_poly;

    fn qp(s: &str) -> Poly<Rationals> {
        parse_poly(s, &Rationals).unwrap()
    }

    #[test]
    fn divrem_examples_over_q() {
        let (q, r) = qp("T^2 - 1").divrem(&qp("T - 1")).unwrap();
        assert_eq!(q, qp("T + 1"));
        assert!(r.is_zero());
        match qp("T^2 + 1").exact_div(&qp("T + 1")) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(remainder, "2"),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(qp("T").divrem(&Poly::zero(&Rationals)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(qp("T^2 - 1").gcd_monic(&qp("T^2 - T")).unwrap(), qp("T - 1"));
        assert_eq!(qp("3*T + 6").gcd_monic(&Poly::zero(&Rationals)).unwrap(), qp("T + 2"));
        let z = Poly::zero(&Rationals);
        assert_eq!(z.gcd_monic(&z), Err(Error::GcdOfZeros));
    }

    #[test]
    fn valuations() {
        let f5 = PrimeField::new(5).unwrap();
        let t1 = Poly::from_i64s(&f5, &[1, 1]);
        let t2 = Poly::from_i64s(&f5, &[2, 1]);
        assert_eq!((&t1.pow(3) * &t2).ord_at(&t1).unwrap(), 3);
        assert_eq!(qp("T^2 + 1").ord_at(&qp("T + 1")).unwrap(), 0);
        for p in [2i64, 3, 5, 7] {
            let k = PrimeField::new(p as u64).unwrap();
            let tp = &Poly::monomial(&k, 1, p as usize) - &Poly::one(&k);
            assert_eq!(tp.ord_at(&Poly::from_i64s(&k, &[-1, 1])).unwrap(), p as u32);
        }
        assert_eq!(Poly::zero(&f5).ord_at(&t1), Err(Error::ZeroValuation));
        assert_eq!(t1.ord_at(&Poly::one(&f5)), Err(Error::ConstantDivisor));
    }

    #[test]
    fn strip_common_removes_full_multiplicity() {
        let f5 = PrimeField::new(5).unwrap();
        let t1 = Poly::from_i64s(&f5, &[1, 1]);
        let t2 = Poly::from_i64s(&f5, &[2, 1]);
        let a = &t1.pow(4) * &t2;
        assert_eq!(a.strip_common(&t1).unwrap().monic(), t2);
        assert_eq!(a.strip_common(&t2.pow(2)).unwrap().monic(), t1.pow(4));
    }

    #[test]
    fn powmod_matches_plain_power() {
        let f7 = PrimeField::new(7).unwrap();
        let m = Poly::from_i64s(&f7, &[3, 1, 0, 2, 1]);
        let b = Poly::from_i64s(&f7, &[1, 5, 2]);
        for e in [0u64, 1, 2, 7, 50] {
            assert_eq!(
                b.powmod(&BigUint::from(e), &m).unwrap(),
                b.pow(e).rem(&m).unwrap(),
                "e={e}"
            );
        }
    }
}
