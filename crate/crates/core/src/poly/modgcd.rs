//! Modular gcd over the rationals.
//!
//! Both inputs are cleared to primitive integer polynomials; the gcd is
//! then computed modulo a stream of word-sized primes, combined by CRT,
//! and accepted once a candidate divides both inputs exactly over Z.
//! Euclid over Q is hopeless here: remainder coefficients grow to tens of
//! thousands of bits at the degrees the sequences reach.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::division::euclid_gcd_coeffs;
use crate::fields::{is_prime, Field, PrimeField};

type IntPoly = Vec<BigInt>;

/// Primitive integer associate with positive leading coefficient.
fn primitive_integer(a: &[BigRational]) -> IntPoly {
    let den_lcm = a
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = a.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

/// Exact division test in Z[T].
fn int_divides(divisor: &[BigInt], a: &[BigInt]) -> bool {
    let dn = divisor.len();
    if a.len() < dn {
        return a.iter().all(Zero::is_zero);
    }
    let lead = &divisor[dn - 1];
    let mut rem = a.to_vec();
    for i in (0..=(a.len() - dn)).rev() {
        let top = &rem[i + dn - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return false;
        }
        for (j, d) in divisor.iter().enumerate() {
            rem[i + j] -= &q * d;
        }
    }
    rem.iter().all(Zero::is_zero)
}

fn reduce(a: &[BigInt], field: &PrimeField) -> Vec<u64> {
    let p = BigInt::from(field.modulus());
    a.iter()
        .map(|c| c.mod_floor(&p).to_u64().expect("residue fits"))
        .collect()
}

fn primes_descending() -> impl Iterator<Item = u64> {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    let primes = PRIMES.get_or_init(|| {
        ((1u64 << 30)..(1u64 << 31))
            .rev()
            .filter(|&n| is_prime(n))
            .take(4096)
            .collect()
    });
    primes.iter().copied()
}

fn symmetric_lift(c: &BigInt, modulus: &BigInt, half: &BigInt) -> BigInt {
    if c > half {
        c - modulus
    } else {
        c.clone()
    }
}

pub(crate) fn modular_gcd_rational(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let a = primitive_integer(a);
    let b = primitive_integer(b);
    if a.len() <= 1 || b.len() <= 1 {
        return vec![BigRational::one()];
    }
    let gamma = a.last().unwrap().gcd(b.last().unwrap());

    // CRT image of gamma * (monic gcd), coefficients in [0, modulus)
    let mut image: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last_candidate: Option<IntPoly> = None;

    for p in primes_descending() {
        let field = PrimeField::new(p).expect("prime below 2^32");
        let pb = BigInt::from(p);
        if (a.last().unwrap() % &pb).is_zero() || (b.last().unwrap() % &pb).is_zero() {
            continue;
        }
        let ap = reduce(&a, &field);
        let bp = reduce(&b, &field);
        let g = euclid_gcd_coeffs(&field, &ap, &bp);
        if g.len() == 1 {
            return vec![BigRational::one()];
        }
        let gamma_p = field.reduce_big(&gamma);
        let g: Vec<u64> = g.iter().map(|c| field.mul(c, &gamma_p)).collect();

        if image.is_empty() || g.len() < image.len() {
            // first prime, or every earlier prime was unlucky
            image = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb;
            last_candidate = None;
            continue;
        }
        if g.len() > image.len() {
            continue;
        }

        // Garner step: x = x0 + M * ((g - x0) * M^-1 mod p)
        let m_inv = field.inv(&field.reduce_big(&modulus)).expect("coprime moduli");
        for (x, &gp) in image.iter_mut().zip(&g) {
            let x0 = field.reduce_big(x);
            let t = field.mul(&field.sub(&gp, &x0), &m_inv);
            *x += &modulus * BigInt::from(t);
        }
        modulus *= &pb;

        let half = &modulus >> 1;
        let lifted: IntPoly = image.iter().map(|c| symmetric_lift(c, &modulus, &half)).collect();
        let candidate = primitive_int_poly(lifted);
        if last_candidate.as_ref() == Some(&candidate)
            && int_divides(&candidate, &a)
            && int_divides(&candidate, &b)
        {
            let lc = BigRational::from_integer(candidate.last().unwrap().clone());
            return candidate
                .into_iter()
                .map(|c| BigRational::from_integer(c) / &lc)
                .collect();
        }
        last_candidate = Some(candidate);
    }
    unreachable!("ran out of word-sized primes")
}

fn primitive_int_poly(mut a: IntPoly) -> IntPoly {
    let content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return a;
    }
    let flip = a.last().is_some_and(|c| c.sign() == Sign::Minus);
    for c in a.iter_mut() {
        *c = &*c / &content;
        if flip {
            *c = -&*c;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Rationals;
    use crate::poly::{parse_poly, Poly};

    fn qp(s: &str) -> Poly<Rationals> {
        parse_poly(s, &Rationals).unwrap()
    }

    #[test]
    fn agrees_with_euclid_on_small_inputs() {
        let cases = [
            ("T^2 - 1", "T^2 - T"),
            ("2*T - 1", "4*T^2 - 1"),
            ("1/3*T^3 + 1/2*T", "T^2 + 3/2"),
            ("T^4 - 2*T^2 + 1", "T^3 - T"),
            ("6*T^2 + 5*T + 1", "T^5"),
        ];
        for (a, b) in cases {
            let (a, b) = (qp(a), qp(b));
            let fast = modular_gcd_rational(a.coeffs(), b.coeffs());
            let slow = euclid_gcd_coeffs(&Rationals, a.coeffs(), b.coeffs());
            assert_eq!(fast, slow, "gcd({a}, {b})");
        }
    }

    #[test]
    fn large_common_factor_with_big_coefficients() {
        let g = qp("123456789*T^3 - 987654321*T + 55555");
        let x = qp("T^7 + 31*T^2 - 17");
        let y = qp("1000003*T^4 + T - 99991");
        let a = (&g * &x).pow(3);
        let b = &g.pow(2) * &y;
        let fast = Poly::new(&Rationals, modular_gcd_rational(a.coeffs(), b.coeffs()));
        assert_eq!(fast, g.pow(2).monic());
    }

    #[test]
    fn integer_divisibility() {
        let d: Vec<BigInt> = vec![1.into(), 2.into()];
        let a: Vec<BigInt> = vec![1.into(), 4.into(), 4.into()];
        assert!(int_divides(&d, &a));
        let a2: Vec<BigInt> = vec![1.into(), 3.into(), 4.into()];
        assert!(!int_divides(&d, &a2));
    }
}
