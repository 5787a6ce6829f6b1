//! Möbius function, Euler totient, divisor lists and homogeneous
//! cyclotomic polynomials `Phi_n(A, B)` evaluated at polynomials.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fields::{Field, QuadExt};
use crate::poly::Poly;

pub const DEFAULT_N_MAX: u64 = 512;

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("index must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Prime factorization of `n` by trial division, as `(prime, exponent)`.
pub fn factor_integer(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> Result<i8> {
    check_positive(n)?;
    let mut mu = 1;
    for (_, e) in factor_integer(n) {
        if e > 1 {
            return Ok(0);
        }
        mu = -mu;
    }
    Ok(mu)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    check_positive(n)?;
    Ok(factor_integer(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    check_positive(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Exponent of the prime `p` in `n`.
pub fn ord_p(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// Sieved tables of `mu`, `phi` and divisor lists for `1..=n_max`.
/// Lookups beyond the bound fall back to trial division.
#[derive(Clone, Debug)]
pub struct ArithCache {
    n_max: u64,
    mu: Vec<i8>,
    phi: Vec<u64>,
    divs: Vec<Vec<u64>>,
}

impl ArithCache {
    pub fn new(n_max: u64) -> Self {
        let len = n_max as usize + 1;
        let mut mu = vec![1i8; len];
        let mut phi: Vec<u64> = (0..len as u64).collect();
        let mut composite = vec![false; len];
        for p in 2..len {
            if composite[p] {
                continue;
            }
            for m in (p..len).step_by(p) {
                if m > p {
                    composite[m] = true;
                }
                mu[m] = -mu[m];
                phi[m] = phi[m] / p as u64 * (p as u64 - 1);
            }
            let sq = p * p;
            for m in (sq..len).step_by(sq) {
                mu[m] = 0;
            }
        }
        let mut divs = vec![Vec::new(); len];
        for d in 1..len {
            for m in (d..len).step_by(d) {
                divs[m].push(d as u64);
            }
        }
        if len > 0 {
            mu[0] = 0;
        }
        ArithCache { n_max, mu, phi, divs }
    }

    /// Shared cache with bound [`DEFAULT_N_MAX`].
    pub fn global() -> &'static ArithCache {
        static CACHE: OnceLock<ArithCache> = OnceLock::new();
        CACHE.get_or_init(|| ArithCache::new(DEFAULT_N_MAX))
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn mobius(&self, n: u64) -> Result<i8> {
        check_positive(n)?;
        if n <= self.n_max {
            Ok(self.mu[n as usize])
        } else {
            mobius(n)
        }
    }

    pub fn euler_phi(&self, n: u64) -> Result<u64> {
        check_positive(n)?;
        if n <= self.n_max {
            Ok(self.phi[n as usize])
        } else {
            euler_phi(n)
        }
    }

    pub fn divisors(&self, n: u64) -> Result<Vec<u64>> {
        check_positive(n)?;
        if n <= self.n_max {
            Ok(self.divs[n as usize].clone())
        } else {
            divisors(n)
        }
    }
}

/// `Phi_n(A, B)` as the quotient of the products of `A^d - B^d` over
/// `d | n` with `mu(n/d) = 1` and with `mu(n/d) = -1`.
///
/// Refuses `p | n` in characteristic `p`, where the quotient is not
/// `Phi_n`.
pub fn phi_homog<F: Field>(n: u64, a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>> {
    check_positive(n)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidArgument("Phi_n needs nonzero arguments".into()));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().spec_string(),
            b.field().spec_string(),
        ));
    }
    let p = a.field().characteristic();
    if p > 0 && n % p == 0 {
        return Err(Error::IndexDivisibleByCharacteristic { n, p });
    }
    let cache = ArithCache::global();
    let field = a.field();
    let mut num = Poly::one(field);
    let mut den = Poly::one(field);
    for d in cache.divisors(n)? {
        let mu = cache.mobius(n / d)?;
        if mu == 0 {
            continue;
        }
        let diff = &a.pow(d) - &b.pow(d);
        if diff.is_zero() {
            return Err(Error::Precondition(format!("A^{d} = B^{d}")));
        }
        if mu == 1 {
            num = &num * &diff;
        } else {
            den = &den * &diff;
        }
    }
    num.exact_div(&den)
}

/// `Phi_n(P, P_sigma)` for `n >= 2`, projected to the base field.
pub fn phi_lucas<K: Field>(
    n: u64,
    p: &Poly<QuadExt<K>>,
    p_sigma: &Poly<QuadExt<K>>,
) -> Result<Poly<K>> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the Lucas cyclotomic factor needs n >= 2".into(),
        ));
    }
    phi_homog(n, p, p_sigma)?
        .project_to_base()
        .map_err(|_| Error::Internal(format!("Phi_{n}(P, P_sigma) is not sigma-fixed")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, Rationals};
    use crate::poly::parse_poly;

    #[test]
    fn arithmetic_function_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(6).unwrap(), 2);
        assert_eq!(euler_phi(9).unwrap(), 6);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert!(mobius(0).is_err() && euler_phi(0).is_err());
        assert_eq!(ord_p(54, 3), 3);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let cache = ArithCache::new(DEFAULT_N_MAX);
        for n in 1..=DEFAULT_N_MAX {
            assert_eq!(cache.mobius(n).unwrap(), mobius(n).unwrap(), "mu({n})");
            assert_eq!(cache.euler_phi(n).unwrap(), euler_phi(n).unwrap(), "phi({n})");
            assert_eq!(cache.divisors(n).unwrap(), divisors(n).unwrap(), "divisors({n})");
            // phi by counting units
            let count = (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64;
            assert_eq!(cache.euler_phi(n).unwrap(), count);
        }
        assert_eq!(cache.mobius(1000).unwrap(), 0);
    }

    #[test]
    fn low_order_phis_over_q() {
        let a = parse_poly("T^2", &Rationals).unwrap();
        let b = parse_poly("T + 3", &Rationals).unwrap();
        assert_eq!(phi_homog(1, &a, &b).unwrap(), &a - &b);
        assert_eq!(phi_homog(2, &a, &b).unwrap(), &a + &b);
        let six = &(&a * &a - &a * &b) + &(&b * &b);
        assert_eq!(phi_homog(6, &a, &b).unwrap(), six);
    }

    #[test]
    fn phi6_matches_mobius_quotient_expanded_by_hand() {
        // with A = T, B = 1: (T^6 - 1)(T - 1) / ((T^2 - 1)(T^3 - 1)) = T^2 - T + 1
        let q = Rationals;
        let t = Poly::t(&q);
        assert_eq!(
            phi_homog(6, &t, &Poly::one(&q)).unwrap(),
            Poly::from_i64s(&q, &[1, -1, 1])
        );
    }

    #[test]
    fn characteristic_divisors_are_refused() {
        let f3 = PrimeField::new(3).unwrap();
        let t = Poly::t(&f3);
        let one = Poly::one(&f3);
        assert!(matches!(
            phi_homog(6, &t, &one),
            Err(Error::IndexDivisibleByCharacteristic { n: 6, p: 3 })
        ));
        assert!(phi_homog(4, &t, &one).is_ok());
        assert!(phi_homog(2, &t, &Poly::zero(&f3)).is_err());
    }

    #[test]
    fn lucas_phi_two_is_the_trace() {
        let ext = QuadExt::new(Rationals, Rationals.from_i64(0), Rationals.from_i64(2)).unwrap();
        let p = parse_poly("T^2 + (1+1*w)*T + (0+1*w)", &ext).unwrap();
        let ps = p.sigma_map();
        let l2 = (&p + &ps).project_to_base().unwrap();
        assert_eq!(phi_lucas(2, &p, &ps).unwrap(), l2);
        assert!(phi_lucas(1, &p, &ps).is_err());
    }
}
