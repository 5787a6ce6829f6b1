use num_bigint::BigUint;

use super::require_finite;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::fields::Field;

/// Splits a monic squarefree polynomial over `F_q` into parts whose
/// irreducible factors all have the same degree `d`, using
/// `gcd(f, T^(q^d) - T)`.
pub fn distinct_degree<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, usize)>> {
    let field = f.field();
    let q = require_finite(field)?;
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let f = f.monic();
    if !f.gcd_monic(&f.derivative())?.is_one() {
        return Err(Error::Precondition(format!(
            "distinct-degree splitting needs a squarefree input, got {f}"
        )));
    }
    let q = BigUint::from(q);
    let t = Poly::t(field);
    let mut parts = Vec::new();
    let mut rest = f;
    let mut h = t.rem(&rest)?;
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.powmod(&q, &rest)?;
        let g = rest.gcd_monic(&(&h - &t))?;
        if !g.is_one() {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            parts.push((g, d));
        }
        d += 1;
    }
    if !rest.is_constant() {
        let deg = rest.deg();
        parts.push((rest, deg));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::PrimeField;

    /// Roots of a polynomial over F_p by exhaustive evaluation.
    fn roots(f: &Poly<PrimeField>, p: u64) -> Vec<u64> {
        (0..p).filter(|x| f.eval(x) == 0).collect()
    }

    #[test]
    fn quadratic_without_roots_is_one_degree_two_part() {
        let f3 = PrimeField::new(3).unwrap();
        let f = Poly::from_i64s(&f3, &[1, 0, 1]);
        assert!(roots(&f, 3).is_empty());
        assert_eq!(distinct_degree(&f).unwrap(), vec![(f, 2)]);
    }

    #[test]
    fn mixed_degrees_over_f3() {
        let f3 = PrimeField::new(3).unwrap();
        let quad = Poly::from_i64s(&f3, &[1, 0, 1]);
        let lin = Poly::from_i64s(&f3, &[1, 1]);
        assert_eq!(roots(&lin, 3), vec![2]);
        let f = &quad * &lin;
        assert_eq!(distinct_degree(&f).unwrap(), vec![(lin, 1), (quad, 2)]);
    }

    #[test]
    fn all_linears_over_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let f = Poly::from_i64s(&f5, &[0, -1, 0, 0, 0, 1]);
        assert_eq!(distinct_degree(&f).unwrap(), vec![(f, 1)]);
    }

    #[test]
    fn rejects_repeated_factors() {
        let f5 = PrimeField::new(5).unwrap();
        let f = Poly::from_i64s(&f5, &[1, 2, 1]);
        assert!(matches!(distinct_degree(&f), Err(Error::Precondition(_))));
    }
}
