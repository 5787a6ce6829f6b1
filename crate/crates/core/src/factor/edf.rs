use num_bigint::BigUint;

use super::{canonical_cmp, require_finite, RngState};
use crate::error::{Error, Result};
use crate::fields::{prime_power_parts, Field};
use crate::poly::Poly;

// Each attempt splits with probability about 1/2.
const MAX_SPLIT_ATTEMPTS: usize = 256;

/// Cantor–Zassenhaus: splits a monic product of distinct irreducibles of
/// common degree `d` into its factors, in canonical order.
///
/// Odd `q` uses `a^((q^d - 1)/2) - 1`; `q = 2^e` uses the trace
/// `a + a^2 + ... + a^(2^(e*d - 1))`.
pub fn equal_degree_split<F: Field>(f: &Poly<F>, d: usize, rng: &mut RngState) -> Result<Vec<Poly<F>>> {
    let field = f.field();
    let q = require_finite(field)?;
    if d == 0 || f.is_constant() || f.deg() % d != 0 {
        return Err(Error::Precondition(format!(
            "degree {} is not a positive multiple of {d}",
            f.deg()
        )));
    }
    let exponent = (BigUint::from(q).pow(d as u32) - 1u32) >> 1;
    let mut out = Vec::new();
    split(&f.monic(), d, &exponent, rng, &mut out)?;
    out.sort_by(canonical_cmp);
    Ok(out)
}

fn random_poly<F: Field>(field: &F, below_deg: usize, rng: &mut RngState) -> Poly<F> {
    let q = field.order().expect("finite field");
    let coeffs = (0..below_deg).map(|_| field.element_at(rng.below(q))).collect();
    Poly::new(field, coeffs)
}

fn splitting_poly<F: Field>(
    a: &Poly<F>,
    f: &Poly<F>,
    d: usize,
    exponent: &BigUint,
) -> Result<Poly<F>> {
    let field = f.field();
    let (p, e) = prime_power_parts(field).expect("finite field");
    if p == 2 {
        let mut term = a.clone();
        let mut acc = a.clone();
        for _ in 1..(e as usize * d) {
            term = term.mulmod(&term, f)?;
            acc = &acc + &term;
        }
        Ok(acc)
    } else {
        Ok(&a.powmod(exponent, f)? - &Poly::one(field))
    }
}

fn split<F: Field>(
    f: &Poly<F>,
    d: usize,
    exponent: &BigUint,
    rng: &mut RngState,
    out: &mut Vec<Poly<F>>,
) -> Result<()> {
    if f.deg() == d {
        out.push(f.clone());
        return Ok(());
    }
    if f.deg() < d || f.deg() % d != 0 {
        return Err(Error::Precondition(format!(
            "split produced {f}, whose degree is not a multiple of {d}"
        )));
    }
    for _ in 0..MAX_SPLIT_ATTEMPTS {
        let a = random_poly(f.field(), f.deg(), rng);
        if a.is_constant() {
            continue;
        }
        let b = splitting_poly(&a, f, d, exponent)?;
        let g = f.gcd_monic(&b)?;
        if !g.is_constant() && g.deg() < f.deg() {
            let h = f.exact_div(&g)?;
            split(&g, d, exponent, rng, out)?;
            split(&h, d, exponent, rng, out)?;
            return Ok(());
        }
    }
    Err(Error::Precondition(format!(
        "{f} did not split into degree-{d} factors"
    )))
}
