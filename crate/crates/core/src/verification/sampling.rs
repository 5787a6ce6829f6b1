//! Seeded random inputs for sweeps and campaigns. Every sampler consumes
//! draws from the given [`RngState`] only, so a seed fixes the inputs.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::factor::{factor, RngState};
use crate::fields::{Field, QuadExt};
use crate::poly::Poly;
use crate::sequences::SequenceSpec;

/// Integer coefficients of samples over infinite fields lie in
/// `-COEFF_BOUND..=COEFF_BOUND`.
pub const COEFF_BOUND: u64 = 9;

// rejection loops give up after this many draws
const MAX_TRIES: usize = 100_000;

fn small_int(rng: &mut RngState) -> i64 {
    rng.below(2 * COEFF_BOUND + 1) as i64 - COEFF_BOUND as i64
}

fn random_elem<F: Field>(field: &F, rng: &mut RngState) -> F::Elem {
    match field.order() {
        Some(q) => field.element_at(rng.below(q)),
        None if field.is_extension() => {
            // a + b*w with integer a, b
            let a = BigInt::from(small_int(rng));
            let b = BigInt::from(small_int(rng));
            let one = BigInt::from(1);
            field
                .ext_from_ratios((&a, &one), (&b, &one))
                .expect("integer components")
        }
        None => field.from_i64(small_int(rng)),
    }
}

/// Uniform coefficient tuple of length `max_deg + 1`.
pub fn random_poly<F: Field>(field: &F, max_deg: usize, rng: &mut RngState) -> Poly<F> {
    let coeffs = (0..=max_deg).map(|_| random_elem(field, rng)).collect();
    Poly::new(field, coeffs)
}

fn give_up(what: &str) -> Error {
    Error::Precondition(format!("no {what} found after {MAX_TRIES} draws"))
}

/// Nonzero coprime `(f, g)`, not both constant.
pub fn random_coprime_pair<F: Field>(field: &F, max_deg: usize, rng: &mut RngState) -> Result<(Poly<F>, Poly<F>)> {
    for _ in 0..MAX_TRIES {
        let f = random_poly(field, max_deg, rng);
        let g = random_poly(field, max_deg, rng);
        if f.is_zero() || g.is_zero() || (f.is_constant() && g.is_constant()) {
            continue;
        }
        if f.gcd_monic(&g)?.is_one() {
            return Ok((f, g));
        }
    }
    Err(give_up("coprime pair"))
}

/// Non-constant polynomial of degree at most `max_deg`.
pub fn random_nonunit<F: Field>(field: &F, max_deg: usize, rng: &mut RngState) -> Result<Poly<F>> {
    for _ in 0..MAX_TRIES {
        let f = random_poly(field, max_deg, rng);
        if !f.is_constant() {
            return Ok(f);
        }
    }
    Err(give_up("non-constant polynomial"))
}

/// Non-constant `P` over the extension with `P != P_sigma` and
/// `gcd(P + P_sigma, P P_sigma) = 1`.
pub fn random_admissible_lucas<K: Field>(
    ext: &QuadExt<K>,
    max_deg: usize,
    rng: &mut RngState,
) -> Result<SequenceSpec<K>> {
    for _ in 0..MAX_TRIES {
        let p = random_poly(ext, max_deg, rng);
        if p.is_constant() || p == p.sigma_map() {
            continue;
        }
        let spec = SequenceSpec::lucas(p)?;
        if spec.check_admissible()?.0 {
            return Ok(spec);
        }
    }
    Err(give_up("admissible Lucas parameter"))
}

/// A random irreducible factor of `term(n)` over a finite field, or
/// `None` when the term is constant.
pub fn sample_divisor<K: Field>(spec: &SequenceSpec<K>, n: u64, rng: &mut RngState) -> Result<Option<Poly<K>>> {
    let fac = factor(&spec.term(n)?, rng)?;
    if fac.factors.is_empty() {
        return Ok(None);
    }
    let i = rng.below(fac.factors.len() as u64) as usize;
    Ok(Some(fac.factors[i].0.clone()))
}
