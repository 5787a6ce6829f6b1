use crate::fields::Field;

/// Operand length (in coefficients) above which multiplication switches
/// from schoolbook to Karatsuba.
pub const KARATSUBA_THRESHOLD: usize = 64;

pub(crate) fn mul_coeffs<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    mul_into(field, a, b, &mut out);
    out
}

/// `out[i + j] += a[i] * b[j]`; `out` must hold `a.len() + b.len() - 1`.
fn mul_into<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem], out: &mut [F::Elem]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if short.len() <= KARATSUBA_THRESHOLD {
        schoolbook_into(field, long, short, out);
        return;
    }
    if long.len() >= 2 * short.len() {
        // unbalanced: cut the long operand into short-sized blocks
        for (k, chunk) in long.chunks(short.len()).enumerate() {
            let off = k * short.len();
            mul_into(field, chunk, short, &mut out[off..off + chunk.len() + short.len() - 1]);
        }
        return;
    }
    karatsuba_into(field, long, short, out);
}

fn schoolbook_into<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem], out: &mut [F::Elem]) {
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let prod = field.mul(x, y);
            out[i + j] = field.add(&out[i + j], &prod);
        }
    }
}

fn add_slices<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => field.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

// long.len() >= short.len() > long.len() / 2
fn karatsuba_into<F: Field>(field: &F, long: &[F::Elem], short: &[F::Elem], out: &mut [F::Elem]) {
    let m = long.len().div_ceil(2);
    let (a0, a1) = long.split_at(m);
    let (b0, b1) = short.split_at(m.min(short.len()));

    let z0 = mul_coeffs(field, a0, b0);
    let z2 = mul_coeffs(field, a1, b1);
    let sa = add_slices(field, a0, a1);
    let sb = add_slices(field, b0, b1);
    let mut z1 = mul_coeffs(field, &sa, &sb);
    for (i, c) in z0.iter().enumerate() {
        z1[i] = field.sub(&z1[i], c);
    }
    for (i, c) in z2.iter().enumerate() {
        z1[i] = field.sub(&z1[i], c);
    }

    for (i, c) in z0.iter().enumerate() {
        out[i] = field.add(&out[i], c);
    }
    for (i, c) in z1.iter().enumerate() {
        // z1 may carry trailing zeros past the product length
        if i + m < out.len() {
            out[i + m] = field.add(&out[i + m], c);
        } else {
            debug_assert!(field.is_zero(c));
        }
    }
    for (i, c) in z2.iter().enumerate() {
        out[i + 2 * m] = field.add(&out[i + 2 * m], c);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, Rationals};
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn schoolbook<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); a.len() + b.len() - 1];
        schoolbook_into(field, a, b, &mut out);
        out
    }

    #[test]
    fn karatsuba_matches_schoolbook_mod_p() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (la, lb) in [(65, 65), (100, 70), (300, 65), (257, 129), (1000, 999), (66, 500)] {
            let a: Vec<u64> = (0..la).map(|_| rng.gen_range(0..10007)).collect();
            let b: Vec<u64> = (0..lb).map(|_| rng.gen_range(0..10007)).collect();
            assert_eq!(mul_coeffs(&f, &a, &b), schoolbook(&f, &a, &b), "{la}x{lb}");
        }
    }

    #[test]
    fn karatsuba_matches_schoolbook_over_q() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a: Vec<BigRational> = (0..150)
            .map(|_| BigRational::new(rng.gen_range(-50i64..50).into(), rng.gen_range(1i64..9).into()))
            .collect();
        let b: Vec<BigRational> = (0..90)
            .map(|_| BigRational::new(rng.gen_range(-50i64..50).into(), rng.gen_range(1i64..9).into()))
            .collect();
        assert_eq!(mul_coeffs(&Rationals, &a, &b), schoolbook(&Rationals, &a, &b));
    }
}
