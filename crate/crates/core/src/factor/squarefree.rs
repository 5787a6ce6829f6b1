use super::require_finite;
use crate::error::{Error, Result};
use crate::fields::{prime_power_parts, Field};
use crate::poly::Poly;

/// Squarefree decomposition of a monic non-constant polynomial over
/// `F_q`: pairwise coprime squarefree parts with their multiplicities,
/// ordered by multiplicity.
///
/// When the derivative vanishes the input is `u(T^p)`, and the algorithm
/// continues on its `p`-th root (`c -> c^(q/p)` on coefficients).
pub fn squarefree_decompose<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, u32)>> {
    let field = f.field();
    require_finite(field)?;
    if f.is_constant() {
        return Err(Error::InvalidArgument(
            "squarefree decomposition of a constant".into(),
        ));
    }
    let f = f.monic();
    let mut out = decompose(&f)?;
    out.sort_by_key(|(_, m)| *m);
    Ok(out)
}

fn decompose<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, u32)>> {
    let field = f.field();
    let (p, _) = prime_power_parts(field).expect("finite field");
    let mut out = Vec::new();

    let mut c = f.gcd_monic(&f.derivative())?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd_monic(&c)?;
        let z = w.exact_div(&y)?;
        if !z.is_constant() {
            out.push((z.monic(), i));
        }
        c = c.exact_div(&y)?;
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        let root = pth_root(&c, p);
        for (g, m) in decompose(&root.monic())? {
            out.push((g, m * p as u32));
        }
    }
    Ok(out)
}

/// `p`-th root of a polynomial whose derivative vanishes.
fn pth_root<F: Field>(c: &Poly<F>, p: u64) -> Poly<F> {
    let field = c.field();
    let q = field.order().expect("finite field");
    let root_exp = q / p;
    let coeffs = c
        .coeffs()
        .iter()
        .step_by(p as usize)
        .map(|a| field.pow(a, root_exp))
        .collect();
    Poly::new(field, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, QuadExt};

    #[test]
    fn mixed_multiplicities_over_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let t1 = Poly::from_i64s(&f5, &[1, 1]);
        let t2 = Poly::from_i64s(&f5, &[2, 1]);
        let f = &t1.pow(2) * &t2;
        assert_eq!(squarefree_decompose(&f).unwrap(), vec![(t2, 1), (t1, 2)]);
    }

    #[test]
    fn frobenius_branch_over_f3() {
        let f3 = PrimeField::new(3).unwrap();
        let f = Poly::from_i64s(&f3, &[1, 0, 0, 1]);
        assert_eq!(
            squarefree_decompose(&f).unwrap(),
            vec![(Poly::from_i64s(&f3, &[1, 1]), 3)]
        );
    }

    #[test]
    fn squarefree_input_is_its_own_decomposition() {
        let f7 = PrimeField::new(7).unwrap();
        let f = Poly::from_i64s(&f7, &[3, 1, 0, 1]);
        assert_eq!(squarefree_decompose(&f).unwrap(), vec![(f, 1)]);
    }

    #[test]
    fn multiplicity_p_plus_one_and_p_squared() {
        let f3 = PrimeField::new(3).unwrap();
        let a = Poly::from_i64s(&f3, &[1, 1]);
        let b = Poly::from_i64s(&f3, &[1, 0, 1]);
        let f = &a.pow(4) * &b.pow(9);
        assert_eq!(squarefree_decompose(&f).unwrap(), vec![(a, 4), (b, 9)]);
    }

    #[test]
    fn pth_root_in_f4_uses_coefficient_roots() {
        // over F_4 = F_2(w), (T + w)^2 = T^2 + w^2 needs sqrt(w^2) = w
        let f2 = PrimeField::new(2).unwrap();
        let f4 = QuadExt::new(f2, 1, 1).unwrap();
        let lin = Poly::new(&f4, vec![f4.generator(), f4.one()]);
        let sq = lin.pow(2);
        assert_eq!(squarefree_decompose(&sq).unwrap(), vec![(lin, 2)]);
    }

    #[test]
    fn constants_are_rejected() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(squarefree_decompose(&Poly::from_i64s(&f3, &[2])).is_err());
    }
}
