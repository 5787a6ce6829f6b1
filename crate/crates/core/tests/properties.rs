use num_bigint::BigInt;
use proptest::prelude::*;

use zsig_core::cyclotomic::{divisors, euler_phi, mobius, phi_homog};
use zsig_core::primitive::{stripped_new_part, StripMode};
use zsig_core::{
    factor, is_irreducible, parse_poly, Field, Poly, PrimeField, QuadExt, Rationals, RngState, SequenceKind,
    SequenceSpec,
};

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn fp_poly(p: u64, max_len: usize) -> impl Strategy<Value = Poly<PrimeField>> {
    prop::collection::vec(0..p, 0..=max_len).prop_map(move |c| Poly::new(&fp(p), c))
}

fn q_poly(max_len: usize) -> impl Strategy<Value = Poly<Rationals>> {
    prop::collection::vec(-9i64..=9, 0..=max_len).prop_map(|c| Poly::from_i64s(&Rationals, &c))
}

fn f25() -> QuadExt<PrimeField> {
    QuadExt::new(fp(5), 0, 2).unwrap()
}

fn sqrt2() -> QuadExt<Rationals> {
    QuadExt::new(Rationals, Rationals.from_i64(0), Rationals.from_i64(2)).unwrap()
}

fn finite_poly<K: Field>(field: K, max_len: usize) -> impl Strategy<Value = Poly<K>> {
    let q = field.order().expect("finite");
    prop::collection::vec(0..q, 0..=max_len)
        .prop_map(move |idx| Poly::new(&field, idx.into_iter().map(|i| field.element_at(i)).collect()))
}

fn sqrt2_elem() -> impl Strategy<Value = <QuadExt<Rationals> as Field>::Elem> {
    (-9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4).prop_map(|(a, ad, b, bd)| {
        let big = BigInt::from;
        sqrt2().ext_from_ratios((&big(a), &big(ad)), (&big(b), &big(bd))).unwrap()
    })
}

fn sqrt2_poly(max_len: usize) -> impl Strategy<Value = Poly<QuadExt<Rationals>>> {
    prop::collection::vec(sqrt2_elem(), 0..=max_len).prop_map(|c| Poly::new(&sqrt2(), c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_with_remainder(a in fp_poly(7, 9), b in fp_poly(7, 5)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn rational_division_with_remainder(a in q_poly(8), b in q_poly(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn gcd_divides_and_scales(a in fp_poly(5, 7), b in fp_poly(5, 7), c in fp_poly(5, 4)) {
        prop_assume!(!(a.is_zero() && b.is_zero()) && !c.is_zero());
        let g = a.gcd_monic(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        let gc = (&a * &c).gcd_monic(&(&b * &c)).unwrap();
        prop_assert_eq!(gc, (&g * &c).monic());
    }

    #[test]
    fn rational_gcd_matches_scaled_product(a in q_poly(5), b in q_poly(5), c in q_poly(3)) {
        prop_assume!(!(a.is_zero() && b.is_zero()) && !c.is_zero());
        let g = a.gcd_monic(&b).unwrap();
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        prop_assert_eq!((&a * &c).gcd_monic(&(&b * &c)).unwrap(), (&g * &c).monic());
    }

    #[test]
    fn print_parse_round_trip(a in fp_poly(7, 8), b in q_poly(6), c in finite_poly(f25(), 5), d in sqrt2_poly(4)) {
        prop_assert_eq!(parse_poly(&a.to_string(), &fp(7)).unwrap(), a);
        prop_assert_eq!(parse_poly(&b.to_string(), &Rationals).unwrap(), b);
        prop_assert_eq!(parse_poly(&c.to_string(), &f25()).unwrap(), c);
        prop_assert_eq!(parse_poly(&d.to_string(), &sqrt2()).unwrap(), d);
    }

    #[test]
    fn quadratic_norm_and_conjugation(a in sqrt2_elem(), b in sqrt2_elem(), i in 0u64..25, j in 0u64..25) {
        let k = sqrt2();
        prop_assert_eq!(k.norm(&k.mul(&a, &b)), Rationals.mul(&k.norm(&a), &k.norm(&b)));
        prop_assert_eq!(k.sigma(&k.sigma(&a)), a.clone());
        prop_assert_eq!(k.sigma(&k.mul(&a, &b)), k.mul(&k.sigma(&a), &k.sigma(&b)));
        if let Some(inv) = k.inv(&a) {
            prop_assert!(k.is_one(&k.mul(&a, &inv)));
        }
        let f = f25();
        let (x, y) = (f.element_at(i), f.element_at(j));
        prop_assert_eq!(f.norm(&f.mul(&x, &y)), fp(5).mul(&f.norm(&x), &f.norm(&y)));
        prop_assert_eq!(f.element_index(&x), i);
        // sigma is the Frobenius x -> x^5 on F_25
        prop_assert_eq!(f.sigma(&x), f.pow(&x, 5));
    }

    #[test]
    fn factorization_is_sound(f in fp_poly(3, 11), seed in any::<u64>()) {
        prop_assume!(!f.is_zero());
        let fac = factor(&f, &mut RngState::new(seed)).unwrap();
        prop_assert_eq!(fac.expand(&fp(3)), f.clone());
        for (i, (pi, m)) in fac.factors.iter().enumerate() {
            prop_assert!(pi.is_monic() && *m > 0);
            prop_assert!(is_irreducible(pi).unwrap());
            prop_assert!(fac.factors[..i].iter().all(|(q, _)| q != pi));
        }
        // the factor list does not depend on the seed
        let again = factor(&f, &mut RngState::new(seed ^ 0x5555)).unwrap();
        prop_assert_eq!(again, fac);
    }

    #[test]
    fn factorization_over_f4_and_f9(
        a in finite_poly(QuadExt::new(fp(2), 1, 1).unwrap(), 8),
        b in finite_poly(QuadExt::new(fp(3), 0, 2).unwrap(), 7),
        seed in any::<u64>(),
    ) {
        let mut rng = RngState::new(seed);
        if !a.is_zero() {
            prop_assert_eq!(factor(&a, &mut rng).unwrap().expand(a.field()), a.clone());
        }
        if !b.is_zero() {
            prop_assert_eq!(factor(&b, &mut rng).unwrap().expand(b.field()), b.clone());
        }
    }

    #[test]
    fn cyclotomic_factors_multiply_to_the_difference(n in 1u64..=24, a in q_poly(3), b in q_poly(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let mut product = Poly::one(&Rationals);
        for d in divisors(n).unwrap() {
            match phi_homog(d, &a, &b) {
                Ok(phi) => product = &product * &phi,
                // a^d = b^d: a and b differ by a root of unity
                Err(_) => return Ok(()),
            }
        }
        prop_assert_eq!(product, &a.pow(n) - &b.pow(n));
    }

    #[test]
    fn mobius_and_totient_sums(n in 1u64..=2000) {
        let ds = divisors(n).unwrap();
        let mu: i64 = ds.iter().map(|&d| mobius(d).unwrap() as i64).sum();
        prop_assert_eq!(mu, i64::from(n == 1));
        let phi: u64 = ds.iter().map(|&d| euler_phi(d).unwrap()).sum();
        prop_assert_eq!(phi, n);
    }

    #[test]
    fn strong_divisibility_small_grid(f in fp_poly(3, 3), g in fp_poly(3, 3)) {
        // two constants can give zero terms
        prop_assume!(!(f.is_constant() && g.is_constant()));
        let Ok(spec) = SequenceSpec::zsigmondy(f, g) else { return Ok(()) };
        for n in 1..=9u64 {
            for m in 1..n {
                let lhs = spec.term(m).unwrap().gcd_monic(&spec.term(n).unwrap()).unwrap();
                let k = num_integer::gcd(m, n);
                prop_assert_eq!(lhs, spec.term(k).unwrap().monic());
            }
        }
    }

    #[test]
    fn stripping_modes_agree_and_divide(f in fp_poly(5, 3), g in fp_poly(5, 3)) {
        // two constants can give zero terms
        prop_assume!(!(f.is_constant() && g.is_constant()));
        let Ok(spec) = SequenceSpec::zsigmondy(f, g) else { return Ok(()) };
        for n in 1..=12u64 {
            let all = stripped_new_part(&spec, n, StripMode::AllEarlier).unwrap();
            let div = stripped_new_part(&spec, n, StripMode::DivisorsOnly).unwrap();
            prop_assert_eq!(&all, &div);
            prop_assert!(all.divides(&spec.term(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn lucas_identities(p in finite_poly(QuadExt::new(fp(3), 0, 2).unwrap(), 3)) {
        prop_assume!(p.sigma_map() != p && !p.is_constant());
        let spec = SequenceSpec::lucas(p).unwrap();
        let SequenceKind::Lucas { p: big_p, .. } = spec.kind() else { unreachable!() };
        let ext = big_p.field().clone();
        for m in 1..=8u64 {
            let t = spec.lucas_terms(m).unwrap();
            prop_assert_eq!(spec.term(2 * m).unwrap(), &t.l_hat * &t.l);
            prop_assert_eq!(t.l_prime.sigma_map(), -&t.l_prime);
            prop_assert!(Poly::embed(&ext, &t.l).in_base_field());
        }
    }

    #[test]
    fn rng_streams_are_reproducible(seed in any::<u64>(), stream in any::<u64>(), bound in 1u64..1000) {
        let mut a = RngState::new(seed).fork(stream);
        let mut b = RngState::new(seed).fork(stream);
        for _ in 0..16 {
            let x = a.below(bound);
            prop_assert!(x < bound);
            prop_assert_eq!(x, b.below(bound));
        }
    }
}
