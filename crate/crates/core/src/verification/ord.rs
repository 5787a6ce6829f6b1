use rayon::prelude::*;

use super::{Report, ReportBuilder, Witness};
use crate::cyclotomic::{ord_p, ArithCache};
use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::fields::Field;
use crate::poly::Poly;
use crate::primitive::phi_part;
use crate::sequences::{SequenceKind, SequenceSpec};

fn check_divisor<K: Field>(spec: &SequenceSpec<K>, pi: &Poly<K>, n: u64) -> Result<()> {
    if pi.is_constant() {
        return Err(Error::ConstantDivisor);
    }
    if spec.field().order().is_some() && !is_irreducible(pi)? {
        return Err(Error::Precondition(format!("{pi} is not irreducible")));
    }
    if !pi.divides(&spec.term(n)?)? {
        return Err(Error::Precondition(format!("{pi} does not divide term {n}")));
    }
    Ok(())
}

/// Valuations along multiples: `ord_pi(term(m n))` for `1 <= m <= m_max`.
///
/// Power sequences: the prediction is `p^(ord_p m) * ord_pi(f_n)` in
/// characteristic `p` and `ord_pi(f_n)` in characteristic 0.
/// Lucas sequences: `ord_pi(L_n)`, asserted for admissible `P` outside
/// characteristic 2 when `p` divides neither `m` nor `n`; the remaining
/// cases are recorded.
pub fn verify_ord_lemma<K: Field>(
    spec: &SequenceSpec<K>,
    pi: &Poly<K>,
    n: u64,
    m_max: u64,
) -> Result<Report> {
    check_divisor(spec, pi, n)?;
    let p = spec.characteristic();
    let a = spec.term(n)?.ord_at(pi)?;
    let lucas = matches!(spec.kind(), SequenceKind::Lucas { .. });
    let statement = if lucas { "lemma-2.5" } else { "lemma-1.1" };
    let asserted = !lucas || (spec.is_admissible()? && p != 2 && !spec.is_deleted(n));
    let summary = format!("{} pi={pi} n={n}", spec.summary());
    let mut b = ReportBuilder::new(statement, summary, [1, m_max], asserted);
    let outcomes = (1..=m_max)
        .into_par_iter()
        .map(|m| Ok((m, spec.term(m * n)?.ord_at(pi)?)))
        .collect::<Result<Vec<(u64, u32)>>>()?;
    for (m, actual) in outcomes {
        let predicted = if lucas || p == 0 {
            a as u64
        } else {
            p.pow(ord_p(m, p)) * a as u64
        };
        let clause_asserted = asserted && !(lucas && spec.is_deleted(m));
        let clause = if lucas && spec.is_deleted(m) {
            "ord at m n, p | m (not asserted)"
        } else {
            "ord at m n"
        };
        b.check_if(clause_asserted, actual as u64 == predicted, || {
            Witness::new(clause, vec![m, n], predicted.to_string(), actual.to_string())
                .with_inputs(vec![pi.to_string()])
        });
    }
    Ok(b.finish())
}

/// The expansion of `f^(mn)` around `g^n`: with `a = ord_pi(f_n)` and
/// `Q = f_n / pi^a`, `pi^(2a)` divides `f_(mn) - m pi^a g^(n(m-1)) Q`.
pub fn verify_eq1<K: Field>(spec: &SequenceSpec<K>, pi: &Poly<K>, n: u64, m_max: u64) -> Result<Report> {
    let (_, g) = spec.homogeneous_pair().ok_or(Error::WrongKind {
        expected: "zsigmondy",
        actual: spec.kind_name(),
    })?;
    if pi.is_constant() {
        return Err(Error::ConstantDivisor);
    }
    let fnn = spec.term(n)?;
    let a = fnn.ord_at(pi)?;
    if a == 0 {
        return Err(Error::Precondition(format!("{pi} does not divide term {n}")));
    }
    let pia = pi.pow(a as u64);
    let q = fnn.exact_div(&pia)?;
    let pi2a = pia.pow(2);
    let field = spec.field();
    let summary = format!("{} pi={pi} n={n}", spec.summary());
    let mut b = ReportBuilder::new("eq-1", summary, [1, m_max], true);
    for m in 1..=m_max {
        let lead = (&(&pia * &g.pow(n * (m - 1))) * &q).scale(&field.from_i64(m as i64));
        let rest = &spec.term(m * n)? - &lead;
        let ok = pi2a.divides(&rest)?;
        b.check(ok, || {
            Witness::new(
                "pi^(2a) divides the tail",
                vec![m, n],
                "0",
                rest.rem(&pi2a).map(|r| r.to_string()).unwrap_or_default(),
            )
        });
    }
    Ok(b.finish())
}

/// Möbius inversion of valuations:
/// `ord_pi Phi_n = sum_{d | n} mu(n/d) ord_pi term(d)` for surviving `n`.
pub fn verify_eq5<K: Field>(spec: &SequenceSpec<K>, pi: &Poly<K>, n_max: u64) -> Result<Report> {
    if pi.is_constant() {
        return Err(Error::ConstantDivisor);
    }
    let lucas = matches!(spec.kind(), SequenceKind::Lucas { .. });
    let cache = ArithCache::global();
    let summary = format!("{} pi={pi}", spec.summary());
    let mut b = ReportBuilder::new("eq-5", summary, [1, n_max], true);
    let indices: Vec<u64> = (1..=n_max)
        .filter(|&n| !spec.is_deleted(n) && !(lucas && n == 1))
        .collect();
    let outcomes = indices
        .par_iter()
        .map(|&n| -> Result<(u64, i64, i64)> {
            let lhs = phi_part(spec, n)?.ord_at(pi)? as i64;
            let mut rhs = 0i64;
            for d in cache.divisors(n)? {
                let mu = cache.mobius(n / d)? as i64;
                if mu != 0 {
                    rhs += mu * spec.term(d)?.ord_at(pi)? as i64;
                }
            }
            Ok((n, lhs, rhs))
        })
        .collect::<Result<Vec<_>>>()?;
    for (n, lhs, rhs) in outcomes {
        b.check(lhs == rhs, || {
            Witness::new("Moebius sum of valuations", vec![n], rhs.to_string(), lhs.to_string())
        });
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, Rationals};
    use crate::poly::parse_poly;
    use crate::verification::Verdict;

    #[test]
    fn frobenius_multiplier_in_characteristic_three() {
        let f3 = PrimeField::new(3).unwrap();
        let spec = SequenceSpec::zsigmondy(parse_poly("T^2", &f3).unwrap(), parse_poly("T + 1", &f3).unwrap())
            .unwrap();
        // f_1 = T^2 + 2T + 2 is irreducible over F_3
        let pi = spec.term(1).unwrap();
        let r = verify_ord_lemma(&spec, &pi, 1, 9).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        assert_eq!(spec.term(9).unwrap().ord_at(&pi).unwrap(), 9);
        assert!(verify_ord_lemma(&spec, &Poly::t(&f3), 1, 3).is_err());
    }

    #[test]
    fn characteristic_zero_valuations_and_tail() {
        let q = Rationals;
        // f = 1 + (T - 2)^2 (T + 1), g = 1: pi = T - 2 divides f_1 twice
        let f = parse_poly("T^3 - 3*T^2 + 5", &q).unwrap();
        let spec = SequenceSpec::zsigmondy(f, Poly::one(&q)).unwrap();
        let pi = parse_poly("T - 2", &q).unwrap();
        assert_eq!(spec.term(1).unwrap().ord_at(&pi).unwrap(), 2);
        let r = verify_ord_lemma(&spec, &pi, 1, 8).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        let r = verify_eq1(&spec, &pi, 1, 8).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        let r = verify_eq5(&spec, &pi, 12).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
    }
}
