use rayon::prelude::*;

use super::{gcd_or_zero, Report, ReportBuilder, Witness};
use crate::error::{Error, Result};
use crate::fields::{Field, QuadExt};
use crate::poly::Poly;
use crate::primitive::has_primitive_prime_divisor;
use crate::sequences::{SequenceKind, SequenceSpec};

/// Reports for `lemma-2.1`, `lemma-2.3`, `lemma-2.4` and `lemma-2.5` on
/// one Lucas sequence, `1 <= n <= n_max`.
///
/// Exact identities are asserted unconditionally. Coprimality clauses
/// need an admissible `P` (and characteristic other than 2 for 2.4 and
/// 2.5); otherwise they are recorded.
pub fn verify_lucas_identities<K: Field>(spec: &SequenceSpec<K>, n_max: u64) -> Result<Vec<Report>> {
    let SequenceKind::Lucas { p, p_sigma } = spec.kind() else {
        return Err(Error::WrongKind {
            expected: "lucas",
            actual: spec.kind_name(),
        });
    };
    for n in 1..=2 * n_max {
        spec.lucas_terms(n)?;
    }
    let (admissible, witness_gcd) = spec.check_admissible()?;
    let char2 = spec.characteristic() == 2;
    let hypothesis = |b: &mut ReportBuilder, needs_odd: bool| {
        if !admissible {
            b.record(Witness::new(
                "hypothesis",
                vec![],
                "gcd(P + P_sigma, P P_sigma) = 1",
                witness_gcd.to_string(),
            ));
        }
        if needs_odd && char2 {
            b.record(Witness::new("hypothesis", vec![], "characteristic other than 2", "characteristic 2"));
        }
    };
    Ok(vec![
        lemma_2_1(spec, p, p_sigma, n_max, admissible, &hypothesis)?,
        lemma_2_3(spec, n_max)?,
        lemma_2_4(spec, n_max, admissible && !char2, &hypothesis)?,
        lemma_2_5(spec, n_max, admissible && !char2, &hypothesis)?,
    ])
}

fn lemma_2_1<K: Field>(
    spec: &SequenceSpec<K>,
    p: &Poly<QuadExt<K>>,
    p_sigma: &Poly<QuadExt<K>>,
    n_max: u64,
    admissible: bool,
    hypothesis: &dyn Fn(&mut ReportBuilder, bool),
) -> Result<Report> {
    let mut b = ReportBuilder::new("lemma-2.1", spec.summary(), [1, n_max], admissible);
    hypothesis(&mut b, false);
    let (trace, norm) = spec.trace_and_norm()?;
    for n in 1..=n_max {
        let l = spec.term(n)?;
        let g = gcd_or_zero(&norm, &l)?;
        b.check(g.is_one(), || {
            Witness::new("gcd(P P_sigma, L_n) = 1", vec![n], "1", g.to_string())
        });
        if n >= 2 {
            let ends = (&p.pow(n - 1) + &p_sigma.pow(n - 1)).project_to_base()?;
            let six = &trace.pow(n - 1) - &ends;
            let ok = norm.divides(&six)?;
            b.check_always(ok, || {
                Witness::new(
                    "P P_sigma divides (P + P_sigma)^(n-1) - P^(n-1) - P_sigma^(n-1)",
                    vec![n],
                    "0",
                    six.rem(&norm).map(|r| r.to_string()).unwrap_or_default(),
                )
            });
            let seven = &l - &ends;
            let ok = norm.divides(&seven)?;
            b.check_always(ok, || {
                Witness::new(
                    "P P_sigma divides L_n - P^(n-1) - P_sigma^(n-1)",
                    vec![n],
                    "0",
                    seven.rem(&norm).map(|r| r.to_string()).unwrap_or_default(),
                )
            });
        }
    }
    Ok(b.finish())
}

/// In characteristic `p > 2`: `L'_(cp) = (L'_c)^p` and
/// `L_(cp) = (L'_1)^(p-1) (L_c)^p` for `cp <= n_max`, and `L_(cp)` has no
/// primitive divisor for `c >= 2`. The printed variant
/// `(L'_1)^(p-1) L'_c` and the outcome at `n = p` are recorded.
fn lemma_2_3<K: Field>(spec: &SequenceSpec<K>, n_max: u64) -> Result<Report> {
    let p = spec.characteristic();
    let applicable = p > 2;
    let mut b = ReportBuilder::new("lemma-2.3", spec.summary(), [1, n_max], applicable);
    if !applicable {
        b.record(Witness::new("hypothesis", vec![], "characteristic p > 2", format!("characteristic {p}")));
        return Ok(b.finish());
    }
    let one = spec.lucas_terms(1)?;
    let ext = one.l_prime.field().clone();
    let l1_pow = one.l_prime.pow(p - 1);
    for c in 1..=n_max / p {
        let n = c * p;
        let big = spec.lucas_terms(n)?;
        let small = spec.lucas_terms(c)?;
        let frob = small.l_prime.pow(p);
        b.check(big.l_prime == frob, || {
            Witness::new("L'_(cp) = (L'_c)^p", vec![n, c], frob.to_string(), big.l_prime.to_string())
        });
        let embedded = Poly::embed(&ext, &big.l);
        let forced = &l1_pow * &Poly::embed(&ext, &small.l).pow(p);
        b.check(embedded == forced, || {
            Witness::new(
                "L_(cp) = (L'_1)^(p-1) (L_c)^p",
                vec![n, c],
                forced.to_string(),
                embedded.to_string(),
            )
        });
        let printed = &l1_pow * &small.l_prime;
        if printed != embedded {
            b.record(Witness::new(
                "L_(cp) = (L'_1)^(p-1) L'_c as printed (not asserted)",
                vec![n, c],
                format!("degree {}", printed.deg()),
                format!("degree {}", embedded.deg()),
            ));
        }
        let has = has_primitive_prime_divisor(spec, n)?;
        let outcome = if has { "primitive divisor" } else { "none" };
        if c == 1 {
            b.record(Witness::new("n = p outcome (not asserted)", vec![n], "either", outcome));
        } else {
            b.check(!has, || Witness::new("no primitive divisor at p | n", vec![n], "none", outcome));
        }
    }
    Ok(b.finish())
}

fn lemma_2_4<K: Field>(
    spec: &SequenceSpec<K>,
    n_max: u64,
    asserted: bool,
    hypothesis: &dyn Fn(&mut ReportBuilder, bool),
) -> Result<Report> {
    let mut b = ReportBuilder::new("lemma-2.4", spec.summary(), [1, n_max], asserted);
    hypothesis(&mut b, true);
    let (_, norm) = spec.trace_and_norm()?;
    let one = spec.lucas_terms(1)?;
    let disc = (&one.l_prime * &one.l_prime).project_to_base()?;
    let four = spec.field().from_i64(4);
    for m in 1..=n_max {
        let t = spec.lucas_terms(m)?;
        let lhs = &(&t.l_hat * &t.l_hat) - &(&disc * &(&t.l * &t.l));
        let rhs = norm.pow(m).scale(&four);
        b.check_always(lhs == rhs, || {
            Witness::new(
                "Lhat_m^2 - (L'_1)^2 L_m^2 = 4 (P P_sigma)^m",
                vec![m],
                rhs.to_string(),
                lhs.to_string(),
            )
        });
        let g = gcd_or_zero(&t.l_hat, &t.l)?;
        b.check(g.is_one(), || Witness::new("gcd(Lhat_m, L_m) = 1", vec![m], "1", g.to_string()));
    }
    Ok(b.finish())
}

/// `L_(2m) = Lhat_m L_m`, and `ord_pi L_(mn) = ord_pi L_n` for every prime
/// `pi | L_n`, checked without factoring as `gcd(L_(mn) / L_n, L_n) = 1`
/// for `m n <= n_max`. Pairs with `p | m` or `p | n` are recorded.
fn lemma_2_5<K: Field>(
    spec: &SequenceSpec<K>,
    n_max: u64,
    asserted: bool,
    hypothesis: &dyn Fn(&mut ReportBuilder, bool),
) -> Result<Report> {
    let mut b = ReportBuilder::new("lemma-2.5", spec.summary(), [1, n_max], asserted);
    hypothesis(&mut b, true);
    for m in 1..=n_max {
        let t = spec.lucas_terms(m)?;
        let double = spec.term(2 * m)?;
        let product = &t.l_hat * &t.l;
        b.check_always(double == product, || {
            Witness::new("L_(2m) = Lhat_m L_m", vec![m], product.to_string(), double.to_string())
        });
    }
    let pairs: Vec<(u64, u64)> = (2..=n_max)
        .flat_map(|m| (1..=n_max / m).map(move |n| (m, n)))
        .collect();
    let outcomes = pairs
        .par_iter()
        .map(|&(m, n)| -> Result<(u64, u64, Poly<K>)> {
            let ln = spec.term(n)?;
            let quotient = spec.term(m * n)?.exact_div(&ln)?;
            Ok((m, n, gcd_or_zero(&quotient, &ln)?))
        })
        .collect::<Result<Vec<_>>>()?;
    for (m, n, g) in outcomes {
        let coprime_to_p = !spec.is_deleted(m) && !spec.is_deleted(n);
        let clause = if coprime_to_p {
            "ord_pi L_(mn) = ord_pi L_n for pi | L_n"
        } else {
            "ord_pi L_(mn) = ord_pi L_n, p | m n (not asserted)"
        };
        b.check_if(asserted && coprime_to_p, g.is_one(), || {
            Witness::new(clause, vec![m, n], "1", g.to_string())
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
    fn admissible_linear_over_q_sqrt2() {
        let ext = QuadExt::new(Rationals, Rationals.from_i64(0), Rationals.from_i64(2)).unwrap();
        let spec = SequenceSpec::lucas(parse_poly("T + (0+1*w)", &ext).unwrap()).unwrap();
        let reports = verify_lucas_identities(&spec, 20).unwrap();
        let ids: Vec<&str> = reports.iter().map(|r| r.statement.as_str()).collect();
        assert_eq!(ids, ["lemma-2.1", "lemma-2.3", "lemma-2.4", "lemma-2.5"]);
        for r in &reports {
            assert!(r.failures.is_empty(), "{r:?}");
        }
        assert_eq!(reports[1].verdict, Verdict::RecordedOnly);
        assert_eq!(reports[2].verdict, Verdict::VerifiedInRange);
    }

    #[test]
    fn frobenius_identities_over_f25() {
        let f5 = PrimeField::new(5).unwrap();
        let ext = QuadExt::new(f5, 0, 2).unwrap();
        let spec = SequenceSpec::lucas(parse_poly("T^2 + (0+1*w)*T + 1", &ext).unwrap()).unwrap();
        assert!(spec.check_admissible().unwrap().0);
        let reports = verify_lucas_identities(&spec, 20).unwrap();
        for r in &reports {
            assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        }
        let l23 = &reports[1];
        assert!(l23.recorded.iter().any(|w| w.clause.starts_with("n = p")));
        assert!(l23.recorded.iter().any(|w| w.clause.contains("as printed")));
        // L'_10 = (L'_2)^5
        let a = spec.lucas_terms(10).unwrap().l_prime;
        assert_eq!(a, spec.lucas_terms(2).unwrap().l_prime.pow(5));
    }
}
