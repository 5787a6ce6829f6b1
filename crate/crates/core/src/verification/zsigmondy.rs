use rayon::prelude::*;

use super::{Report, ReportBuilder, Witness};
use crate::cyclotomic::ArithCache;
use crate::error::Result;
use crate::factor::RngState;
use crate::fields::Field;
use crate::primitive::{
    has_primitive_prime_divisor, phi_part, primitive_divisors, stripped_new_part, StripMode,
};
use crate::sequences::{SequenceKind, SequenceSpec};

pub fn theorem_statement<K: Field>(spec: &SequenceSpec<K>) -> &'static str {
    match spec.kind() {
        SequenceKind::Zsigmondy { .. } => "thm-1.3",
        SequenceKind::Bang { .. } => "cor-1.5",
        SequenceKind::Lucas { .. } => "thm-2.6",
    }
}

pub(crate) fn outcome_text(has: bool) -> String {
    if has { "primitive divisor" } else { "none" }.to_string()
}

/// Reasons the theorem's hypotheses fail for `spec`, if any.
fn hypothesis_gaps<K: Field>(spec: &SequenceSpec<K>) -> Result<Vec<Witness>> {
    let mut gaps = Vec::new();
    let p = spec.characteristic();
    if spec.generator_degree() == 0 {
        gaps.push(Witness::new("hypothesis", vec![], "a non-constant generator", "all constant"));
    }
    match spec.kind() {
        SequenceKind::Bang { .. } => {}
        SequenceKind::Zsigmondy { .. } => {
            if p == 2 {
                gaps.push(Witness::new("hypothesis", vec![], "odd or zero characteristic", "characteristic 2"));
            }
        }
        SequenceKind::Lucas { .. } => {
            if p == 2 {
                gaps.push(Witness::new("hypothesis", vec![], "characteristic other than 2", "characteristic 2"));
            }
            let (ok, g) = spec.check_admissible()?;
            if !ok {
                gaps.push(Witness::new("hypothesis", vec![], "gcd(P + P_sigma, P P_sigma) = 1", g.to_string()));
            }
        }
    }
    Ok(gaps)
}

/// First position (counted among surviving indices) from which the
/// statement guarantees a primitive divisor.
fn first_guaranteed<K: Field>(spec: &SequenceSpec<K>) -> u64 {
    match spec.kind() {
        SequenceKind::Bang { .. } => 2,
        _ => 3,
    }
}

/// Primitive divisors from the third surviving term on (from the second
/// for `f^n - 1`); terms with `p | n` are deleted.
pub fn verify_zsigmondy<K: Field>(spec: &SequenceSpec<K>, n_max: u64) -> Result<Report> {
    verify_zsigmondy_with(spec, n_max, false)
}

/// As [`verify_zsigmondy`]; with `include_deleted` the indices `p | n`
/// beyond the guaranteed position are asserted too, which is expected to
/// fail exactly there.
///
/// "Beyond the second" is read positionally in the filtered sequence.
/// The raw-index reading (`n > 2`, resp. `n > 1`) is also evaluated and
/// any index where only that reading applies is recorded.
pub fn verify_zsigmondy_with<K: Field>(
    spec: &SequenceSpec<K>,
    n_max: u64,
    include_deleted: bool,
) -> Result<Report> {
    let gaps = hypothesis_gaps(spec)?;
    let mut b = ReportBuilder::new(theorem_statement(spec), spec.summary(), [1, n_max], gaps.is_empty());
    for w in gaps {
        b.record(w);
    }
    for n in 1..=n_max {
        spec.term(n)?;
    }
    let first = first_guaranteed(spec);
    let outcomes = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let needed = include_deleted || !spec.is_deleted(n) || n <= first;
            if needed {
                Ok(Some(has_primitive_prime_divisor(spec, n)?))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<Option<bool>>>>()?;

    let mut position = 0;
    for (n, has) in (1..=n_max).zip(outcomes) {
        let deleted = spec.is_deleted(n);
        if !deleted {
            position += 1;
        }
        let Some(has) = has else { continue };
        let expected = outcome_text(true);
        let actual = outcome_text(has);
        if deleted {
            if include_deleted && n >= first {
                b.check_always(has, || {
                    Witness::new("primitive divisor at a deleted index", vec![n], expected, actual)
                });
            }
            continue;
        }
        if position >= first {
            b.check(has, || Witness::new("primitive divisor", vec![n], expected, actual));
        } else {
            let raw_applies = n >= first;
            let clause = if raw_applies {
                "primitive divisor (raw-index reading only)"
            } else {
                "primitive divisor (early position, not asserted)"
            };
            b.record(Witness::new(clause, vec![n, position], expected, actual));
        }
    }
    Ok(b.finish())
}

/// The primitive part equals monic `Phi_n` for surviving `n > 2`, and has
/// degree `phi(n) max(deg f, deg g)` when `deg f != deg g`.
pub fn verify_observation1<K: Field>(spec: &SequenceSpec<K>, n_max: u64) -> Result<Report> {
    let gaps = hypothesis_gaps(spec)?;
    let mut b = ReportBuilder::new("obs-1", spec.summary(), [1, n_max], gaps.is_empty());
    for w in gaps {
        b.record(w);
    }
    let lucas = matches!(spec.kind(), SequenceKind::Lucas { .. });
    let degrees = spec
        .homogeneous_pair()
        .map(|(f, g)| (f.deg(), g.deg()));
    let indices: Vec<u64> = (1..=n_max)
        .filter(|&n| !spec.is_deleted(n) && !(lucas && n == 1))
        .collect();
    for n in 1..=n_max {
        spec.term(n)?;
    }
    let cache = ArithCache::global();
    let rows = indices
        .par_iter()
        .map(|&n| -> Result<_> {
            let stripped = stripped_new_part(spec, n, StripMode::AllEarlier)?;
            let phi = phi_part(spec, n)?;
            Ok((n, stripped, phi))
        })
        .collect::<Result<Vec<_>>>()?;
    for (n, stripped, phi) in rows {
        let asserted = b.asserted() && n > 2;
        b.check_if(asserted, stripped == phi, || {
            Witness::new("primitive part = Phi_n", vec![n], phi.to_string(), stripped.to_string())
        });
        if let Some((df, dg)) = degrees {
            if df != dg {
                let predicted = cache.euler_phi(n)? as usize * df.max(dg);
                b.check_if(asserted, stripped.deg() == predicted, || {
                    Witness::new(
                        "deg primitive part = phi(n) max(deg f, deg g)",
                        vec![n],
                        predicted.to_string(),
                        stripped.deg().to_string(),
                    )
                });
            }
        }
    }
    Ok(b.finish())
}

/// For `n = p c <= n_max`: `term(n) = term(c)^p` and nothing primitive
/// (empty factor list over finite fields).
pub fn verify_observation2<K: Field>(spec: &SequenceSpec<K>, n_max: u64, seed: u64) -> Result<Report> {
    let p = spec.characteristic();
    let applicable = p > 0 && !matches!(spec.kind(), SequenceKind::Lucas { .. });
    let mut b = ReportBuilder::new("obs-2", spec.summary(), [1, n_max], applicable);
    if !applicable {
        b.record(Witness::new(
            "hypothesis",
            vec![],
            "f^n - g^n or f^n - 1 in positive characteristic",
            format!("{} in characteristic {p}", spec.kind_name()),
        ));
        return Ok(b.finish().with_seed(seed));
    }
    let finite = spec.field().order().is_some();
    let base = RngState::new(seed);
    for c in 1..=n_max / p {
        let n = p * c;
        let term = spec.term(n)?;
        let frob = spec.term(c)?.pow(p);
        b.check(term == frob, || {
            Witness::new("term(p c) = term(c)^p", vec![n, c], frob.to_string(), term.to_string())
        });
        let has = has_primitive_prime_divisor(spec, n)?;
        b.check(!has, || {
            Witness::new("no primitive divisor", vec![n], outcome_text(false), outcome_text(has))
        });
        if finite {
            let fac = primitive_divisors(spec, n, &mut base.fork(n))?;
            b.check(fac.is_empty(), || {
                Witness::new(
                    "empty primitive divisor list",
                    vec![n],
                    "[]",
                    format!("{:?}", fac.to_text(spec.field()).factors),
                )
            });
        }
    }
    Ok(b.finish().with_seed(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, QuadExt, Rationals};
    use crate::poly::{parse_poly, Poly};
    use crate::verification::{replay, Verdict};

    fn f3_spec() -> SequenceSpec<PrimeField> {
        let f3 = PrimeField::new(3).unwrap();
        SequenceSpec::zsigmondy(parse_poly("T^2", &f3).unwrap(), parse_poly("T + 1", &f3).unwrap())
            .unwrap()
    }

    #[test]
    fn theorem_over_f3() {
        let r = verify_zsigmondy(&f3_spec(), 30).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        assert_eq!(r.cases, 18);
    }

    #[test]
    fn negative_control_fails_exactly_at_deleted_indices() {
        let spec = f3_spec();
        let r = verify_zsigmondy_with(&spec, 30, true).unwrap();
        assert_eq!(r.verdict, Verdict::Counterexample);
        let failed: Vec<u64> = r.failures.iter().map(|w| w.indices[0]).collect();
        assert_eq!(failed, (1..=10).map(|c| 3 * c).collect::<Vec<_>>());
        assert_eq!(replay(&spec, &r).unwrap(), Some(true));
    }

    #[test]
    fn observations_over_f3() {
        let spec = f3_spec();
        let r = verify_observation1(&spec, 30).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        let r = verify_observation2(&spec, 30, 4).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        assert_eq!(r.seed, 4);
    }

    #[test]
    fn bang_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        let spec = SequenceSpec::bang(Poly::t(&f2)).unwrap();
        let r = verify_zsigmondy(&spec, 40).unwrap();
        assert_eq!(r.statement, "cor-1.5");
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
    }

    #[test]
    fn lucas_theorem_over_q_sqrt2() {
        let ext = QuadExt::new(Rationals, Rationals.from_i64(0), Rationals.from_i64(2)).unwrap();
        let spec = SequenceSpec::lucas(parse_poly("T + (0+1*w)", &ext).unwrap()).unwrap();
        let r = verify_zsigmondy(&spec, 20).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
        let r = verify_observation1(&spec, 20).unwrap();
        assert_eq!(r.verdict, Verdict::VerifiedInRange, "{r:?}");
    }

    #[test]
    fn degenerate_lucas_is_recorded_only() {
        let ext = QuadExt::new(Rationals, Rationals.from_i64(0), Rationals.from_i64(2)).unwrap();
        let p = parse_poly("T^2 + (1+1*w)*T + (0+1*w)", &ext).unwrap();
        let spec = SequenceSpec::lucas(p).unwrap();
        let r = verify_zsigmondy(&spec, 8).unwrap();
        assert_eq!(r.verdict, Verdict::RecordedOnly);
    }
}
