use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sampling::random_coprime_pair;
use super::{gcd_or_zero, Report, ReportBuilder, Witness};
use crate::error::{Error, Result};
use crate::factor::RngState;
use crate::fields::Field;
use crate::poly::Poly;
use crate::primitive::has_primitive_prime_divisor;
use crate::sequences::SequenceSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Char2Params {
    pub max_deg: usize,
    pub count: usize,
    pub n_max: u64,
    pub seed: u64,
}

/// Number of `f^n - 1` controls run alongside the campaign.
const CONTROLS: usize = 10;

/// Randomized campaign for `f^n - g^n` with `g != 1` in characteristic 2,
/// where strong divisibility is not known.
///
/// For each sampled coprime pair the strong divisibility grid and the
/// primitive-divisor property are evaluated on odd indices. Their outcomes
/// are recorded, never asserted, so the verdict is `recorded-only`. The
/// `f^n - 1` controls on the first sampled `f` are asserted.
pub fn explore_char2<K: Field>(field: &K, params: Char2Params) -> Result<Report> {
    if field.characteristic() != 2 || field.order().is_none() {
        return Err(Error::Precondition(format!(
            "{} is not a finite field of characteristic 2",
            field.spec_string()
        )));
    }
    let mut rng = RngState::new(params.seed);
    let mut pairs = Vec::with_capacity(params.count);
    while pairs.len() < params.count {
        let (f, g) = random_coprime_pair(field, params.max_deg, &mut rng)?;
        if !g.is_one() {
            pairs.push((f, g));
        }
    }
    let summary = format!(
        "char2 {} deg<={} pairs={} odd n<={}",
        field.spec_string(),
        params.max_deg,
        params.count,
        params.n_max
    );
    let mut b = ReportBuilder::new("char2-remark", summary, [1, params.n_max], false);
    let odd: Vec<u64> = (1..=params.n_max).step_by(2).collect();

    let campaign = pairs
        .par_iter()
        .map(|(f, g)| {
            let spec = SequenceSpec::zsigmondy(f.clone(), g.clone())?;
            examine(&spec, &odd, 3)
        })
        .collect::<Result<Vec<_>>>()?;
    for ((f, g), outcomes) in pairs.iter().zip(campaign) {
        for o in outcomes {
            b.check_if(false, o.ok, || o.witness.with_inputs(vec![f.to_string(), g.to_string()]));
        }
    }

    let controls: Vec<Poly<K>> = pairs
        .iter()
        .take(CONTROLS)
        .map(|(f, g)| if f.is_constant() { g.clone() } else { f.clone() })
        .collect();
    let checked = controls
        .par_iter()
        .map(|f| {
            let spec = SequenceSpec::bang(f.clone())?;
            examine(&spec, &odd, 2)
        })
        .collect::<Result<Vec<_>>>()?;
    for (f, outcomes) in controls.iter().zip(checked) {
        for o in outcomes {
            let w = o.witness;
            let w = Witness { clause: format!("control g = 1: {}", w.clause), ..w };
            b.check_always(o.ok, || w.with_inputs(vec![f.to_string(), "1".into()]));
        }
    }
    Ok(b.finish().with_seed(params.seed))
}

struct Outcome {
    ok: bool,
    witness: Witness,
}

/// Strong divisibility on all pairs of `indices` and primitive divisors
/// from position `first` on (the indices are the surviving odd ones).
/// Positions before `first` with `n > 2` are also evaluated, as the
/// raw-index reading.
fn examine<K: Field>(spec: &SequenceSpec<K>, indices: &[u64], first: usize) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for (j, &n) in indices.iter().enumerate() {
        for &m in &indices[..j] {
            let expected = spec.term(num_integer::gcd(m, n))?.monic();
            let actual = gcd_or_zero(&spec.term(m)?, &spec.term(n)?)?;
            out.push(Outcome {
                ok: actual == expected,
                witness: Witness::new(
                    "gcd(term m, term n) = term gcd(m, n)",
                    vec![m, n],
                    expected.to_string(),
                    actual.to_string(),
                ),
            });
        }
    }
    for (j, &n) in indices.iter().enumerate() {
        let position = j + 1;
        let clause = if position >= first {
            "primitive divisor"
        } else if n > 2 {
            "primitive divisor (raw-index reading)"
        } else {
            continue;
        };
        let has = has_primitive_prime_divisor(spec, n)?;
        out.push(Outcome {
            ok: has,
            witness: Witness::new(clause, vec![n], "primitive divisor", if has { "primitive divisor" } else { "none" }),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, QuadExt};
    use crate::verification::Verdict;

    #[test]
    fn small_campaign_is_recorded_only_and_reproducible() {
        let f2 = PrimeField::new(2).unwrap();
        let params = Char2Params { max_deg: 2, count: 12, n_max: 11, seed: 8 };
        let a = explore_char2(&f2, params).unwrap();
        let b = explore_char2(&f2, params).unwrap();
        assert_eq!(a.verdict, Verdict::RecordedOnly);
        assert_eq!(a.to_json(false), b.to_json(false));
        assert!(a.cases > 0);
    }

    #[test]
    fn f4_base_and_odd_characteristic() {
        let f2 = PrimeField::new(2).unwrap();
        let f4 = QuadExt::new(f2, 1, 1).unwrap();
        let params = Char2Params { max_deg: 1, count: 4, n_max: 7, seed: 1 };
        assert_eq!(explore_char2(&f4, params).unwrap().verdict, Verdict::RecordedOnly);
        assert!(explore_char2(&PrimeField::new(3).unwrap(), params).is_err());
    }
}
