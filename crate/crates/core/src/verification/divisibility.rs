use rayon::prelude::*;

use super::{gcd_or_zero, Report, ReportBuilder, Witness};
use crate::error::Result;
use crate::fields::Field;
use crate::sequences::{SequenceKind, SequenceSpec};

pub(crate) const CLAUSE: &str = "gcd(term m, term n) = term gcd(m, n)";

pub fn strong_divisibility_statement<K: Field>(spec: &SequenceSpec<K>) -> &'static str {
    match spec.kind() {
        SequenceKind::Zsigmondy { .. } => "lemma-1.2",
        SequenceKind::Bang { .. } => "lemma-1.4",
        SequenceKind::Lucas { .. } => "lemma-2.2",
    }
}

/// `gcd(term(m), term(n)) = term(gcd(m, n))` up to units for
/// `1 <= m < n <= n_max`.
///
/// Asserted for `f^n - 1` in every characteristic and for `f^n - g^n`
/// and Lucas sequences outside characteristic 2; recorded only in
/// characteristic 2. Inadmissible Lucas parameters are still asserted:
/// there the failures are the expected counterexample.
pub fn verify_strong_divisibility<K: Field>(spec: &SequenceSpec<K>, n_max: u64) -> Result<Report> {
    let statement = strong_divisibility_statement(spec);
    let char2 = spec.characteristic() == 2;
    let asserted = match spec.kind() {
        SequenceKind::Bang { .. } => true,
        _ => !char2,
    };
    let mut b = ReportBuilder::new(statement, spec.summary(), [1, n_max], asserted);
    if !asserted {
        b.record(Witness::new(
            "hypothesis",
            vec![],
            "characteristic other than 2",
            "characteristic 2",
        ));
    }
    if let SequenceKind::Lucas { .. } = spec.kind() {
        let (ok, g) = spec.check_admissible()?;
        if !ok {
            b.record(Witness::new(
                "hypothesis",
                vec![],
                "gcd(P + P_sigma, P P_sigma) = 1",
                g.to_string(),
            ));
        }
    }
    for n in 1..=n_max {
        spec.term(n)?;
    }
    let pairs: Vec<(u64, u64)> = (1..=n_max)
        .flat_map(|n| (1..n).map(move |m| (m, n)))
        .collect();
    let outcomes = pairs
        .par_iter()
        .map(|&(m, n)| -> Result<Option<Witness>> {
            let l = num_integer::gcd(m, n);
            let expected = spec.term(l)?.monic();
            let actual = gcd_or_zero(&spec.term(m)?, &spec.term(n)?)?;
            Ok((actual != expected).then(|| {
                Witness::new(CLAUSE, vec![m, n], expected.to_string(), actual.to_string())
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    for w in outcomes {
        let ok = w.is_none();
        b.check(ok, || w.expect("witness for a failed case"));
    }
    Ok(b.finish())
}
