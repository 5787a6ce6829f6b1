//! Primitive parts, primitive prime divisors and per-index records.
//!
//! Primitive parts are obtained by gcd-stripping: every irreducible
//! shared with an earlier term is removed to full multiplicity. This needs
//! no factorization and so works over the rationals as well; listing the
//! primitive irreducibles needs a finite field.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{phi_homog, phi_lucas, ArithCache};
use crate::error::{Error, Result};
use crate::factor::{factor, require_finite, Factorization, FactorizationText, RngState};
use crate::fields::Field;
use crate::poly::Poly;
use crate::sequences::{SequenceKind, SequenceSpec};

/// Which earlier terms are stripped from `term(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StripMode {
    /// Every `m < n`; this is the definition of primitivity.
    AllEarlier,
    /// Proper divisors `m | n` only; equal to `AllEarlier` for strong
    /// divisibility sequences.
    DivisorsOnly,
}

impl StripMode {
    pub fn as_str(self) -> &'static str {
        match self {
            StripMode::AllEarlier => "all-earlier",
            StripMode::DivisorsOnly => "divisors-only",
        }
    }
}

impl std::str::FromStr for StripMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-earlier" | "all_earlier" => Ok(StripMode::AllEarlier),
            "divisors-only" | "divisors_only" => Ok(StripMode::DivisorsOnly),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

/// `term(n)` with every factor of the selected earlier terms removed,
/// made monic.
pub fn stripped_new_part<K: Field>(spec: &SequenceSpec<K>, n: u64, mode: StripMode) -> Result<Poly<K>> {
    match mode {
        StripMode::AllEarlier => spec
            .stripped_cache()
            .get_or_try_insert(n, || strip(spec, n, mode)),
        StripMode::DivisorsOnly => strip(spec, n, mode),
    }
}

fn strip<K: Field>(spec: &SequenceSpec<K>, n: u64, mode: StripMode) -> Result<Poly<K>> {
    let term = spec.term(n)?;
    if term.is_zero() {
        return Err(Error::InvalidArgument(format!("term {n} is zero")));
    }
    let divs = ArithCache::global().divisors(n)?;
    let proper = divs.iter().copied().filter(|&d| d < n);
    // divisors first: they remove most of the old factors cheaply
    let order: Vec<u64> = match mode {
        StripMode::DivisorsOnly => proper.collect(),
        StripMode::AllEarlier => proper
            .chain((1..n).filter(|m| n % m != 0))
            .collect(),
    };
    let mut cur = term;
    for m in order {
        if cur.is_constant() {
            break;
        }
        let earlier = spec.term(m)?;
        cur = cur.strip_common(&earlier)?;
    }
    Ok(cur.monic())
}

pub fn has_primitive_prime_divisor<K: Field>(spec: &SequenceSpec<K>, n: u64) -> Result<bool> {
    Ok(!stripped_new_part(spec, n, StripMode::AllEarlier)?.is_constant())
}

/// `Phi_n(f, g)` (or `Phi_n(f, 1)`, or `Phi_n(P, P_sigma)` projected),
/// made monic.
pub fn phi_part<K: Field>(spec: &SequenceSpec<K>, n: u64) -> Result<Poly<K>> {
    let phi = match spec.kind() {
        SequenceKind::Zsigmondy { f, g } => phi_homog(n, f, g)?,
        SequenceKind::Bang { f } => phi_homog(n, f, &Poly::one(spec.field()))?,
        SequenceKind::Lucas { p, p_sigma } => phi_lucas(n, p, p_sigma)?,
    };
    Ok(phi.monic())
}

/// Monic `Phi_n` and whether it equals the stripped primitive part.
pub fn primitive_part_via_phi<K: Field>(spec: &SequenceSpec<K>, n: u64) -> Result<(Poly<K>, bool)> {
    let phi = phi_part(spec, n)?;
    let stripped = stripped_new_part(spec, n, StripMode::AllEarlier)?;
    let agree = phi == stripped;
    Ok((phi, agree))
}

/// Factorization of the primitive part. Every listed irreducible is
/// re-checked to divide `term(n)` and no earlier term.
pub fn primitive_divisors<K: Field>(
    spec: &SequenceSpec<K>,
    n: u64,
    rng: &mut RngState,
) -> Result<Factorization<K>> {
    require_finite(spec.field())?;
    let part = stripped_new_part(spec, n, StripMode::AllEarlier)?;
    let fac = factor(&part, rng)?;
    let term = spec.term(n)?;
    for (pi, _) in &fac.factors {
        if !pi.divides(&term)? {
            return Err(Error::Internal(format!("{pi} does not divide term {n}")));
        }
        for m in 1..n {
            if pi.divides(&spec.term(m)?)? {
                return Err(Error::Internal(format!(
                    "{pi} divides the earlier term {m}"
                )));
            }
        }
    }
    Ok(fac)
}

/// Actual and predicted degree of the primitive part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub n: u64,
    pub actual: usize,
    pub predicted: usize,
    /// `deg f != deg g` and `p` does not divide `n`.
    pub hypotheses_hold: bool,
}

impl DegreeReport {
    pub fn matches(&self) -> bool {
        self.actual == self.predicted
    }
}

/// `(deg f_n^*, phi(n) * max(deg f, deg g))` for the power sequences.
pub fn primitive_degree_report<K: Field>(spec: &SequenceSpec<K>, n: u64) -> Result<DegreeReport> {
    let (f, g) = spec
        .homogeneous_pair()
        .ok_or(Error::WrongKind {
            expected: "zsigmondy",
            actual: spec.kind_name(),
        })?;
    let actual = stripped_new_part(spec, n, StripMode::AllEarlier)?.deg();
    let predicted = ArithCache::global().euler_phi(n)? as usize * f.deg().max(g.deg());
    Ok(DegreeReport {
        n,
        actual,
        predicted,
        hypotheses_hold: f.deg() != g.deg() && !spec.is_deleted(n),
    })
}

/// One row of a survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveRecord {
    pub n: u64,
    pub skipped: bool,
    pub deg_term: usize,
    pub primitive_part: String,
    pub deg_primitive_part: usize,
    pub has_primitive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_phi: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primitive_factors: Option<FactorizationText>,
}

/// Record for index `n`. `matches_phi` is absent where `Phi_n` is not
/// defined (deleted indices, Lucas `n = 1`); factors are listed over
/// finite fields only.
pub fn primitive_record<K: Field>(
    spec: &SequenceSpec<K>,
    n: u64,
    mode: StripMode,
    rng: &mut RngState,
) -> Result<PrimitiveRecord> {
    let term = spec.term(n)?;
    let part = stripped_new_part(spec, n, mode)?;
    let skipped = spec.is_deleted(n);
    let lucas_one = matches!(spec.kind(), SequenceKind::Lucas { .. }) && n == 1;
    let matches_phi = if skipped || lucas_one {
        None
    } else {
        Some(phi_part(spec, n)? == part)
    };
    let primitive_factors = if spec.field().order().is_some() {
        Some(factor(&part, rng)?.to_text(spec.field()))
    } else {
        None
    };
    Ok(PrimitiveRecord {
        n,
        skipped,
        deg_term: term.deg(),
        primitive_part: part.to_string(),
        deg_primitive_part: part.deg(),
        has_primitive: !part.is_constant(),
        matches_phi,
        primitive_factors,
    })
}

/// Records for `1..=max_n`, computed in parallel, ordered by `n`. Each
/// index draws from its own fork of the seed, so the output does not
/// depend on the thread count.
pub fn survey<K: Field>(
    spec: &SequenceSpec<K>,
    max_n: u64,
    mode: StripMode,
    seed: u64,
) -> Result<Vec<PrimitiveRecord>> {
    let base = RngState::new(seed);
    // warm the cache in order so workers mostly read
    for n in 1..=max_n {
        spec.term(n)?;
    }
    (1..=max_n)
        .into_par_iter()
        .map(|n| primitive_record(spec, n, mode, &mut base.fork(n)))
        .collect()
}
