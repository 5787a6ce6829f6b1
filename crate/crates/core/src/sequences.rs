//! The three sequence families: `f^n - g^n`, `f^n - 1`, and the Lucas
//! sequence `L_n = (P^n - P_sigma^n) / (P - P_sigma)` with its companions
//! `L'_n = P^n - P_sigma^n` and `Lhat_n = P^n + P_sigma^n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::fields::{Field, QuadExt};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub enum SequenceKind<K: Field> {
    Zsigmondy { f: Poly<K>, g: Poly<K> },
    Bang { f: Poly<K> },
    Lucas {
        p: Poly<QuadExt<K>>,
        p_sigma: Poly<QuadExt<K>>,
    },
}

impl<K: Field> SequenceKind<K> {
    pub fn name(&self) -> &'static str {
        match self {
            SequenceKind::Zsigmondy { .. } => "zsigmondy",
            SequenceKind::Bang { .. } => "bang",
            SequenceKind::Lucas { .. } => "lucas",
        }
    }
}

/// `L_n` and `Lhat_n` over the base field, `L'_n` over the extension.
#[derive(Clone, Debug, PartialEq)]
pub struct LucasTerms<K: Field> {
    pub l: Poly<K>,
    pub l_prime: Poly<QuadExt<K>>,
    pub l_hat: Poly<K>,
}

/// Memo from index to value, shared by clones of a spec.
#[derive(Debug)]
pub struct TermCache<T> {
    map: Mutex<HashMap<u64, T>>,
}

impl<T: Clone> TermCache<T> {
    fn new() -> Self {
        TermCache {
            map: Mutex::new(HashMap::new()),
        }
    }

    // the lock is not held while computing; a duplicate computation is harmless
    pub(crate) fn get_or_try_insert(&self, n: u64, compute: impl FnOnce() -> Result<T>) -> Result<T> {
        if let Some(v) = self.map.lock().expect("term cache poisoned").get(&n) {
            return Ok(v.clone());
        }
        let v = compute()?;
        self.map
            .lock()
            .expect("term cache poisoned")
            .entry(n)
            .or_insert_with(|| v.clone());
        Ok(v)
    }

    pub(crate) fn get(&self, n: u64) -> Option<T> {
        self.map.lock().expect("term cache poisoned").get(&n).cloned()
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("term cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A validated sequence over the base field `K`.
#[derive(Clone, Debug)]
pub struct SequenceSpec<K: Field> {
    field: K,
    kind: SequenceKind<K>,
    terms: Arc<TermCache<Poly<K>>>,
    lucas: Arc<TermCache<LucasTerms<K>>>,
    stripped: Arc<TermCache<Poly<K>>>,
}

impl<K: Field> SequenceSpec<K> {
    fn with_kind(field: &K, kind: SequenceKind<K>) -> Self {
        SequenceSpec {
            field: field.clone(),
            kind,
            terms: Arc::new(TermCache::new()),
            lucas: Arc::new(TermCache::new()),
            stripped: Arc::new(TermCache::new()),
        }
    }

    /// `f_n = f^n - g^n` for nonzero coprime `f, g`.
    pub fn zsigmondy(f: Poly<K>, g: Poly<K>) -> Result<Self> {
        if f.field() != g.field() {
            return Err(Error::FieldMismatch(
                f.field().spec_string(),
                g.field().spec_string(),
            ));
        }
        if f.is_zero() || g.is_zero() {
            return Err(Error::Precondition("f and g must be nonzero".into()));
        }
        let d = f.gcd_monic(&g)?;
        if !d.is_one() {
            return Err(Error::Precondition(format!("f and g share the factor {d}")));
        }
        let field = f.field().clone();
        Ok(Self::with_kind(&field, SequenceKind::Zsigmondy { f, g }))
    }

    /// `h_n = f^n - 1` for a non-constant `f`.
    pub fn bang(f: Poly<K>) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::Precondition(format!("{f} is zero or a unit")));
        }
        let field = f.field().clone();
        Ok(Self::with_kind(&field, SequenceKind::Bang { f }))
    }

    /// Lucas sequence of `P` over `K(w)`. Admissibility is not required
    /// here; see [`SequenceSpec::check_admissible`].
    pub fn lucas(p: Poly<QuadExt<K>>) -> Result<Self> {
        let p_sigma = p.sigma_map();
        if p == p_sigma {
            return Err(Error::Precondition(format!(
                "P = {p} is fixed by the conjugation, so P - P_sigma = 0"
            )));
        }
        let field = p.field().base().clone();
        Ok(Self::with_kind(&field, SequenceKind::Lucas { p, p_sigma }))
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn kind(&self) -> &SequenceKind<K> {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    /// True when `p | n` in characteristic `p`.
    pub fn is_deleted(&self, n: u64) -> bool {
        let p = self.characteristic();
        p > 0 && n % p == 0
    }

    /// `max(deg f, deg g)`, `deg f` or `deg P` depending on the kind.
    pub fn generator_degree(&self) -> usize {
        match &self.kind {
            SequenceKind::Zsigmondy { f, g } => f.deg().max(g.deg()),
            SequenceKind::Bang { f } => f.deg(),
            SequenceKind::Lucas { p, .. } => p.deg(),
        }
    }

    /// The pair `(A, B)` with `term(n) = A^n - B^n` (Lucas: up to the
    /// factor `P - P_sigma`).
    pub fn homogeneous_pair(&self) -> Option<(Poly<K>, Poly<K>)> {
        match &self.kind {
            SequenceKind::Zsigmondy { f, g } => Some((f.clone(), g.clone())),
            SequenceKind::Bang { f } => Some((f.clone(), Poly::one(&self.field))),
            SequenceKind::Lucas { .. } => None,
        }
    }

    pub fn summary(&self) -> String {
        let field = self.field.spec_string();
        match &self.kind {
            SequenceKind::Zsigmondy { f, g } => format!("zsigmondy {field} f={f} g={g}"),
            SequenceKind::Bang { f } => format!("bang {field} f={f}"),
            SequenceKind::Lucas { p, .. } => {
                format!("lucas {} P={p}", p.field().spec_string())
            }
        }
    }

    fn wrong_kind(&self, expected: &'static str) -> Error {
        Error::WrongKind {
            expected,
            actual: self.kind_name(),
        }
    }

    fn check_index(n: u64) -> Result<()> {
        if n == 0 {
            Err(Error::InvalidArgument("sequence indices start at 1".into()))
        } else {
            Ok(())
        }
    }

    pub fn zsig_term(&self, n: u64) -> Result<Poly<K>> {
        Self::check_index(n)?;
        match &self.kind {
            SequenceKind::Zsigmondy { f, g } => {
                self.terms.get_or_try_insert(n, || Ok(&f.pow(n) - &g.pow(n)))
            }
            _ => Err(self.wrong_kind("zsigmondy")),
        }
    }

    pub fn bang_term(&self, n: u64) -> Result<Poly<K>> {
        Self::check_index(n)?;
        match &self.kind {
            SequenceKind::Bang { f } => self
                .terms
                .get_or_try_insert(n, || Ok(&f.pow(n) - &Poly::one(&self.field))),
            _ => Err(self.wrong_kind("bang")),
        }
    }

    /// Filled in index order from the recurrences
    /// `L_n = (P + P_sigma) L_(n-1) - P P_sigma L_(n-2)` (same for `Lhat`)
    /// over the base field, with `L'_n = (P - P_sigma) L_n`.
    pub fn lucas_terms(&self, n: u64) -> Result<LucasTerms<K>> {
        Self::check_index(n)?;
        let SequenceKind::Lucas { p, p_sigma } = &self.kind else {
            return Err(self.wrong_kind("lucas"));
        };
        if let Some(t) = self.lucas.get(n) {
            return Ok(t);
        }
        let (trace, norm) = self.trace_and_norm()?;
        let l1 = p - p_sigma;
        let ext = l1.field().clone();
        let mut prev: Option<LucasTerms<K>> = None;
        let mut prev2: Option<LucasTerms<K>> = None;
        for k in 1..=n {
            let t = self.lucas.get_or_try_insert(k, || {
                let (l, l_hat) = match (&prev, &prev2) {
                    (Some(a), Some(b)) => (
                        &(&trace * &a.l) - &(&norm * &b.l),
                        &(&trace * &a.l_hat) - &(&norm * &b.l_hat),
                    ),
                    // L_0 = 0, Lhat_0 = 2
                    (Some(a), None) => (
                        &trace * &a.l,
                        &(&trace * &a.l_hat) - &norm.scale(&self.field.from_i64(2)),
                    ),
                    _ => (Poly::one(&self.field), trace.clone()),
                };
                let l_prime = &l1 * &Poly::embed(&ext, &l);
                Ok(LucasTerms { l, l_prime, l_hat })
            })?;
            prev2 = prev.replace(t);
        }
        Ok(prev.expect("n >= 1"))
    }

    /// The `n`-th term over `K`: `f_n`, `h_n` or `L_n`.
    pub fn term(&self, n: u64) -> Result<Poly<K>> {
        match &self.kind {
            SequenceKind::Zsigmondy { .. } => self.zsig_term(n),
            SequenceKind::Bang { .. } => self.bang_term(n),
            SequenceKind::Lucas { .. } => Ok(self.lucas_terms(n)?.l),
        }
    }

    /// `P + P_sigma` and `P * P_sigma` over `K`.
    pub fn trace_and_norm(&self) -> Result<(Poly<K>, Poly<K>)> {
        let SequenceKind::Lucas { p, p_sigma } = &self.kind else {
            return Err(self.wrong_kind("lucas"));
        };
        let trace = (p + p_sigma).project_to_base()?;
        let norm = (p * p_sigma).project_to_base()?;
        Ok((trace, norm))
    }

    /// Whether `P + P_sigma` and `P * P_sigma` are coprime, together with
    /// their monic gcd.
    pub fn check_admissible(&self) -> Result<(bool, Poly<K>)> {
        let (trace, norm) = self.trace_and_norm()?;
        let g = trace.gcd_monic(&norm)?;
        Ok((g.is_one(), g))
    }

    /// `check_admissible` for Lucas specs, `true` otherwise.
    pub fn is_admissible(&self) -> Result<bool> {
        match self.kind {
            SequenceKind::Lucas { .. } => Ok(self.check_admissible()?.0),
            _ => Ok(true),
        }
    }

    /// Memo for primitive parts stripped against all earlier terms.
    pub(crate) fn stripped_cache(&self) -> &TermCache<Poly<K>> {
        &self.stripped
    }

    /// Number of cached terms.
    pub fn cached_terms(&self) -> usize {
        self.terms.len() + self.lucas.len()
    }
}

impl<K: Field> fmt::Display for SequenceSpec<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

/// Smallest `c >= 1` with `d >= 0` such that `c*n - d*m = gcd(m, n)`.
pub fn bezout_pair(m: u64, n: u64) -> (u64, u64) {
    assert!(m >= 1 && n >= 1, "indices start at 1");
    let l = num_integer::gcd(m, n);
    (1..)
        .find_map(|c: u64| {
            let x = c * n - l;
            (x % m == 0).then_some((c, x / m))
        })
        .expect("a Bezout pair exists")
}
