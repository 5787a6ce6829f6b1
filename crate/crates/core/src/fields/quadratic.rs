use std::sync::Arc;

use num_bigint::BigInt;

use super::Field;
use crate::error::{Error, Result};

/// `c0 + c1*w` in a quadratic extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem<E> {
    pub c0: E,
    pub c1: E,
}

#[derive(Debug, PartialEq)]
struct QuadData<K: Field> {
    base: K,
    s: K::Elem,
    t: K::Elem,
}

/// The degree-2 extension `k(w)` with `w^2 = s*w + t`, where
/// `x^2 - s*x - t` has no root in `k`.
///
/// The conjugation `sigma` is the unique non-identity automorphism over
/// `k`; it sends `w` to the other root `s - w`.
#[derive(Debug)]
pub struct QuadExt<K: Field> {
    data: Arc<QuadData<K>>,
}

impl<K: Field> Clone for QuadExt<K> {
    fn clone(&self) -> Self {
        QuadExt {
            data: Arc::clone(&self.data),
        }
    }
}

impl<K: Field> PartialEq for QuadExt<K> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl<K: Field> QuadExt<K> {
    pub fn new(base: K, s: K::Elem, t: K::Elem) -> Result<Self> {
        if base.is_extension() {
            return Err(Error::NestedExtension);
        }
        if base.has_quadratic_root(&s, &t)? {
            return Err(Error::ReducibleExtension {
                s: base.format_elem(&s),
                t: base.format_elem(&t),
            });
        }
        Ok(QuadExt {
            data: Arc::new(QuadData { base, s, t }),
        })
    }

    pub fn base(&self) -> &K {
        &self.data.base
    }

    /// The pair `(s, t)` with `w^2 = s*w + t`.
    pub fn min_poly(&self) -> (&K::Elem, &K::Elem) {
        (&self.data.s, &self.data.t)
    }

    pub fn generator(&self) -> QuadElem<K::Elem> {
        QuadElem {
            c0: self.base().zero(),
            c1: self.base().one(),
        }
    }

    pub fn embed(&self, a: K::Elem) -> QuadElem<K::Elem> {
        QuadElem {
            c0: a,
            c1: self.base().zero(),
        }
    }

    pub fn make(&self, c0: K::Elem, c1: K::Elem) -> QuadElem<K::Elem> {
        QuadElem { c0, c1 }
    }

    /// `sigma(c0 + c1*w) = (c0 + c1*s) - c1*w`.
    pub fn sigma(&self, a: &QuadElem<K::Elem>) -> QuadElem<K::Elem> {
        let k = self.base();
        QuadElem {
            c0: k.add(&a.c0, &k.mul(&a.c1, &self.data.s)),
            c1: k.neg(&a.c1),
        }
    }

    /// Norm `a * sigma(a)`, an element of the base field.
    pub fn norm(&self, a: &QuadElem<K::Elem>) -> K::Elem {
        let k = self.base();
        // c0^2 + c0*c1*s - c1^2*t
        let c0c0 = k.mul(&a.c0, &a.c0);
        let c0c1s = k.mul(&k.mul(&a.c0, &a.c1), &self.data.s);
        let c1c1t = k.mul(&k.mul(&a.c1, &a.c1), &self.data.t);
        k.sub(&k.add(&c0c0, &c0c1s), &c1c1t)
    }

    /// The base-field value of a sigma-fixed element.
    pub fn project(&self, a: &QuadElem<K::Elem>) -> Option<K::Elem> {
        if self.base().is_zero(&a.c1) {
            Some(a.c0.clone())
        } else {
            None
        }
    }
}

impl<K: Field> Field for QuadExt<K> {
    type Elem = QuadElem<K::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base().zero())
    }

    fn one(&self) -> Self::Elem {
        self.embed(self.base().one())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(self.base().from_i64(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        Ok(self.embed(self.base().from_ratio(num, den)?))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = self.base();
        QuadElem {
            c0: k.add(&a.c0, &b.c0),
            c1: k.add(&a.c1, &b.c1),
        }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = self.base();
        QuadElem {
            c0: k.sub(&a.c0, &b.c0),
            c1: k.sub(&a.c1, &b.c1),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = self.base();
        // (a0 + a1 w)(b0 + b1 w) = a0 b0 + a1 b1 t + (a0 b1 + a1 b0 + a1 b1 s) w
        let hi = k.mul(&a.c1, &b.c1);
        let c0 = k.add(&k.mul(&a.c0, &b.c0), &k.mul(&hi, &self.data.t));
        let cross = k.add(&k.mul(&a.c0, &b.c1), &k.mul(&a.c1, &b.c0));
        let c1 = k.add(&cross, &k.mul(&hi, &self.data.s));
        QuadElem { c0, c1 }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        let k = self.base();
        QuadElem {
            c0: k.neg(&a.c0),
            c1: k.neg(&a.c1),
        }
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let n = self.norm(a);
        let n_inv = self.base().inv(&n)?;
        let conj = self.sigma(a);
        let k = self.base();
        Some(QuadElem {
            c0: k.mul(&conj.c0, &n_inv),
            c1: k.mul(&conj.c1, &n_inv),
        })
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        let k = self.base();
        k.is_zero(&a.c0) && k.is_zero(&a.c1)
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        let k = self.base();
        k.is_one(&a.c0) && k.is_zero(&a.c1)
    }

    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    fn order(&self) -> Option<u64> {
        self.base().order().map(|q| q * q)
    }

    fn element_index(&self, a: &Self::Elem) -> u64 {
        let q = self.base().order().expect("finite base field");
        let k = self.base();
        k.element_index(&a.c0) + q * k.element_index(&a.c1)
    }

    fn element_at(&self, index: u64) -> Self::Elem {
        let q = self.base().order().expect("finite base field");
        let k = self.base();
        QuadElem {
            c0: k.element_at(index % q),
            c1: k.element_at(index / q),
        }
    }

    fn is_extension(&self) -> bool {
        true
    }

    fn has_quadratic_root(&self, _s: &Self::Elem, _t: &Self::Elem) -> Result<bool> {
        Err(Error::NestedExtension)
    }

    fn ext_from_ratios(&self, a: (&BigInt, &BigInt), b: (&BigInt, &BigInt)) -> Result<Self::Elem> {
        let k = self.base();
        Ok(QuadElem {
            c0: k.from_ratio(a.0, a.1)?,
            c1: k.from_ratio(b.0, b.1)?,
        })
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        let k = self.base();
        let c0 = k.format_elem(&a.c0);
        let c1 = k.format_elem(&a.c1);
        match c1.strip_prefix('-') {
            Some(mag) => format!("({c0}-{mag}*w)"),
            None => format!("({c0}+{c1}*w)"),
        }
    }

    fn spec_string(&self) -> String {
        let k = self.base();
        let (s, t) = self.min_poly();
        match k.order() {
            Some(p) => format!("fp2:{}:{}:{}", p, k.format_elem(s), k.format_elem(t)),
            None => {
                if k.is_zero(s) {
                    format!("q-sqrt:{}", k.format_elem(t))
                } else {
                    format!("q-ext:{}:{}", ratio_text(&k.format_elem(s)), ratio_text(&k.format_elem(t)))
                }
            }
        }
    }
}

fn ratio_text(s: &str) -> String {
    if s.contains('/') {
        s.to_string()
    } else {
        format!("{s}/1")
    }
}
