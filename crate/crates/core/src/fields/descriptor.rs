use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, PrimeField, QuadExt, Rationals};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    PrimeField,
    Rationals,
    QuadExt,
}

/// A validated coefficient field chosen at run time.
///
/// Grammar: `fp:<p>` | `q` | `q-sqrt:<d>` | `fp2:<p>:<s>:<t>` |
/// `q-ext:<s_num>/<s_den>:<t_num>/<t_den>`. The extension variants mean
/// `w^2 = s*w + t` (`q-sqrt:d` is `s = 0, t = d`).
#[derive(Clone, Debug, PartialEq)]
pub enum FieldDescriptor {
    Prime(PrimeField),
    Rationals(Rationals),
    QuadPrime(QuadExt<PrimeField>),
    QuadRational(QuadExt<Rationals>),
}

impl FieldDescriptor {
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::FieldSpec(spec.to_string());
        let parts: Vec<&str> = spec.trim().split(':').collect();
        match parts.as_slice() {
            ["q"] => Ok(FieldDescriptor::Rationals(Rationals)),
            ["fp", p] => Ok(FieldDescriptor::Prime(PrimeField::new(parse_u64(p).ok_or_else(bad)?)?)),
            ["q-sqrt", d] => {
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                let ext = QuadExt::new(
                    Rationals,
                    BigRational::from_integer(0.into()),
                    BigRational::from_integer(d),
                )?;
                Ok(FieldDescriptor::QuadRational(ext))
            }
            ["fp2", p, s, t] => {
                let base = PrimeField::new(parse_u64(p).ok_or_else(bad)?)?;
                let s: i64 = s.trim().parse().map_err(|_| bad())?;
                let t: i64 = t.trim().parse().map_err(|_| bad())?;
                let ext = QuadExt::new(base, base.from_i64(s), base.from_i64(t))?;
                Ok(FieldDescriptor::QuadPrime(ext))
            }
            ["q-ext", s, t] => {
                let s = parse_ratio(s).ok_or_else(bad)?;
                let t = parse_ratio(t).ok_or_else(bad)?;
                Ok(FieldDescriptor::QuadRational(QuadExt::new(Rationals, s, t)?))
            }
            [kind, ..] if kind.starts_with("fp2") || kind.starts_with("q-") => {
                // extension-of-extension requests such as `fp2:fp2:...`
                if parts.iter().skip(1).any(|p| p.starts_with("fp2") || p.starts_with("q-")) {
                    Err(Error::NestedExtension)
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldDescriptor::Prime(_) => FieldKind::PrimeField,
            FieldDescriptor::Rationals(_) => FieldKind::Rationals,
            FieldDescriptor::QuadPrime(_) | FieldDescriptor::QuadRational(_) => FieldKind::QuadExt,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime(f) => f.characteristic(),
            FieldDescriptor::Rationals(f) => f.characteristic(),
            FieldDescriptor::QuadPrime(f) => f.characteristic(),
            FieldDescriptor::QuadRational(f) => f.characteristic(),
        }
    }

    pub fn spec_string(&self) -> String {
        match self {
            FieldDescriptor::Prime(f) => f.spec_string(),
            FieldDescriptor::Rationals(f) => f.spec_string(),
            FieldDescriptor::QuadPrime(f) => f.spec_string(),
            FieldDescriptor::QuadRational(f) => f.spec_string(),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FieldDescriptor::parse(s)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

fn parse_u64(s: &str) -> Option<u64> {
    s.trim().parse().ok()
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if d == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_variant() {
        assert_eq!(FieldDescriptor::parse("fp:7").unwrap().characteristic(), 7);
        assert_eq!(FieldDescriptor::parse("q").unwrap().kind(), FieldKind::Rationals);
        let sqrt2 = FieldDescriptor::parse("q-sqrt:2").unwrap();
        match &sqrt2 {
            FieldDescriptor::QuadRational(k) => {
                let (s, t) = k.min_poly();
                assert_eq!(*s, BigRational::from_integer(0.into()));
                assert_eq!(*t, BigRational::from_integer(2.into()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(FieldDescriptor::parse("fp2:7:1:3").unwrap().kind(), FieldKind::QuadExt);
        assert_eq!(
            FieldDescriptor::parse("q-ext:1/2:1/1").unwrap().spec_string(),
            "q-ext:1/2:1/1"
        );
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(FieldDescriptor::parse("fp:9"), Err(Error::CompositeModulus(9)));
        assert!(matches!(
            FieldDescriptor::parse("fp2:7:0:2"),
            Err(Error::ReducibleExtension { .. })
        ));
        assert!(matches!(FieldDescriptor::parse("q-sqrt:9"), Err(Error::ReducibleExtension { .. })));
        assert!(matches!(FieldDescriptor::parse("fq:7"), Err(Error::FieldSpec(_))));
        assert_eq!(
            FieldDescriptor::parse("fp2:fp2:7:1:3:0:1"),
            Err(Error::NestedExtension)
        );
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["fp:2", "fp:7", "q", "q-sqrt:2", "q-sqrt:-1", "fp2:3:0:2", "fp2:2:1:1", "q-ext:1/2:1/1"] {
            let d = FieldDescriptor::parse(s).unwrap();
            assert_eq!(d.spec_string(), s);
            assert_eq!(FieldDescriptor::parse(&d.spec_string()).unwrap(), d);
        }
    }
}
