//! Text form of polynomials.
//!
//! Terms are `c`, `c*T^e`, `c*T`, `T^e` or `T`, joined by `+` and `-`.
//! Coefficients are integers, `num/den` fractions, or `(a+b*w)` for
//! extension fields, where `a` and `b` are base-field numerals. The
//! printer emits the canonical form, highest degree first, e.g.
//! `T^2 + (1+1*w)*T + (0+1*w)`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::Poly;
use crate::error::{Error, Result};
use crate::fields::Field;

pub(crate) fn format_poly<F: Field>(p: &Poly<F>) -> String {
    let field = p.field();
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (exp, c) in p.coeffs().iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let text = field.format_elem(c);
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = match exp {
            0 => String::new(),
            1 => "T".to_string(),
            e => format!("T^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&body);
        } else if field.is_one(c) || body == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&body);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Parses the text form into a polynomial over `field`.
pub fn parse_poly<F: Field>(text: &str, field: &F) -> Result<Poly<F>> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut acc: Vec<F::Elem> = Vec::new();
    parser.skip_ws();
    let mut first = true;
    loop {
        parser.skip_ws();
        let negative = match parser.peek() {
            Some(b'+') => {
                parser.pos += 1;
                false
            }
            Some(b'-') => {
                parser.pos += 1;
                true
            }
            None if first => return Err(parser.error("empty polynomial")),
            None => break,
            Some(_) if first => false,
            Some(_) => return Err(parser.error("expected `+` or `-`")),
        };
        first = false;
        parser.skip_ws();
        let (coeff, exp) = parser.term(field)?;
        let coeff = if negative { field.neg(&coeff) } else { coeff };
        if acc.len() <= exp {
            acc.resize(exp + 1, field.zero());
        }
        acc[exp] = field.add(&acc[exp], &coeff);
    }
    Ok(Poly::new(field, acc))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", byte as char)))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string parses"))
    }

    /// Unsigned `n` or `n/d`.
    fn ratio(&mut self) -> Result<(BigInt, BigInt)> {
        let num = self.digits()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.digits()?;
            Ok((num, den))
        } else {
            Ok((num, BigInt::one()))
        }
    }

    fn signed_ratio(&mut self) -> Result<(BigInt, BigInt)> {
        self.skip_ws();
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let (n, d) = self.ratio()?;
        Ok((if negative { -n } else { n }, d))
    }

    fn coefficient<F: Field>(&mut self, field: &F) -> Result<F::Elem> {
        let start = self.pos;
        let wrap = |e: Error, pos: usize| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                pos,
                msg: format!("coefficient not valid in {}: {other}", field.spec_string()),
            },
        };
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let a = self.signed_ratio()?;
            self.skip_ws();
            let negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Err(self.error("expected `+` or `-` inside extension coefficient")),
            };
            self.pos += 1;
            let (bn, bd) = self.ratio()?;
            let bn = if negative { -bn } else { bn };
            self.expect(b'*')?;
            self.expect(b'w')?;
            self.expect(b')')?;
            return field
                .ext_from_ratios((&a.0, &a.1), (&bn, &bd))
                .map_err(|e| wrap(e, start));
        }
        let (n, d) = self.ratio()?;
        if d.is_negative() {
            return Err(self.error("negative denominator"));
        }
        field.from_ratio(&n, &d).map_err(|e| wrap(e, start))
    }

    /// `T` or `T^e`, already positioned at `T`.
    fn monomial(&mut self) -> Result<usize> {
        self.expect(b'T')?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: usize = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            Ok(e)
        } else {
            Ok(1)
        }
    }

    fn term<F: Field>(&mut self, field: &F) -> Result<(F::Elem, usize)> {
        self.skip_ws();
        match self.peek() {
            Some(b'T') => Ok((field.one(), self.monomial()?)),
            Some(c) if c.is_ascii_digit() || c == b'(' => {
                let coeff = self.coefficient(field)?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    let exp = self.monomial()?;
                    Ok((coeff, exp))
                } else {
                    Ok((coeff, 0))
                }
            }
            Some(_) => Err(self.error("expected a term")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, QuadExt, Rationals};
    use num_rational::BigRational;

    #[test]
    fn prime_field_coefficients() {
        let f3 = PrimeField::new(3).unwrap();
        let p = parse_poly("T^2 + 2*T + 1", &f3).unwrap();
        assert_eq!(p.coeffs(), &[1, 2, 1]);
        assert_eq!(p.to_string(), "T^2 + 2*T + 1");
        // reduction into the field
        let q = parse_poly("-T^3 + 4*T - 5", &f3).unwrap();
        assert_eq!(q.to_string(), "2*T^3 + T + 1");
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_poly("-1/2*T^3 + T - 4/6", &Rationals).unwrap();
        assert_eq!(p.to_string(), "-1/2*T^3 + T - 2/3");
        assert_eq!(parse_poly("0", &Rationals).unwrap().to_string(), "0");
        assert_eq!(parse_poly("T - T", &Rationals).unwrap().to_string(), "0");
        assert_eq!(parse_poly("1 + T + T", &Rationals).unwrap().to_string(), "2*T + 1");
    }

    #[test]
    fn extension_coefficients() {
        let k = QuadExt::new(
            Rationals,
            BigRational::from_integer(0.into()),
            BigRational::from_integer(2.into()),
        )
        .unwrap();
        let p = parse_poly("T^2 + (1+1*w)*T + (0+1*w)", &k).unwrap();
        assert_eq!(p.to_string(), "T^2 + (1+1*w)*T + (0+1*w)");
        assert_eq!(p.coeff(1), k.make(BigRational::from_integer(1.into()), BigRational::from_integer(1.into())));
        let n = parse_poly("(-1/2-3*w)*T", &k).unwrap();
        assert_eq!(n.to_string(), "(-1/2-3*w)*T");
        // plain numerals embed into the extension
        assert_eq!(parse_poly("T + 1", &k).unwrap().to_string(), "T + (1+0*w)");
    }

    #[test]
    fn errors_carry_positions() {
        let f2 = PrimeField::new(2).unwrap();
        match parse_poly("1/2*T", &f2) {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 0);
                assert!(msg.contains("fp:2"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("T^", &f2), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("T T", &f2), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("", &f2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(1+1*w)*T", &f2), Err(Error::Parse { .. })));
    }
}
