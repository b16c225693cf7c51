//! Recursive-descent parser shared by scalars and noncommutative
//! polynomials.
//!
//! Grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers may carry a slot prefix such as `L:` or `R:`.

use super::{BaseField, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Target of the parser: anything that can absorb the grammar's operations.
pub trait Parseable: Sized + Clone {
    fn from_scalar(s: Scalar) -> Self;
    /// Interprets an identifier; `Ok(None)` means "not an identifier of
    /// this type".
    fn identifier(name: &str) -> Result<Option<Self>>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> std::result::Result<Self, String>;
    fn pow(&self, e: i64) -> std::result::Result<Self, String>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map(|l| l.chars().count()).unwrap_or(0) + 1;
    (line, column)
}

fn parse_error(src: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = position(src, offset);
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Self> {
        let mut toks = Vec::new();
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                toks.push((Tok::Int(n), start));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                let ident_end = |mut j: usize| {
                    while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                        j += 1;
                    }
                    j
                };
                i = ident_end(i);
                if i + 1 < bytes.len()
                    && bytes[i] == b':'
                    && (bytes[i + 1].is_ascii_alphabetic() || bytes[i + 1] == b'_')
                {
                    i = ident_end(i + 1);
                }
                toks.push((Tok::Ident(src[start..i].to_string()), start));
            } else if "+-*/^()".contains(c) {
                toks.push((Tok::Op(c), i));
                i += 1;
            } else {
                return Err(parse_error(src, i, format!("unexpected character '{c}'")));
            }
        }
        Ok(Lexer { src, toks })
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.lex.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.lex
            .toks
            .get(self.pos)
            .map(|t| t.1)
            .unwrap_or(self.lex.src.len())
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        parse_error(self.lex.src, self.offset(), msg)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<T: Parseable>(&mut self) -> Result<T> {
        let mut acc = self.term::<T>()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term::<T>()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term::<T>()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: Parseable>(&mut self) -> Result<T> {
        let mut acc = self.unary::<T>()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary::<T>()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                let rhs = self.unary::<T>()?;
                acc = acc
                    .div(&rhs)
                    .map_err(|m| parse_error(self.lex.src, at, m))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<T: Parseable>(&mut self) -> Result<T> {
        if self.eat('-') {
            return Ok(self.unary::<T>()?.neg());
        }
        self.power()
    }

    fn power<T: Parseable>(&mut self) -> Result<T> {
        let base = self.atom::<T>()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        let at = self.offset();
        self.pos += 1;
        let negative = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(n)) => {
                let n: i64 = n
                    .try_into()
                    .map_err(|_| self.err("exponent out of range"))?;
                self.pos += 1;
                if negative {
                    -n
                } else {
                    n
                }
            }
            _ => return Err(self.err("expected integer exponent")),
        };
        base.pow(e).map_err(|m| parse_error(self.lex.src, at, m))
    }

    fn atom<T: Parseable>(&mut self) -> Result<T> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(T::from_scalar(Scalar::from_rational(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match T::identifier(&name) {
                    Ok(Some(v)) => Ok(v),
                    Ok(None) => Err(parse_error(
                        self.lex.src,
                        at,
                        format!("unknown identifier '{name}'"),
                    )),
                    Err(Error::Parse { message, .. }) | Err(Error::Invalid(message)) => {
                        Err(parse_error(self.lex.src, at, message))
                    }
                    Err(e) => Err(e),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr::<T>()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(Tok::Op(c)) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses `src` into any [`Parseable`] value.
pub fn parse_expr<T: Parseable>(src: &str) -> Result<T> {
    let lex = Lexer::run(src)?;
    let mut p = Parser { lex, pos: 0 };
    let v = p.expr::<T>()?;
    if p.pos != p.lex.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

fn is_param_name(name: &str) -> bool {
    !name.contains(':') && name != "i"
}

impl Parseable for Scalar {
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn identifier(name: &str) -> Result<Option<Self>> {
        if name == "i" {
            Ok(Some(Scalar::i()))
        } else if is_param_name(name) {
            Ok(Some(Scalar::param(name)))
        } else {
            Ok(None)
        }
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn div(&self, o: &Self) -> std::result::Result<Self, String> {
        self.checked_div(o).map_err(|_| "division by zero".to_string())
    }
    fn pow(&self, e: i64) -> std::result::Result<Self, String> {
        Scalar::pow(self, e).map_err(|_| "zero raised to a negative power".to_string())
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

/// Parses a scalar, rejecting `i` when `field` is the rationals.
pub fn parse_scalar_in(src: &str, field: BaseField) -> Result<Scalar> {
    let s: Scalar = parse_expr(src)?;
    if field == BaseField::Rationals && !s.is_real() {
        return Err(parse_error(src, 0, "'i' is not available over the rationals"));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(src: &str) -> Scalar {
        src.parse().unwrap()
    }

    #[test]
    fn grammar_examples() {
        let v = s("(1+i)*q/(q^2-1)");
        let q = Scalar::param("q");
        let expected = Scalar::one()
            .add(&Scalar::i())
            .mul(&q)
            .checked_div(&q.mul(&q).sub(&Scalar::one()))
            .unwrap();
        assert_eq!(v, expected);
        assert_eq!(s("-q^2"), q.mul(&q).neg());
        assert_eq!(s("q^-1"), q.inv().unwrap());
        assert_eq!(s("3/4*q"), Scalar::from_ratio(3, 4).mul(&q));
    }

    #[test]
    fn round_trip() {
        for src in [
            "5/6",
            "-q/(q+1)",
            "(1+i)*q/(q^2-1)",
            "q^2*p1 - 3/7*h + i",
            "(q+1)^2/(q*p)",
            "-i*q + 2",
            "1/(q-i)",
        ] {
            let v = s(src);
            let printed = v.to_string();
            assert_eq!(s(&printed), v, "{src} printed as {printed}");
        }
    }

    #[test]
    fn errors_carry_position() {
        match "q + * 2".parse::<Scalar>() {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("{other:?}"),
        }
        match "1/(q-q)".parse::<Scalar>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_scalar_in("1+i", BaseField::Rationals).is_err());
        assert!(parse_scalar_in("1+i", BaseField::GaussianRationals).is_ok());
    }
}
