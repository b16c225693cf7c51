//! Noncommutative polynomials: finite maps from words to nonzero scalars.

use super::word::{Generator, Word};
use crate::error::{Error, Result};
use crate::scalar::{parse_expr, Parseable, Scalar};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(w, Scalar::one())
    }

    pub fn gen(g: Generator) -> Self {
        NCPoly::word(Word::letter(g))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c·w` in place.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Adds `c · u · self · v` into `acc`.
    pub fn add_sandwich_into(&self, acc: &mut NCPoly, c: &Scalar, u: &Word, v: &Word) {
        for (w, d) in &self.terms {
            acc.add_term(u.concat(w).concat(v), c.mul(d));
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Greatest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.last_key_value()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.last_key_value().map(|(w, _)| w)
    }

    pub fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    /// Length of the longest word; zero for constants and for zero.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Parameter-free-in-generators value, if `self` is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let (mut big, small) = if self.len() >= o.len() {
            (self.clone(), o)
        } else {
            (o.clone(), self)
        };
        for (w, c) in &small.terms {
            big.add_term(w.clone(), c.clone());
        }
        big
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.neg());
        }
        r
    }

    pub fn neg(&self) -> NCPoly {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        if s.is_zero() {
            return NCPoly::zero();
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                acc.add_term(u.concat(v), a.mul(b));
            }
        }
        acc
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        (0..e).fold(NCPoly::one(), |acc, _| acc.mul(self))
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> NCPoly {
        match self.leading() {
            None => NCPoly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Image under the algebra map sending each generator `g` to `f(g)`.
    ///
    /// With `anti` set, products are reversed (anti-homomorphism).
    pub fn substitute(&self, f: &impl Fn(Generator) -> NCPoly, anti: bool) -> NCPoly {
        let mut acc = NCPoly::zero();
        let mut cache: BTreeMap<Generator, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            let mut prod = NCPoly::constant(c.clone());
            let letters: Box<dyn Iterator<Item = &Generator>> = if anti {
                Box::new(w.letters().iter().rev())
            } else {
                Box::new(w.letters().iter())
            };
            for g in letters {
                let img = cache.entry(*g).or_insert_with(|| f(*g));
                prod = prod.mul(img);
                if prod.is_zero() {
                    break;
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut gs: Vec<Generator> = self
            .terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect();
        gs.sort();
        gs.dedup();
        gs
    }

    pub fn parse(src: &str) -> Result<NCPoly> {
        parse_expr(src)
    }
}

impl From<Scalar> for NCPoly {
    fn from(s: Scalar) -> Self {
        NCPoly::constant(s)
    }
}

impl From<Generator> for NCPoly {
    fn from(g: Generator) -> Self {
        NCPoly::gen(g)
    }
}

/// Writes a coefficient-word product, choosing the sign separately.
fn fmt_term(c: &Scalar, w: &Word, first: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let lc = c.numer().lc();
    let negative = lc.is_real() && lc.re < num_rational::BigRational::from_integer(0.into());
    let abs = if negative { c.neg() } else { c.clone() };
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if w.is_empty() {
        if abs.numer().len() > 1 && abs.denom().is_one() {
            return write!(f, "({abs})");
        }
        return write!(f, "{abs}");
    }
    if abs.is_one() {
        return write!(f, "{w}");
    }
    if abs.denom().is_one() && abs.numer().len() > 1 {
        write!(f, "({abs})*{w}")
    } else {
        write!(f, "{abs}*{w}")
    }
}

impl fmt::Display for NCPoly {
    /// Terms in decreasing order, leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            fmt_term(c, w, k == 0, f)?;
        }
        Ok(())
    }
}

impl Parseable for NCPoly {
    fn from_scalar(s: Scalar) -> Self {
        NCPoly::constant(s)
    }
    fn identifier(name: &str) -> Result<Option<Self>> {
        if let Some(g) = Generator::parse(name) {
            return Ok(Some(NCPoly::gen(g)));
        }
        if name.contains(':') {
            return Err(Error::Invalid(format!("unknown generator '{name}'")));
        }
        Ok(<Scalar as Parseable>::identifier(name)?.map(NCPoly::constant))
    }
    fn add(&self, o: &Self) -> Self {
        NCPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        NCPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        NCPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        NCPoly::neg(self)
    }
    fn div(&self, o: &Self) -> std::result::Result<Self, String> {
        let c = o
            .as_constant()
            .ok_or_else(|| "division by a non-scalar".to_string())?;
        let inv = c.inv().map_err(|_| "division by zero".to_string())?;
        Ok(self.scale(&inv))
    }
    fn pow(&self, e: i64) -> std::result::Result<Self, String> {
        if let Some(c) = self.as_constant() {
            return c
                .pow(e)
                .map(NCPoly::constant)
                .map_err(|_| "zero raised to a negative power".into());
        }
        if e < 0 {
            return Err("negative power of a non-scalar".into());
        }
        Ok(NCPoly::pow(self, e as u32))
    }
}

impl std::str::FromStr for NCPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NCPoly::parse(s)
    }
}
