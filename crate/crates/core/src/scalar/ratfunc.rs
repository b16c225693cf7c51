//! Rational functions over `ℚ(i)` in the declared parameters.

use super::gauss::GaussRat;
use super::poly::Poly;
use super::var::Var;
use super::BaseField;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// Exact element of `ℚ(i)(params)`.
///
/// Always stored with `gcd(num, den) = 1` and a denominator whose leading
/// coefficient is one, so `==` decides equality of rational functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(GaussRat::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::from_gauss(GaussRat::real(BigRational::new(
            BigInt::from(n),
            BigInt::from(d),
        )))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::from_gauss(GaussRat::real(r))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Scalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::i())
    }

    /// The parameter named `name`.
    pub fn param(name: &str) -> Self {
        Scalar::from_poly(Poly::var(Var::new(name)))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    /// `num / den`, reduced to canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides"),
                    den.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        Scalar::with_monic_den(num, den)
    }

    fn with_monic_den(num: Poly, den: Poly) -> Self {
        let lc = den.lc();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.inv().expect("nonzero denominator");
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Parameter-free value, if any.
    pub fn constant_value(&self) -> Option<GaussRat> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(&n / &d)
    }

    /// Parameter-free real value, if any.
    pub fn rational_value(&self) -> Option<BigRational> {
        let c = self.constant_value()?;
        if c.is_real() {
            Some(c.re)
        } else {
            None
        }
    }

    pub fn is_parametric(&self) -> bool {
        !(self.num.is_constant() && self.den.is_constant())
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }

    /// Whether all coefficients are real, i.e. the value is fixed by
    /// conjugation.
    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    /// Smallest base field containing the coefficients.
    pub fn base_field(&self) -> BaseField {
        if self.is_real() {
            BaseField::Rationals
        } else {
            BaseField::GaussianRationals
        }
    }

    /// Parameter-free, `i`-free and strictly positive.
    pub fn is_positive_rational(&self) -> bool {
        self.rational_value().is_some_and(|r| r.is_positive())
    }

    /// Complex conjugation; parameters are treated as real.
    pub fn conj(&self) -> Scalar {
        if self.is_real() {
            return self.clone();
        }
        Scalar::normalize(self.num.conj(), self.den.conj())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Scalar::from_poly(self.num.add(&o.num));
            }
            return Scalar::normalize(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            // Coprime denominators cannot share a factor with the new numerator.
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            if num.is_zero() {
                return Scalar::zero();
            }
            return Scalar::with_monic_den(num, self.den.mul(&o.den));
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return Scalar::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (
                num.div_exact(&h).expect("gcd divides"),
                g.div_exact(&h).expect("gcd divides"),
            )
        };
        Scalar::with_monic_den(num, b1.mul(&d1).mul(&g))
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(self.num.mul(&o.num));
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::with_monic_den(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::with_monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(Scalar {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Replaces parameter `v` by `value`.
    pub fn substitute(&self, v: Var, value: &Scalar) -> Result<Scalar> {
        let n = eval_poly_at(&self.num, v, value);
        let d = eval_poly_at(&self.den, v, value);
        n.checked_div(&d)
    }

    /// Applies several substitutions in sequence.
    pub fn substitute_all(&self, subs: &[(Var, Scalar)]) -> Result<Scalar> {
        let mut s = self.clone();
        for (v, val) in subs {
            s = s.substitute(*v, val)?;
        }
        Ok(s)
    }

    /// Square root as a real rational function, if one exists.
    pub fn real_sqrt(&self) -> Option<Scalar> {
        if !self.is_real() {
            return None;
        }
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        Some(Scalar::normalize(n, d))
    }
}

fn eval_poly_at(p: &Poly, v: Var, value: &Scalar) -> Scalar {
    let coeffs = p.to_univariate(v);
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(value).add(&Scalar::from_poly(c.clone()));
    }
    acc
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

fn is_atomic(p: &Poly) -> bool {
    match p.terms() {
        [(m, c)] => {
            let coeff_plain = c.is_one();
            let single_factor = m.factors().count() <= 1;
            (coeff_plain && single_factor) || (m.is_one() && c.is_real() && !c.re.is_negative())
        }
        _ => false,
    }
}

fn numerator_needs_parens(p: &Poly) -> bool {
    p.len() > 1
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // A constant denominator folds into the coefficients.
        if let Some(c) = self.den.constant_value() {
            let p = self.num.scale(&c.inv().expect("nonzero"));
            return write!(f, "{p}");
        }
        if numerator_needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if is_atomic(&self.den) && !self.den.terms()[0].0.is_one() {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar::add(&self, &o)
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::param("q")
    }

    #[test]
    fn rational_sum() {
        let s = Scalar::from_ratio(1, 2).add(&Scalar::from_ratio(1, 3));
        assert_eq!(s, Scalar::from_ratio(5, 6));
    }

    #[test]
    fn cancellation() {
        let one = Scalar::one();
        let q2m1 = q().mul(&q()).sub(&one);
        let a = q().checked_div(&q2m1).unwrap().mul(&q().sub(&one));
        let expected = q().checked_div(&q().add(&one)).unwrap();
        assert_eq!(a, expected);
        assert_eq!(a.denom(), &Poly::var(Var::new("q")).add(&Poly::one()));
    }

    #[test]
    fn gaussian_product() {
        let a = Scalar::one().add(&Scalar::i());
        let b = Scalar::one().sub(&Scalar::i());
        assert_eq!(a.mul(&b), Scalar::from_int(2));
    }

    #[test]
    fn conjugation() {
        let z = Scalar::one().add(&Scalar::from_int(2).mul(&Scalar::i()));
        assert_eq!(z.conj(), Scalar::one().sub(&Scalar::from_int(2).mul(&Scalar::i())));
        assert_eq!(q().conj(), q());
        let w = Scalar::from_int(3).mul(&Scalar::i()).mul(&q());
        assert_eq!(w.conj().conj(), w);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(q().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitution() {
        let p = Scalar::param("p");
        let expr = p.mul(&q()).add(&Scalar::one());
        let s = expr
            .substitute(Var::new("p"), &q().mul(&q()).checked_div(&Scalar::param("r")).unwrap())
            .unwrap();
        let expected = q()
            .pow(3)
            .unwrap()
            .checked_div(&Scalar::param("r"))
            .unwrap()
            .add(&Scalar::one());
        assert_eq!(s, expected);
    }

    #[test]
    fn positivity() {
        assert!(Scalar::from_ratio(3, 4).is_positive_rational());
        assert!(!Scalar::from_int(-1).is_positive_rational());
        assert!(!q().is_positive_rational());
        assert!(!Scalar::i().is_positive_rational());
    }

    #[test]
    fn real_square_roots() {
        let s = q().mul(&q()).checked_div(&Scalar::from_int(4)).unwrap();
        assert_eq!(s.real_sqrt().map(|r| r.mul(&r)), Some(s));
        assert!(q().real_sqrt().is_none());
    }
}
