//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        GaussRat::real(BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::real(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `a² + b²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussRat {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Square root inside `ℚ` (when `real_only`) or `ℚ(i)`, if one exists.
    pub fn sqrt(&self, real_only: bool) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.is_real() {
            if let Some(r) = rational_sqrt(&self.re) {
                return Some(GaussRat::real(r));
            }
            if real_only {
                return None;
            }
            if self.re.is_negative() {
                return rational_sqrt(&-self.re.clone()).map(|r| GaussRat {
                    re: BigRational::zero(),
                    im: r,
                });
            }
            return None;
        }
        if real_only {
            return None;
        }
        // (x + yi)² = a + bi: x² = (a + |z|)/2, y = b / 2x.
        let modulus = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        for x2 in [(&self.re + &modulus) / &two, (&self.re - &modulus) / &two] {
            if x2.is_negative() || x2.is_zero() {
                continue;
            }
            if let Some(x) = rational_sqrt(&x2) {
                let y = &self.im / (&two * &x);
                let cand = GaussRat::new(x, y);
                if &(&cand * &cand) == self {
                    return Some(cand);
                }
            }
        }
        None
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::real(&self.re * &o.re);
        }
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    /// Panics on a zero divisor; callers check first.
    fn div(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::real(&self.re / &o.re);
        }
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    /// Prints in the scalar text grammar: `3/4`, `-2*i`, `(1+2*i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return f.write_str("i");
            }
            if (-self.im.clone()).is_one() {
                return f.write_str("-i");
            }
            fmt_rational(&self.im, f)?;
            return f.write_str("*i");
        }
        f.write_str("(")?;
        fmt_rational(&self.re, f)?;
        if self.im.is_negative() {
            f.write_str("-")?;
        } else {
            f.write_str("+")?;
        }
        let a = self.im.abs();
        if !a.is_one() {
            fmt_rational(&a, f)?;
            f.write_str("*")?;
        }
        f.write_str("i)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&GaussRat::i() * &GaussRat::i(), g(-1, 0));
        assert_eq!(&g(1, 1) * &g(1, -1), g(2, 0));
    }

    #[test]
    fn inverse_and_division() {
        let z = g(3, 4);
        assert_eq!(&z * &z.inv().unwrap(), GaussRat::one());
        assert!(GaussRat::zero().inv().is_none());
    }

    #[test]
    fn square_roots() {
        assert_eq!(g(4, 0).sqrt(true), Some(g(2, 0)));
        assert_eq!(g(2, 0).sqrt(false), None);
        assert_eq!(g(-1, 0).sqrt(true), None);
        assert_eq!(g(-1, 0).sqrt(false), Some(g(0, 1)));
        // (1 + 2i)² = -3 + 4i
        let r = g(-3, 4).sqrt(false).unwrap();
        assert_eq!(&r * &r, g(-3, 4));
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(1, 2).to_string(), "(1+2*i)");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(1, -1).to_string(), "(1-i)");
    }
}
