//! Fusion rules of the comodules of `GL_q(2)`.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FusionCase {
    Generic,
    /// `q` of order `n ≥ 3`.
    RootOfUnity { n: u32 },
}

impl FusionCase {
    pub fn root(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid(format!("root of unity order {n} < 3")));
        }
        Ok(FusionCase::RootOfUnity { n })
    }

    /// `N₀`: `N` for odd `N`, `N/2` for even `N`.
    pub fn n0(&self) -> Option<u32> {
        match *self {
            FusionCase::Generic => None,
            FusionCase::RootOfUnity { n } if n % 2 == 1 => Some(n),
            FusionCase::RootOfUnity { n } => Some(n / 2),
        }
    }
}

/// `U(n,e) = U_n ⊗ D^e` in the generic case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GenericLabel {
    pub n: u32,
    pub e: i64,
}

/// `V_n ⊗ U_m ⊗ D^e` at a root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RootLabel {
    pub n: u32,
    pub m: u32,
    pub e: i64,
}

pub trait Label: Copy + Ord + fmt::Display {
    fn dim(&self) -> u64;
}

impl GenericLabel {
    pub fn new(n: u32, e: i64) -> Self {
        GenericLabel { n, e }
    }
}

impl Label for GenericLabel {
    fn dim(&self) -> u64 {
        self.n as u64 + 1
    }
}

impl RootLabel {
    pub fn new(n: u32, m: u32, e: i64) -> Self {
        RootLabel { n, m, e }
    }

    pub fn v(n: u32) -> Self {
        RootLabel::new(n, 0, 0)
    }

    pub fn u(m: u32, e: i64) -> Self {
        RootLabel::new(0, m, e)
    }

    fn twist(self, f: i64) -> Self {
        RootLabel { e: self.e + f, ..self }
    }
}

impl Label for RootLabel {
    fn dim(&self) -> u64 {
        (self.n as u64 + 1) * (self.m as u64 + 1)
    }
}

impl fmt::Display for GenericLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({},{})", self.n, self.e)
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.n > 0 {
            parts.push(format!("V({})", self.n));
        }
        if self.m > 0 || self.n == 0 {
            parts.push(format!("U({},{})", self.m, self.e));
        } else if self.e != 0 {
            parts.push(format!("D^{}", self.e));
        }
        f.write_str(&parts.join("*"))
    }
}

/// Finite formal sum of labels with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemiringElement<L: Label> {
    terms: BTreeMap<L, u64>,
}

impl<L: Label> Default for SemiringElement<L> {
    fn default() -> Self {
        SemiringElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<L: Label> SemiringElement<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(l: L) -> Self {
        Self::from_labels([l])
    }

    pub fn from_labels(ls: impl IntoIterator<Item = L>) -> Self {
        let mut s = Self::zero();
        for l in ls {
            s.add_label(l, 1);
        }
        s
    }

    pub fn add_label(&mut self, l: L, k: u64) {
        if k > 0 {
            *self.terms.entry(l).or_insert(0) += k;
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (l, k) in &o.terms {
            s.add_label(*l, *k);
        }
        s
    }

    pub fn terms(&self) -> impl Iterator<Item = (&L, &u64)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, l: &L) -> u64 {
        self.terms.get(l).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.terms.iter().map(|(l, k)| l.dim() * k).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<L: Label> fmt::Display for SemiringElement<L> {
    /// Largest label first, e.g. `U(2,0) + U(0,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, k)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *k > 1 {
                write!(f, "{k}*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `U(n,e) ⊗ U(m,f) = ⊕_{i=0}^{min(n,m)} U(n+m−2i, e+f+i)`.
pub fn tensor_generic(a: GenericLabel, b: GenericLabel) -> SemiringElement<GenericLabel> {
    let mut s = SemiringElement::zero();
    for i in 0..=a.n.min(b.n) {
        s.add_label(GenericLabel::new(a.n + b.n - 2 * i, a.e + b.e + i as i64), 1);
    }
    s
}

/// Bilinear extension of [`tensor_generic`].
pub fn semiring_product(
    x: &SemiringElement<GenericLabel>,
    y: &SemiringElement<GenericLabel>,
) -> SemiringElement<GenericLabel> {
    let mut s = SemiringElement::zero();
    for (a, ka) in x.terms() {
        for (b, kb) in y.terms() {
            for (l, k) in tensor_generic(*a, *b).terms() {
                s.add_label(*l, k * ka * kb);
            }
        }
    }
    s
}

/// `s = 1` is the identity; `s = −1` sends `U(n,e)` to `U(n,−n−e)`.
pub fn relabel_automorphism(
    s: i8,
    x: &SemiringElement<GenericLabel>,
) -> Result<SemiringElement<GenericLabel>> {
    match s {
        1 => Ok(x.clone()),
        -1 => {
            let mut out = SemiringElement::zero();
            for (l, k) in x.terms() {
                out.add_label(GenericLabel::new(l.n, -(l.n as i64) - l.e), *k);
            }
            Ok(out)
        }
        _ => Err(Error::Invalid(format!("sign must be 1 or -1, got {s}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootProduct {
    Semisimple(SemiringElement<RootLabel>),
    /// Composition factors of a filtration, bottom to top.
    NotSemisimple(Vec<RootLabel>),
}

impl RootProduct {
    pub fn dim(&self) -> u64 {
        match self {
            RootProduct::Semisimple(s) => s.dim(),
            RootProduct::NotSemisimple(fs) => fs.iter().map(Label::dim).sum(),
        }
    }
}

impl fmt::Display for RootProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootProduct::Semisimple(s) => write!(f, "{s}"),
            RootProduct::NotSemisimple(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "not semisimple; composition factors [{}]", parts.join(", "))
            }
        }
    }
}

/// Products at a root of unity covered by the known rules: anything with a
/// power of `D`, `V_n ⊗ V_1`, and `U_m ⊗ U_1` (twists allowed, either order).
/// Everything else is `Undetermined`.
pub fn tensor_root_partial(a: RootLabel, b: RootLabel, case: FusionCase) -> Result<RootProduct> {
    let n0 = case
        .n0()
        .ok_or_else(|| Error::Invalid("generic case passed to the root-of-unity rules".into()))?;
    for l in [a, b] {
        if l.m >= n0 {
            return Err(Error::Invalid(format!("{l}: U index must be below N0 = {n0}")));
        }
    }
    let is_d = |l: RootLabel| l.n == 0 && l.m == 0;
    if is_d(b) {
        return Ok(RootProduct::Semisimple(SemiringElement::simple(a.twist(b.e))));
    }
    if is_d(a) {
        return Ok(RootProduct::Semisimple(SemiringElement::simple(b.twist(a.e))));
    }
    let e = a.e + b.e;
    let v_only = |l: RootLabel| l.m == 0;
    let u_only = |l: RootLabel| l.n == 0;
    let (big, small) = if b.n == 1 && v_only(b) || b.m == 1 && u_only(b) {
        (a, b)
    } else {
        (b, a)
    };
    if v_only(big) && v_only(small) && small.n == 1 {
        let n = big.n;
        let mut s = SemiringElement::simple(RootLabel::new(n + 1, 0, e));
        if n >= 1 {
            s.add_label(RootLabel::new(n - 1, 0, e + n0 as i64), 1);
        }
        return Ok(RootProduct::Semisimple(s));
    }
    if u_only(big) && u_only(small) && small.m == 1 {
        let m = big.m;
        if m == n0 - 1 {
            let side = RootLabel::u(n0 - 2, e + 1);
            return Ok(RootProduct::NotSemisimple(vec![side, RootLabel::new(1, 0, e), side]));
        }
        let mut s = SemiringElement::simple(RootLabel::u(m + 1, e));
        if m >= 1 {
            s.add_label(RootLabel::u(m - 1, e + 1), 1);
        }
        return Ok(RootProduct::Semisimple(s));
    }
    Err(Error::Undetermined(format!("{a} (x) {b}")))
}

fn parse_factor(tok: &str) -> Result<(char, Vec<i64>)> {
    let bad = || Error::Invalid(format!("cannot parse label factor '{tok}'"));
    if let Some(exp) = tok.strip_prefix("D^") {
        return Ok(('D', vec![exp.trim().parse().map_err(|_| bad())?]));
    }
    if tok == "D" {
        return Ok(('D', vec![1]));
    }
    let (head, rest) = tok.split_at(1);
    let kind = head.chars().next().ok_or_else(bad)?;
    if kind != 'U' && kind != 'V' {
        return Err(bad());
    }
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let args = inner
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok((kind, args))
}

fn nat(v: i64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Invalid(format!("{what} must be a natural number")))
}

/// Parses `U(n,e)`, `U(n)`, `V(n)`, `D^e` joined by `*`.
pub fn parse_root_label(s: &str) -> Result<RootLabel> {
    let mut l = RootLabel::new(0, 0, 0);
    let (mut seen_u, mut seen_v) = (false, false);
    for tok in s.split('*').map(str::trim) {
        match parse_factor(tok)? {
            ('D', a) => l.e += a[0],
            ('V', a) if a.len() == 1 && !seen_v => {
                seen_v = true;
                l.n = nat(a[0], "V index")?;
            }
            ('U', a) if (a.len() == 1 || a.len() == 2) && !seen_u => {
                seen_u = true;
                l.m = nat(a[0], "U index")?;
                l.e += a.get(1).copied().unwrap_or(0);
            }
            _ => return Err(Error::Invalid(format!("cannot parse label '{s}'"))),
        }
    }
    Ok(l)
}

/// Parses a generic label: `U(n,e)`, `U(n)` and `D^e` factors.
pub fn parse_generic_label(s: &str) -> Result<GenericLabel> {
    let r = parse_root_label(s)?;
    if r.n != 0 {
        return Err(Error::Invalid(format!("'{s}': V labels only exist at roots of unity")));
    }
    Ok(GenericLabel::new(r.m, r.e))
}
