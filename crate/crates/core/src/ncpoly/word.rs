//! Generators and words of the free algebra.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Letter kind. Declaration order is the generator order within a slot:
/// `d_inv < d < x(1,1) < x(1,2) < … < x(2,1) < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    DInv,
    D,
    /// Entry `x(r, c)`, one-based.
    X(u8, u8),
}

/// A generator together with its tensor slot.
///
/// Slot 0 is used by plain algebras; tensor products use slots 1, 2, …
/// from left to right. Slots compare first, so every letter of an earlier
/// factor precedes every letter of a later one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub slot: u8,
    pub kind: GenKind,
}

impl Generator {
    pub const fn new(slot: u8, kind: GenKind) -> Self {
        Generator { slot, kind }
    }

    pub const fn d() -> Self {
        Generator::new(0, GenKind::D)
    }

    pub const fn d_inv() -> Self {
        Generator::new(0, GenKind::DInv)
    }

    /// `x(r, c)` with one-based indices.
    pub fn x(r: usize, c: usize) -> Self {
        Generator::new(0, GenKind::X(r as u8, c as u8))
    }

    pub fn in_slot(self, slot: u8) -> Self {
        Generator { slot, ..self }
    }

    /// Parses `D`, `Dinv`, `x12`, `x_10_3`, optionally prefixed by a slot
    /// tag (`L:`, `R:`, `T:`).
    pub fn parse(name: &str) -> Option<Generator> {
        let (slot, body) = match name.split_once(':') {
            Some((tag, rest)) => (slot_from_tag(tag)?, rest),
            None => (0, name),
        };
        let kind = match body {
            "D" => GenKind::D,
            "Dinv" => GenKind::DInv,
            _ => {
                let rest = body.strip_prefix('x')?;
                if let Some(idx) = rest.strip_prefix('_') {
                    let (r, c) = idx.split_once('_')?;
                    GenKind::X(r.parse().ok()?, c.parse().ok()?)
                } else if rest.len() == 2 && rest.bytes().all(|b| b.is_ascii_digit()) {
                    let b = rest.as_bytes();
                    GenKind::X(b[0] - b'0', b[1] - b'0')
                } else {
                    return None;
                }
            }
        };
        if let GenKind::X(r, c) = kind {
            if r == 0 || c == 0 {
                return None;
            }
        }
        Some(Generator { slot, kind })
    }
}

fn slot_from_tag(tag: &str) -> Option<u8> {
    match tag {
        "L" => Some(1),
        "R" => Some(2),
        "T" => Some(3),
        _ => tag.strip_prefix('S').and_then(|n| n.parse().ok()),
    }
}

fn slot_tag(slot: u8) -> String {
    match slot {
        0 => String::new(),
        1 => "L:".into(),
        2 => "R:".into(),
        3 => "T:".into(),
        s => format!("S{s}:"),
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&slot_tag(self.slot))?;
        match self.kind {
            GenKind::D => f.write_str("D"),
            GenKind::DInv => f.write_str("Dinv"),
            GenKind::X(r, c) if r < 10 && c < 10 => write!(f, "x{r}{c}"),
            GenKind::X(r, c) => write!(f, "x_{r}_{c}"),
        }
    }
}

/// Finite sequence of generators; the empty word is the unit.
///
/// Ordered by length first, then letterwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Generator; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Generator>) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn letter(g: Generator) -> Self {
        Word::from_letters([g])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    /// `letters[start..end]` as a word.
    pub fn sub(&self, start: usize, end: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[start..end]))
    }

    /// Whether `pat` occurs at position `pos`.
    pub fn matches_at(&self, pat: &Word, pos: usize) -> bool {
        pos + pat.len() <= self.len() && self.0[pos..pos + pat.len()] == pat.0[..]
    }

    /// First occurrence of `pat` as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&p| self.matches_at(pat, p))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn max_slot(&self) -> u8 {
        self.0.iter().map(|g| g.slot).max().unwrap_or(0)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Three-way comparison of words under the length-lexicographic order.
pub fn word_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(gs: &[Generator]) -> Word {
        Word::from_letters(gs.iter().copied())
    }

    #[test]
    fn generator_order() {
        assert!(Generator::d_inv() < Generator::d());
        assert!(Generator::d() < Generator::x(1, 1));
        assert!(Generator::x(1, 2) < Generator::x(2, 1));
        assert!(Generator::x(2, 2).in_slot(1) < Generator::d_inv().in_slot(2));
    }

    #[test]
    fn word_order_examples() {
        let d = Generator::d();
        let x11 = Generator::x(1, 1);
        assert_eq!(word_compare(&w(&[d, x11]), &w(&[x11, d])), Ordering::Less);
        assert_eq!(
            word_compare(&w(&[Generator::x(1, 2)]), &w(&[x11, d])),
            Ordering::Less
        );
        let u = w(&[x11, d, x11]);
        assert_eq!(word_compare(&u, &u), Ordering::Equal);
    }

    #[test]
    fn parse_and_print() {
        for s in ["D", "Dinv", "x12", "L:x21", "R:Dinv", "x_10_3", "T:x11"] {
            let g = Generator::parse(s).unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!(Generator::parse("x1").is_none());
        assert!(Generator::parse("x01").is_none());
        assert!(Generator::parse("q").is_none());
    }
}
