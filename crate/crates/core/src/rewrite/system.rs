//! Oriented rewrite rules and normal forms.

use crate::error::{Error, Result};
use crate::ncpoly::{Generator, NCPoly, Word};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};

/// Default step budget for a single normal-form computation.
pub const DEFAULT_FUEL: usize = 1_000_000;

/// `lhs → rhs` with every word of `rhs` strictly below `lhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: NCPoly) -> Self {
        RewriteRule { lhs, rhs }
    }

    /// Orients a relation `p = 0` by its leading word.
    pub fn from_relation(p: &NCPoly) -> Result<Self> {
        let (w, c) = p
            .leading()
            .ok_or_else(|| Error::MalformedSystem("zero relation".into()))?;
        if w.is_empty() {
            return Err(Error::MalformedSystem(format!(
                "relation {p} is a nonzero constant"
            )));
        }
        let inv = c.inv()?;
        let lhs = w.clone();
        let mut rhs = p.scale(&inv.neg());
        rhs.add_term(lhs.clone(), Scalar::one());
        Ok(RewriteRule { lhs, rhs })
    }

    /// The relation `lhs − rhs`.
    pub fn as_relation(&self) -> NCPoly {
        let mut p = self.rhs.neg();
        p.add_term(self.lhs.clone(), Scalar::one());
        p
    }

    fn is_decreasing(&self) -> bool {
        self.rhs.terms().all(|(w, _)| w < &self.lhs)
    }
}

/// Immutable-by-default set of rules, indexed by first letter.
#[derive(Debug, Clone, Default)]
pub struct ReductionSystem {
    rules: Vec<RewriteRule>,
    by_first: HashMap<Generator, Vec<usize>>,
    alphabet: Vec<Generator>,
}

impl ReductionSystem {
    /// Validates orientation and distinct left-hand sides.
    pub fn new(rules: Vec<RewriteRule>, alphabet: &[Generator]) -> Result<Self> {
        let mut sys = ReductionSystem {
            rules: Vec::new(),
            by_first: HashMap::new(),
            alphabet: alphabet.to_vec(),
        };
        for r in rules {
            sys.push(r)?;
        }
        sys.alphabet.sort();
        sys.alphabet.dedup();
        Ok(sys)
    }

    /// Orients every relation by its leading word.
    pub fn from_relations(relations: &[NCPoly], alphabet: &[Generator]) -> Result<Self> {
        let rules = relations
            .iter()
            .filter(|p| !p.is_zero())
            .map(RewriteRule::from_relation)
            .collect::<Result<Vec<_>>>()?;
        ReductionSystem::new(rules, alphabet)
    }

    pub fn push(&mut self, rule: RewriteRule) -> Result<usize> {
        if rule.lhs.is_empty() {
            return Err(Error::MalformedSystem("empty left-hand side".into()));
        }
        if !rule.is_decreasing() {
            return Err(Error::MalformedSystem(format!(
                "rule {} -> {} is not order-decreasing",
                rule.lhs, rule.rhs
            )));
        }
        if self.rules.iter().any(|r| r.lhs == rule.lhs) {
            return Err(Error::MalformedSystem(format!(
                "duplicate left-hand side {}",
                rule.lhs
            )));
        }
        for w in std::iter::once(&rule.lhs).chain(rule.rhs.terms().map(|(w, _)| w)) {
            for g in w.letters() {
                if let Err(pos) = self.alphabet.binary_search(g) {
                    self.alphabet.insert(pos, *g);
                }
            }
        }
        let idx = self.rules.len();
        self.by_first
            .entry(rule.lhs.letters()[0])
            .or_default()
            .push(idx);
        self.rules.push(rule);
        Ok(idx)
    }

    pub fn remove(&mut self, idx: usize) -> RewriteRule {
        let r = self.rules.remove(idx);
        self.by_first.clear();
        for (i, rule) in self.rules.iter().enumerate() {
            self.by_first
                .entry(rule.lhs.letters()[0])
                .or_default()
                .push(i);
        }
        r
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, i: usize) -> &RewriteRule {
        &self.rules[i]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn alphabet(&self) -> &[Generator] {
        &self.alphabet
    }

    /// Leftmost position and lowest rule index matching inside `w`.
    pub fn find_match(&self, w: &Word) -> Option<(usize, usize)> {
        let letters = w.letters();
        for pos in 0..letters.len() {
            if let Some(cands) = self.by_first.get(&letters[pos]) {
                for &r in cands {
                    if w.matches_at(&self.rules[r].lhs, pos) {
                        return Some((r, pos));
                    }
                }
            }
        }
        None
    }

    /// Every `(rule, position)` applicable to `w`.
    pub fn all_matches(&self, w: &Word) -> Vec<(usize, usize)> {
        let letters = w.letters();
        let mut out = Vec::new();
        for pos in 0..letters.len() {
            if let Some(cands) = self.by_first.get(&letters[pos]) {
                for &r in cands {
                    if w.matches_at(&self.rules[r].lhs, pos) {
                        out.push((r, pos));
                    }
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_match(w).is_none()
    }

    /// Whether some left-hand side is a suffix of `w`.
    fn has_lhs_suffix(&self, w: &Word) -> bool {
        self.rules
            .iter()
            .any(|r| r.lhs.len() <= w.len() && w.matches_at(&r.lhs, w.len() - r.lhs.len()))
    }

    /// `u · rhs · v` where `w = u · lhs · v` with `lhs` at `pos`.
    pub fn apply_at(&self, rule: usize, pos: usize, w: &Word) -> NCPoly {
        let r = &self.rules[rule];
        debug_assert!(w.matches_at(&r.lhs, pos));
        let u = w.sub(0, pos);
        let v = w.sub(pos + r.lhs.len(), w.len());
        let mut out = NCPoly::zero();
        r.rhs.add_sandwich_into(&mut out, &Scalar::one(), &u, &v);
        out
    }
}

/// One reduction: rule `rule` applied at `position` of `word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: usize,
    pub position: usize,
    pub word: Word,
}

/// Result of a normal-form computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub poly: NCPoly,
    pub trace: Vec<Step>,
}

/// Normal form under the fixed strategy: largest reducible word first,
/// leftmost occurrence, lowest rule index.
pub fn normal_form(p: &NCPoly, sys: &ReductionSystem) -> Result<Reduction> {
    normal_form_with_fuel(p, sys, DEFAULT_FUEL)
}

pub fn normal_form_with_fuel(p: &NCPoly, sys: &ReductionSystem, fuel: usize) -> Result<Reduction> {
    let mut work = p.clone();
    let mut done: BTreeMap<Word, Scalar> = BTreeMap::new();
    let mut trace = Vec::new();
    while let Some((w, c)) = work.pop_leading() {
        match sys.find_match(&w) {
            None => {
                done.insert(w, c);
            }
            Some((rule, pos)) => {
                if trace.len() >= fuel {
                    return Err(Error::FuelExhausted { steps: fuel });
                }
                let r = sys.rule(rule);
                let u = w.sub(0, pos);
                let v = w.sub(pos + r.lhs.len(), w.len());
                r.rhs.add_sandwich_into(&mut work, &c, &u, &v);
                debug_assert!(work.leading_word().is_none_or(|l| l < &w));
                trace.push(Step {
                    rule,
                    position: pos,
                    word: w,
                });
            }
        }
    }
    Ok(Reduction {
        poly: NCPoly::from_terms(done),
        trace,
    })
}

/// Source of choices for randomized reduction strategies.
pub trait Chooser {
    /// Returns an index in `0..n`.
    fn pick(&mut self, n: usize) -> usize;
}

/// Normal form with every choice of word, rule and position delegated to
/// `chooser`. Used to test strategy independence.
pub fn normal_form_by(
    p: &NCPoly,
    sys: &ReductionSystem,
    chooser: &mut dyn Chooser,
    fuel: usize,
) -> Result<NCPoly> {
    let mut cur = p.clone();
    for _ in 0..fuel {
        let mut options: Vec<(Word, usize, usize)> = Vec::new();
        for (w, _) in cur.terms() {
            for (r, pos) in sys.all_matches(w) {
                options.push((w.clone(), r, pos));
            }
        }
        if options.is_empty() {
            return Ok(cur);
        }
        let (w, r, pos) = options.swap_remove(chooser.pick(options.len()));
        let c = cur.coeff(&w);
        let mut next = cur.clone();
        next.add_term(w.clone(), c.neg());
        let rule = sys.rule(r);
        rule.rhs
            .add_sandwich_into(&mut next, &c, &w.sub(0, pos), &w.sub(pos + rule.lhs.len(), w.len()));
        cur = next;
    }
    Err(Error::FuelExhausted { steps: fuel })
}

/// Re-applies a recorded trace, checking that each step is legal.
pub fn replay(p: &NCPoly, trace: &[Step], sys: &ReductionSystem) -> Result<NCPoly> {
    let mut cur = p.clone();
    for (k, s) in trace.iter().enumerate() {
        let c = cur.coeff(&s.word);
        if c.is_zero() || s.rule >= sys.len() || !s.word.matches_at(&sys.rule(s.rule).lhs, s.position)
        {
            return Err(Error::Invalid(format!("trace step {k} does not apply")));
        }
        cur.add_term(s.word.clone(), c.neg());
        let img = sys.apply_at(s.rule, s.position, &s.word);
        cur = cur.add(&img.scale(&c));
    }
    Ok(cur)
}

/// All words of length at most `max_len` over the system's alphabet that
/// contain no left-hand side, in increasing order.
pub fn irreducible_words(sys: &ReductionSystem, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in sys.alphabet() {
                let mut e = w.clone();
                e.push(*g);
                if !sys.has_lhs_suffix(&e) {
                    next.push(e);
                }
            }
        }
        // Extending a sorted layer letter by letter keeps lexicographic order.
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::GenKind;

    fn g(r: u8, c: u8) -> Generator {
        Generator::new(0, GenKind::X(r, c))
    }

    fn sys(rels: &[&str]) -> ReductionSystem {
        let ps: Vec<NCPoly> = rels.iter().map(|s| s.parse().unwrap()).collect();
        ReductionSystem::from_relations(&ps, &[]).unwrap()
    }

    #[test]
    fn orientation_and_validation() {
        let s = sys(&["x21*x11 - q^-1*x11*x21"]);
        assert_eq!(s.rule(0).lhs.to_string(), "x21*x11");
        let bad = RewriteRule::new(Word::letter(g(1, 1)), "x22".parse().unwrap());
        assert!(ReductionSystem::new(vec![bad], &[]).is_err());
        let r = RewriteRule::new(Word::letter(g(2, 2)), "x11".parse().unwrap());
        assert!(ReductionSystem::new(vec![r.clone(), r], &[]).is_err());
    }

    #[test]
    fn irreducible_input_is_fixed() {
        let s = sys(&["x21*x11 - q^-1*x11*x21"]);
        let p: NCPoly = "x11*x21 + D".parse().unwrap();
        let red = normal_form(&p, &s).unwrap();
        assert_eq!(red.poly, p);
        assert!(red.trace.is_empty());
    }

    #[test]
    fn replay_matches() {
        let s = sys(&["x21*x11 - q^-1*x11*x21", "x22*x21 - x21*x22 - D"]);
        let p: NCPoly = "x22*x21*x11 + x21*x11*x11".parse().unwrap();
        let red = normal_form(&p, &s).unwrap();
        assert_eq!(replay(&p, &red.trace, &s).unwrap(), red.poly);
    }

    #[test]
    fn fuel_guard() {
        let s = sys(&["x21*x11 - x11*x21"]);
        let p: NCPoly = "x21*x21*x21*x11*x11*x11".parse().unwrap();
        assert!(matches!(
            normal_form_with_fuel(&p, &s, 3),
            Err(Error::FuelExhausted { steps: 3 })
        ));
        assert!(normal_form(&p, &s).is_ok());
    }

    #[test]
    fn irreducible_enumeration_small() {
        let s = ReductionSystem::new(
            vec![RewriteRule::new(
                Word::from_letters([g(2, 1), g(1, 1)]),
                "x11*x21".parse().unwrap(),
            )],
            &[g(1, 1), g(2, 1)],
        )
        .unwrap();
        let ws = irreducible_words(&s, 2);
        assert_eq!(ws.len(), 1 + 2 + 3);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(irreducible_words(&s, 0), vec![Word::empty()]);
    }
}
