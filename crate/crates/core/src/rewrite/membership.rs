//! Sound ideal-membership certificates via bounded noncommutative completion.
//!
//! A basis element is always an ideal member: either an input relation or
//! a reduced S-polynomial of two earlier members. Reducing a query to zero
//! against such elements is therefore a proof of membership. When the basis
//! is not known to be complete, a nonzero residue proves nothing.

use super::system::{normal_form, ReductionSystem, RewriteRule};
use crate::error::Result;
use crate::ncpoly::{NCPoly, Word};
use serde::Serialize;

/// Longest overlap witness processed by default.
pub const DEFAULT_MAX_LEN: usize = 5;
/// Default number of completion rounds.
pub const DEFAULT_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Origin {
    /// Index into the relations the basis was built from.
    Input(usize),
    /// Reduced S-polynomial of two basis elements.
    Overlap { a: usize, b: usize, witness: String },
    /// Element `.0` re-reduced after a new leading word made it reducible.
    Reduced(usize),
    /// Commutation of letters from distinct tensor slots.
    Commutation,
}

#[derive(Debug, Clone)]
pub struct BasisElement {
    /// Monic relation polynomial.
    pub poly: NCPoly,
    pub origin: Origin,
}

#[derive(Debug, Clone)]
struct Pair {
    a: usize,
    b: usize,
    witness: Word,
    offset_b: usize,
}

/// One step of a membership certificate, naming a basis element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberStep {
    pub element: usize,
    pub position: usize,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    VerifiedZero {
        trace: Vec<MemberStep>,
    },
    /// Not a disproof unless `basis_complete`.
    Unknown {
        residue: NCPoly,
        basis_complete: bool,
    },
}

impl Membership {
    pub fn is_verified(&self) -> bool {
        matches!(self, Membership::VerifiedZero { .. })
    }
}

/// Growing set of ideal members kept interreduced by leading word.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    elements: Vec<BasisElement>,
    /// Element id of each rule of `system`.
    active: Vec<usize>,
    system: ReductionSystem,
    pending: Vec<Pair>,
    deferred: Vec<Pair>,
    max_len: usize,
    rounds: usize,
}

impl IdealBasis {
    pub fn new(relations: &[NCPoly], max_len: usize) -> Result<Self> {
        let mut b = IdealBasis::empty(max_len);
        for (i, r) in relations.iter().enumerate() {
            b.insert(r.clone(), Origin::Input(i))?;
        }
        Ok(b)
    }

    fn empty(max_len: usize) -> Self {
        IdealBasis {
            elements: Vec::new(),
            active: Vec::new(),
            system: ReductionSystem::default(),
            pending: Vec::new(),
            deferred: Vec::new(),
            max_len,
            rounds: 0,
        }
    }

    /// Adopts a system already certified confluent. No pairs are queued.
    pub fn from_confluent(sys: &ReductionSystem) -> Self {
        let mut b = IdealBasis::empty(DEFAULT_MAX_LEN);
        for (i, r) in sys.rules().iter().enumerate() {
            b.elements.push(BasisElement {
                poly: r.as_relation(),
                origin: Origin::Input(i),
            });
            b.active.push(i);
        }
        b.system = sys.clone();
        b
    }

    /// Basis of a tensor product: both factors, relabelled into `left_slot`
    /// and `right_slot`, plus `right·left → left·right` for every letter
    /// pair. Complete when both factors are.
    pub fn tensor(left: &IdealBasis, right: &IdealBasis, left_slot: u8, right_slot: u8) -> Result<Self> {
        let mut out = IdealBasis::empty(left.max_len.max(right.max_len));
        let ls = left.system.alphabet().iter().map(|g| g.in_slot(left_slot));
        let rs: Vec<_> = right
            .system
            .alphabet()
            .iter()
            .map(|g| g.in_slot(right_slot))
            .collect();
        let mut polys = Vec::new();
        for (src, slot) in [(left, left_slot), (right, right_slot)] {
            for &id in &src.active {
                let p = src.elements[id].poly.substitute(&|g| NCPoly::gen(g.in_slot(slot)), false);
                polys.push((p, Origin::Input(polys.len())));
            }
        }
        for l in ls {
            for r in &rs {
                let lhs = NCPoly::gen(*r).mul(&NCPoly::gen(l));
                let rhs = NCPoly::gen(l).mul(&NCPoly::gen(*r));
                polys.push((lhs.sub(&rhs), Origin::Commutation));
            }
        }
        if left.is_complete() && right.is_complete() {
            // Union of confluent systems on disjoint alphabets with the
            // commutation rules is confluent; add rules without pairing.
            for (p, origin) in polys {
                let rule = RewriteRule::from_relation(&p.monic())?;
                out.system.push(rule)?;
                out.active.push(out.elements.len());
                out.elements.push(BasisElement { poly: p.monic(), origin });
            }
            return Ok(out);
        }
        for (p, origin) in polys {
            out.insert(p, origin)?;
        }
        Ok(out)
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn set_max_len(&mut self, max_len: usize) {
        if max_len > self.max_len {
            let (now, later): (Vec<_>, Vec<_>) =
                self.deferred.drain(..).partition(|p| p.witness.len() <= max_len);
            self.pending.extend(now);
            self.deferred = later;
        }
        self.max_len = max_len;
    }

    pub fn system(&self) -> &ReductionSystem {
        &self.system
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    fn alive(&self, id: usize) -> bool {
        self.active.contains(&id)
    }

    /// No unprocessed and no skipped pairs among live elements.
    pub fn is_complete(&self) -> bool {
        self.pending.iter().all(|p| !self.alive(p.a) || !self.alive(p.b))
            && self
                .deferred
                .iter()
                .all(|p| !self.alive(p.a) || !self.alive(p.b))
    }

    /// Reduces and adds `p`, interreducing and queueing new pairs.
    fn insert(&mut self, p: NCPoly, origin: Origin) -> Result<bool> {
        let mut queue = vec![(p, origin)];
        let mut changed = false;
        while let Some((p, origin)) = queue.pop() {
            let r = normal_form(&p, &self.system)?.poly.monic();
            let Some(lw) = r.leading_word().cloned() else {
                continue;
            };
            if lw.is_empty() {
                // The ideal is the whole algebra; keep it as a unit rule is
                // impossible, so record the constant and stop pairing.
                return Err(crate::error::Error::MalformedSystem(
                    "relations generate the unit ideal".into(),
                ));
            }
            changed = true;
            let id = self.elements.len();
            let mut i = 0;
            while i < self.system.len() {
                if self.system.rule(i).lhs.find(&lw).is_some() {
                    self.system.remove(i);
                    let old = self.active.remove(i);
                    queue.push((self.elements[old].poly.clone(), Origin::Reduced(old)));
                } else {
                    i += 1;
                }
            }
            self.system.push(RewriteRule::from_relation(&r)?)?;
            self.elements.push(BasisElement { poly: r, origin });
            self.active.push(id);
            for k in 0..self.active.len() {
                let other = self.active[k];
                self.queue_overlaps(id, other);
                if other != id {
                    self.queue_overlaps(other, id);
                }
            }
        }
        Ok(changed)
    }

    fn lead(&self, id: usize) -> &Word {
        self.elements[id].poly.leading_word().expect("nonzero element")
    }

    fn queue_overlaps(&mut self, a: usize, b: usize) {
        let (la, lb) = (self.lead(a).clone(), self.lead(b).clone());
        for k in 1..la.len().min(lb.len()) {
            let start = la.len() - k;
            if la.letters()[start..] == lb.letters()[..k] {
                let pair = Pair {
                    a,
                    b,
                    witness: la.concat(&lb.sub(k, lb.len())),
                    offset_b: start,
                };
                if pair.witness.len() <= self.max_len {
                    self.pending.push(pair);
                } else {
                    self.deferred.push(pair);
                }
            }
        }
    }

    /// Processes every queued pair once. Returns whether the basis grew.
    pub fn complete_round(&mut self) -> Result<bool> {
        let mut pairs = std::mem::take(&mut self.pending);
        pairs.sort_by(|x, y| x.witness.cmp(&y.witness));
        let mut changed = false;
        for pr in pairs {
            if !self.alive(pr.a) || !self.alive(pr.b) {
                continue;
            }
            let pa = &self.elements[pr.a].poly;
            let pb = &self.elements[pr.b].poly;
            let tail = pr.witness.sub(self.lead(pr.a).len(), pr.witness.len());
            let head = pr.witness.sub(0, pr.offset_b);
            let mut s = NCPoly::zero();
            pa.add_sandwich_into(&mut s, &crate::scalar::Scalar::one(), &Word::empty(), &tail);
            pb.add_sandwich_into(&mut s, &crate::scalar::Scalar::one().neg(), &head, &Word::empty());
            let origin = Origin::Overlap {
                a: pr.a,
                b: pr.b,
                witness: pr.witness.to_string(),
            };
            changed |= self.insert(s, origin)?;
        }
        self.rounds += 1;
        Ok(changed)
    }

    /// Runs rounds until complete or `bound` total rounds have run.
    pub fn complete(&mut self, bound: usize) -> Result<bool> {
        while !self.is_complete() && self.rounds < bound {
            if self.pending.is_empty() {
                break;
            }
            self.complete_round()?;
        }
        Ok(self.is_complete())
    }

    /// Reduces `p`, completing further (up to `bound` rounds) only while the
    /// residue is nonzero.
    pub fn member(&mut self, p: &NCPoly, bound: usize) -> Result<Membership> {
        loop {
            let red = normal_form(p, &self.system)?;
            if red.poly.is_zero() {
                let trace = red
                    .trace
                    .into_iter()
                    .map(|s| MemberStep {
                        element: self.active[s.rule],
                        position: s.position,
                        word: s.word.to_string(),
                    })
                    .collect();
                return Ok(Membership::VerifiedZero { trace });
            }
            let live_pending = self
                .pending
                .iter()
                .any(|pr| self.alive(pr.a) && self.alive(pr.b));
            if self.rounds >= bound || !live_pending {
                return Ok(Membership::Unknown {
                    residue: red.poly,
                    basis_complete: self.is_complete(),
                });
            }
            self.complete_round()?;
        }
    }

    /// Normal form against the current basis.
    pub fn reduce(&self, p: &NCPoly) -> Result<NCPoly> {
        Ok(normal_form(p, &self.system)?.poly)
    }
}

/// One-shot membership test of `p` in the two-sided ideal of `relations`.
pub fn ideal_membership_search(p: &NCPoly, relations: &[NCPoly], bound: usize) -> Result<Membership> {
    let mut basis = IdealBasis::new(relations, DEFAULT_MAX_LEN)?;
    basis.member(p, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NCPoly {
        s.parse().unwrap()
    }

    #[test]
    fn relation_itself() {
        let rels = [p("x21*x11 - q*x11*x21"), p("x22*x12 - x12*x22")];
        let m = ideal_membership_search(&rels[0], &rels, 1).unwrap();
        match m {
            Membership::VerifiedZero { trace } => assert_eq!(trace.len(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unit_is_unknown() {
        let rels = [p("x21*x11 - q*x11*x21")];
        let m = ideal_membership_search(&NCPoly::one(), &rels, 2).unwrap();
        assert!(matches!(m, Membership::Unknown { basis_complete: true, .. }));
    }

    #[test]
    fn completion_finds_consequence() {
        // ab = c and bc = a imply a·c − c·a... via S-polynomial abc:
        // (ab)c = cc and a(bc) = aa, so cc − aa is a member.
        let rels = [p("x11*x12 - x13"), p("x12*x13 - x11")];
        let target = p("x13*x13 - x11*x11");
        let m = ideal_membership_search(&target, &rels, 3).unwrap();
        assert!(m.is_verified(), "{m:?}");
    }

    #[test]
    fn interreduction_keeps_members() {
        let rels = [p("x11*x12 - x21"), p("x12 - x22")];
        let mut b = IdealBasis::new(&rels, 4).unwrap();
        assert!(b.member(&p("x11*x22 - x21"), 2).unwrap().is_verified());
        assert!(b.is_complete());
    }
}
