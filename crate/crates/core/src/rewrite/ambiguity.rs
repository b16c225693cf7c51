//! Overlap and inclusion ambiguities, their resolution, and the confluence report.

use super::system::{normal_form, ReductionSystem, Step};
use crate::error::Result;
use crate::ncpoly::{NCPoly, Word};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// A word admitting two different first reductions.
///
/// Rule `rule_a` applies at position 0 of `witness`, rule `rule_b` at
/// `offset_b`. For overlaps `witness = lhs_a · tail` with `lhs_b` a suffix;
/// for inclusions `witness = lhs_a` and `lhs_b` is a proper factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub rule_a: usize,
    pub rule_b: usize,
    pub witness: Word,
    pub offset_b: usize,
}

/// All overlap and inclusion ambiguities, ordered by `(rule_a, rule_b)`
/// then by overlap offset.
pub fn find_ambiguities(sys: &ReductionSystem) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    let rules = sys.rules();
    for (a, ra) in rules.iter().enumerate() {
        for (b, rb) in rules.iter().enumerate() {
            let (la, lb) = (&ra.lhs, &rb.lhs);
            // Overlap: proper suffix of la of length k equals proper prefix of lb.
            for k in 1..la.len().min(lb.len()) {
                let start = la.len() - k;
                if la.letters()[start..] == lb.letters()[..k] {
                    out.push(Ambiguity {
                        kind: AmbiguityKind::Overlap,
                        rule_a: a,
                        rule_b: b,
                        witness: la.concat(&lb.sub(k, lb.len())),
                        offset_b: start,
                    });
                }
            }
            if a != b && lb.len() < la.len() {
                for pos in 0..=la.len() - lb.len() {
                    if la.matches_at(lb, pos) {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Inclusion,
                            rule_a: a,
                            rule_b: b,
                            witness: la.clone(),
                            offset_b: pos,
                        });
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionCertificate {
    pub ambiguity: Ambiguity,
    pub left_normal_form: NCPoly,
    pub right_normal_form: NCPoly,
    pub resolvable: bool,
    /// Starts with the `rule_a` step on the witness.
    pub left_trace: Vec<Step>,
    /// Starts with the `rule_b` step on the witness.
    pub right_trace: Vec<Step>,
}

/// Reduces the witness once by each rule, then to normal form.
pub fn resolve_ambiguity(amb: &Ambiguity, sys: &ReductionSystem) -> Result<ResolutionCertificate> {
    let side = |rule: usize, pos: usize| -> Result<(NCPoly, Vec<Step>)> {
        let first = sys.apply_at(rule, pos, &amb.witness);
        let red = normal_form(&first, sys)?;
        let mut trace = vec![Step {
            rule,
            position: pos,
            word: amb.witness.clone(),
        }];
        trace.extend(red.trace);
        Ok((red.poly, trace))
    };
    let (left, left_trace) = side(amb.rule_a, 0)?;
    let (right, right_trace) = side(amb.rule_b, amb.offset_b)?;
    Ok(ResolutionCertificate {
        ambiguity: amb.clone(),
        resolvable: left == right,
        left_normal_form: left,
        right_normal_form: right,
        left_trace,
        right_trace,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleEntry {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AmbiguityEntry {
    pub kind: AmbiguityKind,
    pub rule_a: usize,
    pub rule_b: usize,
    pub witness: String,
    pub resolvable: bool,
    pub left_normal_form: Option<String>,
    pub right_normal_form: Option<String>,
    pub left_trace: Vec<(usize, usize)>,
    pub right_trace: Vec<(usize, usize)>,
    pub error: Option<String>,
}

/// Field order is fixed by declaration order, which keeps JSON stable.
#[derive(Debug, Clone, Serialize)]
pub struct ConfluenceReport {
    pub rules: Vec<RuleEntry>,
    pub ambiguities: Vec<AmbiguityEntry>,
    pub total: usize,
    pub resolved: usize,
    pub confluent: bool,
    #[serde(skip)]
    pub certificates: Vec<ResolutionCertificate>,
}

impl ConfluenceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn compact(t: &[Step]) -> Vec<(usize, usize)> {
    t.iter().map(|s| (s.rule, s.position)).collect()
}

/// Enumerates and resolves every ambiguity. Failures, fuel exhaustion
/// included, are recorded in the report.
pub fn check_diamond(sys: &ReductionSystem) -> ConfluenceReport {
    let rules = sys
        .rules()
        .iter()
        .enumerate()
        .map(|(index, r)| RuleEntry {
            index,
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
        })
        .collect();
    let ambs = find_ambiguities(sys);
    let mut entries = Vec::with_capacity(ambs.len());
    let mut certificates = Vec::new();
    for amb in &ambs {
        let base = AmbiguityEntry {
            kind: amb.kind,
            rule_a: amb.rule_a,
            rule_b: amb.rule_b,
            witness: amb.witness.to_string(),
            resolvable: false,
            left_normal_form: None,
            right_normal_form: None,
            left_trace: Vec::new(),
            right_trace: Vec::new(),
            error: None,
        };
        match resolve_ambiguity(amb, sys) {
            Ok(cert) => {
                entries.push(AmbiguityEntry {
                    resolvable: cert.resolvable,
                    left_normal_form: Some(cert.left_normal_form.to_string()),
                    right_normal_form: Some(cert.right_normal_form.to_string()),
                    left_trace: compact(&cert.left_trace),
                    right_trace: compact(&cert.right_trace),
                    ..base
                });
                certificates.push(cert);
            }
            Err(e) => entries.push(AmbiguityEntry {
                error: Some(e.to_string()),
                ..base
            }),
        }
    }
    let resolved = entries.iter().filter(|e| e.resolvable).count();
    ConfluenceReport {
        rules,
        total: entries.len(),
        confluent: resolved == entries.len(),
        resolved,
        ambiguities: entries,
        certificates,
    }
}
