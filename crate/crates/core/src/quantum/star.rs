//! The involution on `𝒢(E, Ē)`: `x* = E⁻¹d⁻¹xᵗE`, `d* = d⁻¹`.

use super::maps::{verify_structural_map, AlgebraMap, RelationVerdict};
use super::presentation::{build_gab, Presentation};
use crate::error::{Error, Result};
use crate::invariants::{cqg_condition, Positivity};
use crate::ncpoly::{Generator, NCPoly};
use crate::rewrite::Membership;
use crate::scalar::{Scalar, ScalarMatrix};
use serde::Serialize;
use std::collections::BTreeMap;

/// Antilinear anti-multiplicative map given by generator images.
#[derive(Debug, Clone)]
pub struct StarMap {
    images: BTreeMap<Generator, NCPoly>,
}

impl StarMap {
    /// `x_ij* = Σ_{k,l} E_ki (E⁻¹)_jl d⁻¹ x_kl`.
    pub fn new(e: &ScalarMatrix) -> Result<Self> {
        let n = e.rows();
        let ei = e.inverse()?;
        let di = Generator::d_inv();
        let mut images = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let mut p = NCPoly::zero();
                for k in 0..n {
                    for l in 0..n {
                        let c = e.get(k, i).mul(ei.get(j, l));
                        let w = crate::ncpoly::Word::from_letters([di, Generator::x(k + 1, l + 1)]);
                        p.add_term(w, c);
                    }
                }
                images.insert(Generator::x(i + 1, j + 1), p);
            }
        }
        images.insert(Generator::d(), NCPoly::gen(di));
        images.insert(di, NCPoly::gen(Generator::d()));
        Ok(StarMap { images })
    }

    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        p.map_coeffs(Scalar::conj)
            .substitute(&|g| self.images[&g].clone(), true)
    }

    pub fn image(&self, g: Generator) -> &NCPoly {
        &self.images[&g]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StarCertificate {
    pub lambda: String,
    pub positivity: Positivity,
    pub well_defined: Vec<RelationVerdict>,
    pub involutive: Vec<RelationVerdict>,
    pub unitary: Vec<RelationVerdict>,
    pub pass: bool,
}

fn verdict(index: usize, relation: String, m: Membership) -> RelationVerdict {
    let (verified, residue) = match m {
        Membership::VerifiedZero { .. } => (true, None),
        Membership::Unknown { residue, .. } => (false, Some(residue.to_string())),
    };
    RelationVerdict {
        index,
        relation,
        verified,
        steps: 0,
        residue,
    }
}

/// Checks well-definedness, involutivity and unitarity of the star on
/// `𝒢(E, Ē)`, after the gate `ĒᵗEᵗĒE = λI` with `λ` positive.
pub fn verify_star_structure(e: &ScalarMatrix, bound: usize) -> Result<StarCertificate> {
    let cqg = cqg_condition(e)?;
    let lambda = match (&cqg.lambda, cqg.pass) {
        (Some(l), true) => l.clone(),
        (Some(l), false) => {
            return Err(Error::precondition(
                "lambda positive",
                format!("lambda = {l}"),
            ))
        }
        (None, _) => {
            return Err(Error::precondition(
                "conj(E)^t E^t conj(E) E = lambda I",
                "product is not scalar",
            ))
        }
    };
    let p: Presentation = build_gab(e, &e.conj(), true)?;
    let star = StarMap::new(e)?;
    let mut basis = p.ideal_basis()?;

    // Well-definedness: star maps each relation into the ideal. The star is
    // antilinear, which a plain algebra map cannot express, so conjugate the
    // relations first and use the anti-multiplicative substitution.
    let conj_rel = Presentation {
        relations: p
            .relations
            .iter()
            .map(|r| r.map_coeffs(Scalar::conj))
            .collect(),
        ..p.clone()
    };
    let as_map = AlgebraMap::new("star", star.images.clone(), true);
    let well = verify_structural_map(&as_map, &conj_rel, &mut basis, bound)?;
    let well_defined: Vec<RelationVerdict> = well
        .relations
        .into_iter()
        .zip(&p.relations)
        .map(|(v, r)| RelationVerdict {
            relation: r.to_string(),
            ..v
        })
        .collect();

    let mut involutive = Vec::new();
    for g in &p.generators {
        let twice = star.apply(star.image(*g));
        let diff = twice.sub(&NCPoly::gen(*g));
        involutive.push(verdict(involutive.len(), g.to_string(), basis.member(&diff, bound)?));
    }

    let n = e.rows();
    let x = p.x();
    // (x*)_ij = (x_ji)*
    let xs = |i: usize, j: usize| star.image(Generator::x(j + 1, i + 1)).clone();
    let mut unitary = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j { NCPoly::one() } else { NCPoly::zero() };
            let mut left = NCPoly::zero();
            let mut right = NCPoly::zero();
            for k in 0..n {
                left = left.add(&xs(i, k).mul(x.get(k, j)));
                right = right.add(&x.get(i, k).mul(&xs(k, j)));
            }
            let lbl = format!("(x* x)({},{})", i + 1, j + 1);
            unitary.push(verdict(unitary.len(), lbl, basis.member(&left.sub(&delta), bound)?));
            let lbl = format!("(x x*)({},{})", i + 1, j + 1);
            unitary.push(verdict(unitary.len(), lbl, basis.member(&right.sub(&delta), bound)?));
        }
    }
    let d = NCPoly::gen(Generator::d());
    let ds = star.image(Generator::d()).clone();
    for (lbl, prod) in [("d* d", ds.mul(&d)), ("d d*", d.mul(&ds))] {
        unitary.push(verdict(
            unitary.len(),
            lbl.into(),
            basis.member(&prod.sub(&NCPoly::one()), bound)?,
        ));
    }
    let pass = well_defined
        .iter()
        .chain(&involutive)
        .chain(&unitary)
        .all(|v| v.verified);
    Ok(StarCertificate {
        lambda: lambda.to_string(),
        positivity: cqg.positivity.expect("lambda present"),
        well_defined,
        involutive,
        unitary,
        pass,
    })
}
