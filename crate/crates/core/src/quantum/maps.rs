//! Algebra maps between presentations and their verification.

use super::presentation::{build_gabcd, tensor_presentation, GabcdData, Presentation};
use crate::error::{Error, Result};
use crate::ncpoly::{GenKind, Generator, NCMatrix, NCPoly, Word};
use crate::rewrite::{IdealBasis, Membership};
use crate::scalar::{Scalar, ScalarMatrix};
use serde::Serialize;
use std::collections::BTreeMap;

/// Generator images; `anti` reverses products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    pub name: String,
    pub images: BTreeMap<Generator, NCPoly>,
    pub anti: bool,
}

impl AlgebraMap {
    pub fn new(name: impl Into<String>, images: BTreeMap<Generator, NCPoly>, anti: bool) -> Self {
        AlgebraMap {
            name: name.into(),
            images,
            anti,
        }
    }

    pub fn identity(p: &Presentation) -> Self {
        let images = p.generators.iter().map(|g| (*g, NCPoly::gen(*g))).collect();
        AlgebraMap::new("id", images, false)
    }

    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        if let Some(g) = p.generators().into_iter().find(|g| !self.images.contains_key(g)) {
            return Err(Error::Invalid(format!("map {} has no image for {g}", self.name)));
        }
        Ok(p.substitute(&|g| self.images[&g].clone(), self.anti))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &AlgebraMap) -> Result<AlgebraMap> {
        let mut images = BTreeMap::new();
        for (g, img) in &self.images {
            images.insert(*g, then.apply(img)?);
        }
        Ok(AlgebraMap::new(
            format!("{} . {}", then.name, self.name),
            images,
            self.anti != then.anti,
        ))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationVerdict {
    pub index: usize,
    pub relation: String,
    pub verified: bool,
    /// Length of the reduction certificate when verified.
    pub steps: usize,
    pub residue: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MapCertificate {
    pub map: String,
    pub relations: Vec<RelationVerdict>,
    pub pass: bool,
}

fn verdict(index: usize, relation: String, m: Membership) -> RelationVerdict {
    match m {
        Membership::VerifiedZero { trace } => RelationVerdict {
            index,
            relation,
            verified: true,
            steps: trace.len(),
            residue: None,
        },
        Membership::Unknown { residue, .. } => RelationVerdict {
            index,
            relation,
            verified: false,
            steps: 0,
            residue: Some(residue.to_string()),
        },
    }
}

/// Checks that every relation of `source` maps into the ideal described by
/// `target`.
pub fn verify_structural_map(
    map: &AlgebraMap,
    source: &Presentation,
    target: &mut IdealBasis,
    bound: usize,
) -> Result<MapCertificate> {
    let mut relations = Vec::new();
    for (i, r) in source.relations.iter().enumerate() {
        let img = map.apply(r)?;
        relations.push(verdict(i, r.to_string(), target.member(&img, bound)?));
    }
    Ok(MapCertificate {
        map: map.name.clone(),
        pass: relations.iter().all(|v| v.verified),
        relations,
    })
}

fn data(p: &Presentation) -> Result<&GabcdData> {
    p.data
        .as_ref()
        .ok_or_else(|| Error::Invalid("presentation carries no matrix data".into()))
}

fn x_gen(slot: u8, i: usize, j: usize) -> Generator {
    Generator::new(slot, GenKind::X(i as u8, j as u8))
}

/// `Δ: 𝒢(A,B|C,D) → 𝒢(A,B|X,Y) ⊗ 𝒢(X,Y|C,D)` together with the target.
pub fn comultiplication(
    source: &Presentation,
    x: &ScalarMatrix,
    y: &ScalarMatrix,
) -> Result<(AlgebraMap, Presentation)> {
    let dt = data(source)?;
    let left = build_gabcd(&dt.a, &dt.b, x, y, source.with_d_inv)?;
    let right = build_gabcd(x, y, &dt.c, &dt.d, source.with_d_inv)?;
    let target = tensor_presentation(&left, &right);
    Ok((comultiplication_map(source, x.rows(), 1, 2), target))
}

/// Generator images of `Δ` into the given slots with inner size `k`.
pub fn comultiplication_map(source: &Presentation, k: usize, ls: u8, rs: u8) -> AlgebraMap {
    let mut images = BTreeMap::new();
    for g in &source.generators {
        let img = match g.kind {
            GenKind::X(i, j) => {
                let mut p = NCPoly::zero();
                for l in 1..=k {
                    let w = Word::from_letters([x_gen(ls, i as usize, l), x_gen(rs, l, j as usize)]);
                    p.add_term(w, Scalar::one());
                }
                p
            }
            kind => NCPoly::word(Word::from_letters([
                Generator::new(ls, kind),
                Generator::new(rs, kind),
            ])),
        };
        images.insert(*g, img);
    }
    AlgebraMap::new("comultiplication", images, false)
}

/// `ε: 𝒢(A,B) → k`; requires `(A,B) = (C,D)`.
pub fn counit(source: &Presentation) -> Result<AlgebraMap> {
    let dt = data(source)?;
    if dt.a != dt.c || dt.b != dt.d {
        return Err(Error::Invalid("counit needs 𝒢(A,B|A,B)".into()));
    }
    let images = source
        .generators
        .iter()
        .map(|g| {
            let v = match g.kind {
                GenKind::X(i, j) if i != j => NCPoly::zero(),
                _ => NCPoly::one(),
            };
            (*g, v)
        })
        .collect();
    Ok(AlgebraMap::new("counit", images, false))
}

/// `S: 𝒢(A,B|C,D) → 𝒢(C,D|A,B)^op`, `S(x) = A⁻¹d⁻¹xᵗC`, `S(d^±) = d^∓`.
pub fn antipode(source: &Presentation) -> Result<(AlgebraMap, Presentation)> {
    let dt = data(source)?;
    if !source.with_d_inv {
        return Err(Error::Invalid("antipode needs d_inv".into()));
    }
    let target = build_gabcd(&dt.c, &dt.d, &dt.a, &dt.b, true)?;
    let a_inv = dt.a.inverse()?;
    let y = NCMatrix::generators(source.n_cols, source.n_rows, 0);
    let di = NCPoly::gen(Generator::d_inv());
    let s = NCMatrix::scalar_matrix_mul(&a_inv, &y.transpose().left_times(&di))?.mul_scalar_matrix(&dt.c)?;
    let mut images = BTreeMap::new();
    images.insert(Generator::d(), di.clone());
    images.insert(Generator::d_inv(), NCPoly::gen(Generator::d()));
    for (i, j, v) in s.entries() {
        images.insert(Generator::x(i + 1, j + 1), v.clone());
    }
    Ok((AlgebraMap::new("antipode", images, true), target))
}

/// `Σ_k` of products of entries with the letters of `p` sorted stably by
/// slot; letters of distinct slots commute in a tensor product.
fn slot_sorted(p: &NCPoly) -> NCPoly {
    NCPoly::from_terms(p.terms().map(|(w, c)| {
        let mut ls: Vec<Generator> = w.letters().to_vec();
        ls.sort_by_key(|g| g.slot);
        (Word::from_letters(ls), c.clone())
    }))
}

#[derive(Debug, Clone, Serialize)]
pub struct HopfCertificate {
    pub coassociativity: bool,
    pub counit_left: bool,
    pub counit_right: bool,
    pub antipode_right: Vec<RelationVerdict>,
    pub antipode_left: Vec<RelationVerdict>,
    pub pass: bool,
}

/// Hopf identities of `𝒢(A,B)` on generators. The basis describes the
/// ideal of `p` itself.
pub fn verify_hopf_identities(
    p: &Presentation,
    basis: &mut IdealBasis,
    bound: usize,
) -> Result<HopfCertificate> {
    if p.n_rows != p.n_cols {
        return Err(Error::ShapeMismatch("Hopf identities need a square x".into()));
    }
    let n = p.n_rows;
    let delta12 = comultiplication_map(p, n, 1, 2);
    // Maps on the two-slot algebra: apply Δ to one slot, shift the other.
    let lift = |delta_slot: u8, other: u8, ds: (u8, u8)| {
        let mut imgs = BTreeMap::new();
        let d = comultiplication_map(p, n, ds.0, ds.1);
        for g in &p.generators {
            imgs.insert(g.in_slot(delta_slot), d.images[g].clone());
            imgs.insert(
                g.in_slot(if delta_slot == 1 { 2 } else { 1 }),
                NCPoly::gen(g.in_slot(other)),
            );
        }
        AlgebraMap::new("lift", imgs, false)
    };
    let left_route = delta12.then(&lift(1, 3, (1, 2)))?;
    let right_route = delta12.then(&lift(2, 1, (2, 3)))?;
    let coassociativity = p
        .generators
        .iter()
        .all(|g| slot_sorted(&left_route.images[g]) == slot_sorted(&right_route.images[g]));

    let eps = counit(p)?;
    let counit_route = |eps_slot: u8| -> Result<bool> {
        let mut imgs = BTreeMap::new();
        for g in &p.generators {
            imgs.insert(g.in_slot(eps_slot), eps.images[g].clone());
            imgs.insert(g.in_slot(3 - eps_slot), NCPoly::gen(*g));
        }
        let m = AlgebraMap::new("counit-side", imgs, false);
        let composed = delta12.then(&m)?;
        Ok(p.generators.iter().all(|g| composed.images[g] == NCPoly::gen(*g)))
    };
    let counit_right = counit_route(2)?;
    let counit_left = counit_route(1)?;

    let (s, _) = antipode(p)?;
    let mut right = Vec::new();
    let mut left = Vec::new();
    let x = p.x();
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j { NCPoly::one() } else { NCPoly::zero() };
            let mut r = NCPoly::zero();
            let mut l = NCPoly::zero();
            for k in 0..n {
                let sx_kj = &s.images[&Generator::x(k + 1, j + 1)];
                let sx_ik = &s.images[&Generator::x(i + 1, k + 1)];
                r = r.add(&x.get(i, k).mul(sx_kj));
                l = l.add(&sx_ik.mul(x.get(k, j)));
            }
            let label = format!("({},{})", i + 1, j + 1);
            right.push(verdict(right.len(), label.clone(), basis.member(&r.sub(&delta), bound)?));
            left.push(verdict(left.len(), label, basis.member(&l.sub(&delta), bound)?));
        }
    }
    for g in [Generator::d(), Generator::d_inv()] {
        let gp = NCPoly::gen(g);
        let sg = &s.images[&g];
        let one = NCPoly::one();
        right.push(verdict(right.len(), g.to_string(), basis.member(&gp.mul(sg).sub(&one), bound)?));
        left.push(verdict(left.len(), g.to_string(), basis.member(&sg.mul(&gp).sub(&one), bound)?));
    }
    let pass = coassociativity
        && counit_left
        && counit_right
        && right.iter().chain(&left).all(|v| v.verified);
    Ok(HopfCertificate {
        coassociativity,
        counit_left,
        counit_right,
        antipode_right: right,
        antipode_left: left,
        pass,
    })
}

/// A candidate algebra map with an optional inverse.
#[derive(Debug, Clone)]
pub struct MorphismSpec {
    pub source: Presentation,
    pub target: Presentation,
    pub map: AlgebraMap,
    pub inverse: Option<AlgebraMap>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MorphismCertificate {
    pub forward: MapCertificate,
    pub backward: Option<MapCertificate>,
    /// `f⁻¹∘f` and `f∘f⁻¹` fix every generator modulo the relations.
    pub round_trip: Option<bool>,
    pub pass: bool,
}

pub fn verify_morphism(spec: &MorphismSpec, bound: usize) -> Result<MorphismCertificate> {
    let mut tb = spec.target.ideal_basis()?;
    let forward = verify_structural_map(&spec.map, &spec.source, &mut tb, bound)?;
    let (backward, round_trip) = match &spec.inverse {
        None => (None, None),
        Some(inv) => {
            let mut sb = spec.source.ideal_basis()?;
            let back = verify_structural_map(inv, &spec.target, &mut sb, bound)?;
            let there = spec.map.then(inv)?;
            let back_again = inv.then(&spec.map)?;
            let mut ok = true;
            for g in &spec.source.generators {
                let diff = there.images[g].sub(&NCPoly::gen(*g));
                ok &= sb.member(&diff, bound)?.is_verified();
            }
            for g in &spec.target.generators {
                let diff = back_again.images[g].sub(&NCPoly::gen(*g));
                ok &= tb.member(&diff, bound)?.is_verified();
            }
            (Some(back), Some(ok))
        }
    };
    let pass = forward.pass
        && backward.as_ref().is_none_or(|b| b.pass)
        && round_trip.unwrap_or(true);
    Ok(MorphismCertificate {
        forward,
        backward,
        round_trip,
        pass,
    })
}

/// Images `x ↦ L·y·R` entrywise, optionally followed by `d⁻¹` before `R`,
/// and the given images of `d`, `d⁻¹`.
fn matrix_map(
    name: &str,
    rows: usize,
    cols: usize,
    left: &ScalarMatrix,
    right: &ScalarMatrix,
    flip_d: bool,
) -> Result<AlgebraMap> {
    let y = NCMatrix::generators(rows, cols, 0);
    let di = NCPoly::gen(Generator::d_inv());
    let inner = if flip_d { y.times(&di) } else { y };
    let img = NCMatrix::scalar_matrix_mul(left, &inner)?.mul_scalar_matrix(right)?;
    let mut images = BTreeMap::new();
    for (i, j, v) in img.entries() {
        images.insert(Generator::x(i + 1, j + 1), v.clone());
    }
    let (d, dinv) = (NCPoly::gen(Generator::d()), di);
    if flip_d {
        images.insert(Generator::d(), dinv);
        images.insert(Generator::d_inv(), d);
    } else {
        images.insert(Generator::d(), d);
        images.insert(Generator::d_inv(), dinv);
    }
    Ok(AlgebraMap::new(name, images, false))
}

fn congruence(p: &ScalarMatrix, m: &ScalarMatrix) -> Result<ScalarMatrix> {
    ScalarMatrix::product(&[&p.transpose(), m, p])
}

fn inverse_congruence(p: &ScalarMatrix, m: &ScalarMatrix) -> Result<ScalarMatrix> {
    let pi = p.inverse()?;
    ScalarMatrix::product(&[&pi, m, &pi.transpose()])
}

/// `ψ(x) = P y Q⁻¹` from `𝒢(A,B|C,D)` to
/// `𝒢(PᵗAP, P⁻¹BP⁻ᵗ | QᵗCQ, Q⁻¹DQ⁻ᵗ)`, with inverse `y ↦ P⁻¹xQ`.
pub fn congruence_morphism(
    dt: &GabcdData,
    p: &ScalarMatrix,
    q: &ScalarMatrix,
) -> Result<MorphismSpec> {
    let source = build_gabcd(&dt.a, &dt.b, &dt.c, &dt.d, true)?;
    let target = build_gabcd(
        &congruence(p, &dt.a)?,
        &inverse_congruence(p, &dt.b)?,
        &congruence(q, &dt.c)?,
        &inverse_congruence(q, &dt.d)?,
        true,
    )?;
    let (n, m) = (source.n_rows, source.n_cols);
    let (pi, qi) = (p.inverse()?, q.inverse()?);
    Ok(MorphismSpec {
        map: matrix_map("congruence", n, m, p, &qi, false)?,
        inverse: Some(matrix_map("congruence inverse", n, m, &pi, q, false)?),
        source,
        target,
    })
}

/// `ψ(x) = y d⁻¹`, `ψ(d^±) = d^∓` from `𝒢(A,B|C,D)` to `𝒢(B⁻¹,A⁻¹|D⁻¹,C⁻¹)`.
/// The same formula gives the inverse.
pub fn inversion_morphism(dt: &GabcdData) -> Result<MorphismSpec> {
    let source = build_gabcd(&dt.a, &dt.b, &dt.c, &dt.d, true)?;
    let target = build_gabcd(
        &dt.b.inverse()?,
        &dt.a.inverse()?,
        &dt.d.inverse()?,
        &dt.c.inverse()?,
        true,
    )?;
    let (n, m) = (source.n_rows, source.n_cols);
    let (i_n, i_m) = (ScalarMatrix::identity(n), ScalarMatrix::identity(m));
    let map = matrix_map("inversion", n, m, &i_n, &i_m, true)?;
    Ok(MorphismSpec {
        inverse: Some(AlgebraMap {
            name: "inversion inverse".into(),
            ..map.clone()
        }),
        map,
        source,
        target,
    })
}

/// `f(x) = P y P⁻¹`, `f(d) = d`, from `𝒢(A,B)` to `𝒢(PᵗAP, P⁻¹BP⁻ᵗ)`.
pub fn hopf_congruence_morphism(a: &ScalarMatrix, b: &ScalarMatrix, p: &ScalarMatrix) -> Result<MorphismSpec> {
    let dt = GabcdData {
        a: a.clone(),
        b: b.clone(),
        c: a.clone(),
        d: b.clone(),
    };
    congruence_morphism(&dt, p, p)
}

/// `f(x) = Q y d⁻¹ Q⁻¹`, `f(d) = d⁻¹`, from `𝒢(A,B)` to
/// `𝒢(QᵗB⁻¹Q, Q⁻¹A⁻¹Q⁻ᵗ)`, with inverse `y ↦ Q⁻¹ x d⁻¹ Q`.
pub fn hopf_flip_morphism(a: &ScalarMatrix, b: &ScalarMatrix, q: &ScalarMatrix) -> Result<MorphismSpec> {
    let source = build_gabcd(a, b, a, b, true)?;
    let c = congruence(q, &b.inverse()?)?;
    let d = inverse_congruence(q, &a.inverse()?)?;
    let target = build_gabcd(&c, &d, &c, &d, true)?;
    let n = source.n_rows;
    let qi = q.inverse()?;
    Ok(MorphismSpec {
        map: matrix_map("flip", n, n, q, &qi, true)?,
        inverse: Some(matrix_map("flip inverse", n, n, &qi, q, true)?),
        source,
        target,
    })
}
