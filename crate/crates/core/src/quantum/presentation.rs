//! Presented algebras `𝒢(A,B|C,D)` and tensor products of presentations.

use crate::error::{Error, Result};
use crate::ncpoly::{matrix_relation_expand, Generator, NCMatrix, NCPoly};
use crate::rewrite::{IdealBasis, DEFAULT_MAX_LEN};
use crate::scalar::ScalarMatrix;

/// The matrices `(A, B | C, D)` of a cogroupoid algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabcdData {
    pub a: ScalarMatrix,
    pub b: ScalarMatrix,
    pub c: ScalarMatrix,
    pub d: ScalarMatrix,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub n_rows: usize,
    pub n_cols: usize,
    /// Absent for tensor products.
    pub data: Option<GabcdData>,
    pub generators: Vec<Generator>,
    pub relations: Vec<NCPoly>,
    pub with_d_inv: bool,
}

impl Presentation {
    /// Slot-0 generators: `d`, optionally `d_inv`, and `x(i,j)`.
    fn base_generators(n: usize, m: usize, with_d_inv: bool) -> Vec<Generator> {
        let mut g = Vec::new();
        if with_d_inv {
            g.push(Generator::d_inv());
        }
        g.push(Generator::d());
        for i in 1..=n {
            for j in 1..=m {
                g.push(Generator::x(i, j));
            }
        }
        g
    }

    /// Ideal basis seeded with the relations, not yet completed.
    pub fn ideal_basis(&self) -> Result<IdealBasis> {
        IdealBasis::new(&self.relations, DEFAULT_MAX_LEN)
    }

    /// The generator matrix `x` in slot 0.
    pub fn x(&self) -> NCMatrix {
        NCMatrix::generators(self.n_rows, self.n_cols, 0)
    }
}

fn require_invertible(name: &str, m: &ScalarMatrix) -> Result<()> {
    if !m.is_square() || !m.is_invertible() {
        return Err(Error::PreconditionFailed {
            condition: format!("{name} invertible"),
            detail: format!("{name} = {m}"),
        });
    }
    Ok(())
}

/// `𝒢(A,B|C,D)`: generators `x` (n×m), `d` and optionally `d⁻¹`, with
/// `xᵗAx = Cd` and `xDxᵗ = Bd` expanded entrywise.
pub fn build_gabcd(
    a: &ScalarMatrix,
    b: &ScalarMatrix,
    c: &ScalarMatrix,
    d: &ScalarMatrix,
    with_d_inv: bool,
) -> Result<Presentation> {
    for (name, m) in [("A", a), ("B", b), ("C", c), ("D", d)] {
        if !m.is_square() {
            return Err(Error::ShapeMismatch(format!("{name} is not square")));
        }
        if !m.is_invertible() {
            return Err(Error::SingularMatrix);
        }
    }
    let (n, m) = (a.rows(), c.rows());
    if b.rows() != n || d.rows() != m {
        return Err(Error::ShapeMismatch(format!(
            "A, B must be {n}x{n} and C, D must be {m}x{m}"
        )));
    }
    let x = NCMatrix::generators(n, m, 0);
    let dg = NCPoly::gen(Generator::d());
    let mut relations = matrix_relation_expand(
        &x.transpose().mul_scalar_matrix(a)?.mul(&x)?,
        &NCMatrix::from_scalar(c).times(&dg),
    )?;
    relations.extend(matrix_relation_expand(
        &x.mul_scalar_matrix(d)?.mul(&x.transpose())?,
        &NCMatrix::from_scalar(b).times(&dg),
    )?);
    relations.retain(|r| !r.is_zero());
    if with_d_inv {
        relations.extend(d_inverse_relations(0));
    }
    Ok(Presentation {
        n_rows: n,
        n_cols: m,
        data: Some(GabcdData {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            d: d.clone(),
        }),
        generators: Presentation::base_generators(n, m, with_d_inv),
        relations,
        with_d_inv,
    })
}

/// `𝒢(A,B) = 𝒢(A,B|A,B)`.
pub fn build_gab(a: &ScalarMatrix, b: &ScalarMatrix, with_d_inv: bool) -> Result<Presentation> {
    require_invertible("A", a)?;
    build_gabcd(a, b, a, b, with_d_inv)
}

/// `d·d⁻¹ − 1` and `d⁻¹·d − 1` in the given slot.
pub fn d_inverse_relations(slot: u8) -> [NCPoly; 2] {
    let d = NCPoly::gen(Generator::d().in_slot(slot));
    let di = NCPoly::gen(Generator::d_inv().in_slot(slot));
    [d.mul(&di).sub(&NCPoly::one()), di.mul(&d).sub(&NCPoly::one())]
}

/// Moves every generator of `p` into `slot`.
pub fn reslot(p: &NCPoly, slot: u8) -> NCPoly {
    p.substitute(&|g| NCPoly::gen(g.in_slot(slot)), false)
}

/// Disjoint union of generators (left in slot `L`, right in slot `R`), both
/// relation sets, and `R:b·L:a − L:a·R:b` for every pair.
pub fn tensor_presentation(p: &Presentation, q: &Presentation) -> Presentation {
    const L: u8 = 1;
    const R: u8 = 2;
    let lg: Vec<Generator> = p.generators.iter().map(|g| g.in_slot(L)).collect();
    let rg: Vec<Generator> = q.generators.iter().map(|g| g.in_slot(R)).collect();
    let mut relations: Vec<NCPoly> = p.relations.iter().map(|r| reslot(r, L)).collect();
    relations.extend(q.relations.iter().map(|r| reslot(r, R)));
    for a in &lg {
        for b in &rg {
            relations.push(
                NCPoly::gen(*b)
                    .mul(&NCPoly::gen(*a))
                    .sub(&NCPoly::gen(*a).mul(&NCPoly::gen(*b))),
            );
        }
    }
    let mut generators = lg;
    generators.extend(rg);
    Presentation {
        n_rows: p.n_rows,
        n_cols: q.n_cols,
        data: None,
        generators,
        relations,
        with_d_inv: p.with_d_inv && q.with_d_inv,
    }
}
