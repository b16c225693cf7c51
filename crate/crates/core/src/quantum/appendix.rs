//! Oriented presentation of `ℳ(A_q,A_q|C,D)` and its localization at `d`.
//!
//! Generators `x(i,j)`, `i ∈ {1,2}`, `j ∈ 1..=m`, and `d`. Rule order:
//! exchange rules `x_{2i}x_{1j}` for `(i,j)` lexicographic, then the three
//! quadratic rules (mixed, `x_1x_1`, `x_2x_2`), then the `x_{1j}d` and
//! `x_{2j}d` commutation rules for `j = 1..=m`.

use crate::error::{Error, Result};
use crate::ncpoly::{Generator, NCPoly, Word};
use crate::rewrite::{check_diamond, ReductionSystem, RewriteRule};
use crate::scalar::{Scalar, ScalarMatrix};

fn x(i: usize, j: usize) -> Generator {
    Generator::x(i, j)
}

fn w(gs: &[Generator]) -> Word {
    Word::from_letters(gs.iter().copied())
}

fn term(c: Scalar, gs: &[Generator]) -> NCPoly {
    NCPoly::term(w(gs), c)
}

/// Shape and invertibility of `C`, `D`, and the index `v` with `(m,v)` the
/// lexicographically largest nonzero position of `D`.
fn check_preconditions(q: &Scalar, c: &ScalarMatrix, d: &ScalarMatrix) -> Result<usize> {
    let m = c.rows();
    if !c.is_square() || !d.is_square() || d.rows() != m {
        return Err(Error::ShapeMismatch("C and D must be square of equal size".into()));
    }
    if m < 2 {
        return Err(Error::precondition("m >= 2", format!("m = {m}")));
    }
    if !c.is_invertible() {
        return Err(Error::precondition("C invertible", format!("C = {c}")));
    }
    if !d.is_invertible() {
        return Err(Error::precondition("D invertible", format!("D = {d}")));
    }
    let dmm = d.get(m - 1, m - 1);
    if !dmm.is_zero() {
        return Err(Error::precondition("D_mm = 0", format!("D_{m}{m} = {dmm}")));
    }
    let q2 = q.mul(q);
    let tr = c.mul(&d.transpose())?.trace()?;
    let want = Scalar::one().add(&q2);
    if tr != want {
        return Err(Error::precondition(
            "tr(C D^t) = 1 + q^2",
            format!("tr(C D^t) = {tr}"),
        ));
    }
    let prod = ScalarMatrix::product(&[&d.transpose(), &c.transpose(), d, c])?;
    if prod != ScalarMatrix::identity(m).scalar_mul(&q2) {
        return Err(Error::precondition(
            "D^t C^t D C = q^2 I",
            format!("D^t C^t D C = {prod}"),
        ));
    }
    // Row m is nonzero because D is invertible, and D_mm = 0 forces v < m.
    let v = (0..m)
        .rev()
        .find(|&j| !d.get(m - 1, j).is_zero())
        .expect("invertible D has a nonzero last row");
    Ok(v + 1)
}

/// The full oriented system. Fails with `PreconditionFailed` naming the first
/// violated condition.
pub fn build_appendix_system(q: &Scalar, c: &ScalarMatrix, d: &ScalarMatrix) -> Result<ReductionSystem> {
    let v = check_preconditions(q, c, d)?;
    let m = c.rows();
    let qi = q.inv()?;
    let dg = Generator::d();
    let dmv_inv = d.get(m - 1, v - 1).inv()?;
    let cd = c.mul(d)?;
    let c_inv_d_inv = c.inverse()?.mul(&d.inverse()?)?;
    let below = |k: usize, l: usize| (k, l) < (m, v);

    let mut rules = Vec::new();
    // x_{2i} x_{1j} → q⁻¹(x_{1i} x_{2j} − C_ij d)
    for i in 1..=m {
        for j in 1..=m {
            let rhs = term(qi.clone(), &[x(1, i), x(2, j)])
                .add(&term(qi.mul(c.get(i - 1, j - 1)).neg(), &[dg]));
            rules.push(RewriteRule::new(w(&[x(2, i), x(1, j)]), rhs));
        }
    }
    // The D-weighted quadratic relations solved for their largest word.
    for (a, b, constant) in [(1, 2, true), (1, 1, false), (2, 2, false)] {
        let mut rhs = if constant {
            term(dmv_inv.clone(), &[dg])
        } else {
            NCPoly::zero()
        };
        for k in 1..=m {
            for l in 1..=m {
                let dkl = d.get(k - 1, l - 1);
                if below(k, l) && !dkl.is_zero() {
                    rhs.add_term(w(&[x(a, k), x(b, l)]), dmv_inv.mul(dkl).neg());
                }
            }
        }
        rules.push(RewriteRule::new(w(&[x(a, m), x(b, v)]), rhs));
    }
    // x_{1j} d → −q Σ_k (C⁻¹D⁻¹)_kj d x_{1k}
    for j in 1..=m {
        let mut rhs = NCPoly::zero();
        for k in 1..=m {
            rhs.add_term(w(&[dg, x(1, k)]), q.mul(c_inv_d_inv.get(k - 1, j - 1)).neg());
        }
        rules.push(RewriteRule::new(w(&[x(1, j), dg]), rhs));
    }
    // x_{2j} d → −q⁻¹ Σ_k (CD)_jk d x_{2k}
    for j in 1..=m {
        let mut rhs = NCPoly::zero();
        for k in 1..=m {
            rhs.add_term(w(&[dg, x(2, k)]), qi.mul(cd.get(j - 1, k - 1)).neg());
        }
        rules.push(RewriteRule::new(w(&[x(2, j), dg]), rhs));
    }
    let mut alphabet = vec![dg];
    for i in 1..=2 {
        for j in 1..=m {
            alphabet.push(x(i, j));
        }
    }
    ReductionSystem::new(rules, &alphabet)
}

/// Adds `d_inv` and its rules, then re-certifies confluence.
pub fn extend_with_localization(
    sys: &ReductionSystem,
    q: &Scalar,
    c: &ScalarMatrix,
    d: &ScalarMatrix,
) -> Result<ReductionSystem> {
    let m = c.rows();
    let qi = q.inv()?;
    let (dg, di) = (Generator::d(), Generator::d_inv());
    let dc = d.mul(c)?;
    let dinv_cinv = d.inverse()?.mul(&c.inverse()?)?;
    let mut out = sys.clone();
    out.push(RewriteRule::new(w(&[dg, di]), NCPoly::one()))?;
    out.push(RewriteRule::new(w(&[di, dg]), NCPoly::one()))?;
    // x_{1j} d⁻¹ → −q⁻¹ Σ_k (DC)_kj d⁻¹ x_{1k}
    for j in 1..=m {
        let mut rhs = NCPoly::zero();
        for k in 1..=m {
            rhs.add_term(w(&[di, x(1, k)]), qi.mul(dc.get(k - 1, j - 1)).neg());
        }
        out.push(RewriteRule::new(w(&[x(1, j), di]), rhs))?;
    }
    // x_{2j} d⁻¹ → −q Σ_k (D⁻¹C⁻¹)_jk d⁻¹ x_{2k}
    for j in 1..=m {
        let mut rhs = NCPoly::zero();
        for k in 1..=m {
            rhs.add_term(w(&[di, x(2, k)]), q.mul(dinv_cinv.get(j - 1, k - 1)).neg());
        }
        out.push(RewriteRule::new(w(&[x(2, j), di]), rhs))?;
    }
    let report = check_diamond(&out);
    if !report.confluent {
        return Err(Error::NotConfluent(report.total - report.resolved));
    }
    Ok(out)
}

/// The unoriented relations behind the oriented system.
#[derive(Debug, Clone)]
pub struct PrimedRelations {
    /// `x_{2i}x_{1j} − q⁻¹(x_{1i}x_{2j} − C_ij d)` for `(i,j)` lexicographic.
    pub one: Vec<NCPoly>,
    /// `Σ D_kl x_{1k} x_{2l} − d`.
    pub two: NCPoly,
    /// `Σ D_kl x_{1k} x_{1l}`.
    pub three: NCPoly,
    /// `Σ D_kl x_{2k} x_{2l}`.
    pub four: NCPoly,
    /// `Σ D_kl x_{2k} x_{1l} + q d`.
    pub five: NCPoly,
}

pub fn primed_relations(q: &Scalar, c: &ScalarMatrix, d: &ScalarMatrix) -> Result<PrimedRelations> {
    let m = c.rows();
    let qi = q.inv()?;
    let dg = Generator::d();
    let mut one = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            one.push(
                term(Scalar::one(), &[x(2, i), x(1, j)])
                    .sub(&term(qi.clone(), &[x(1, i), x(2, j)]))
                    .add(&term(qi.mul(c.get(i - 1, j - 1)), &[dg])),
            );
        }
    }
    let quad = |a: usize, b: usize| {
        let mut p = NCPoly::zero();
        for k in 1..=m {
            for l in 1..=m {
                p.add_term(w(&[x(a, k), x(b, l)]), d.get(k - 1, l - 1).clone());
            }
        }
        p
    };
    Ok(PrimedRelations {
        one,
        two: quad(1, 2).sub(&NCPoly::gen(dg)),
        three: quad(1, 1),
        four: quad(2, 2),
        five: quad(2, 1).add(&term(q.clone(), &[dg])),
    })
}
