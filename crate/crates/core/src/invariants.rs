//! Matrix-level invariants `λ`, `μ`, `κ` of pairs `(A,B)` and witness checks.

use crate::error::{Error, Result};
use crate::scalar::{GaussRat, Scalar, ScalarMatrix};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Genericity {
    Generic,
    /// Possible orders of `q` as a root of unity.
    RootOfUnity(Vec<u32>),
    UndecidedParametric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    /// `λ` with `BᵗAᵗBA = λI`, when that product is scalar.
    pub lambda: Option<Scalar>,
    /// `tr(ABᵗ)`.
    pub mu: Scalar,
    /// `μ²/λ`.
    pub kappa: Option<Scalar>,
    pub condition_ok: bool,
    pub genericity: Option<Genericity>,
}

/// `λ` from `BᵗAᵗBA`, `μ = tr(ABᵗ)` and `κ = μ²/λ`.
pub fn invariant_report(a: &ScalarMatrix, b: &ScalarMatrix) -> Result<InvariantReport> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::ShapeMismatch("A and B must be square of equal size".into()));
    }
    if !a.is_invertible() || !b.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let prod = ScalarMatrix::product(&[&b.transpose(), &a.transpose(), b, a])?;
    let lambda = prod.scalar_multiple_of_identity();
    let mu = a.mul(&b.transpose())?.trace()?;
    let kappa = match &lambda {
        Some(l) => Some(mu.mul(&mu).checked_div(l)?),
        None => None,
    };
    Ok(InvariantReport {
        condition_ok: lambda.is_some(),
        genericity: kappa.as_ref().map(genericity_of_kappa),
        lambda,
        mu,
        kappa,
    })
}

/// Classifies `q` from `κ = (q + q⁻¹)²`.
///
/// For rational `κ`, `q` is a root of unity other than `±1` exactly when
/// `κ ∈ {0, 1, 2, 3}`.
pub fn genericity_of_kappa(kappa: &Scalar) -> Genericity {
    if kappa.is_parametric() {
        return Genericity::UndecidedParametric;
    }
    let Some(k) = kappa.rational_value() else {
        // A root of unity gives real q + q⁻¹.
        return Genericity::Generic;
    };
    if !k.is_integer() {
        return Genericity::Generic;
    }
    match k.to_integer().try_into() {
        Ok(0i64) => Genericity::RootOfUnity(vec![4]),
        Ok(1) => Genericity::RootOfUnity(vec![3, 6]),
        Ok(2) => Genericity::RootOfUnity(vec![8]),
        Ok(3) => Genericity::RootOfUnity(vec![12]),
        _ => Genericity::Generic,
    }
}

/// Monoidal equivalence test: equal `κ`. Both pairs must satisfy the
/// scalar condition.
pub fn monoidal_equivalent(
    a: &ScalarMatrix,
    b: &ScalarMatrix,
    c: &ScalarMatrix,
    d: &ScalarMatrix,
) -> Result<(bool, InvariantReport, InvariantReport)> {
    let r1 = invariant_report(a, b)?;
    let r2 = invariant_report(c, d)?;
    match (&r1.kappa, &r2.kappa) {
        (Some(k1), Some(k2)) => Ok((k1 == k2, r1, r2)),
        (None, _) => Err(Error::ConditionFailed("B^t A^t B A is not scalar".into())),
        (_, None) => Err(Error::ConditionFailed("D^t C^t D C is not scalar".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// `(C,D) = (α·PᵗAP, β·P⁻¹BP⁻ᵗ)`.
    Direct,
    /// `(C,D) = (α·PᵗB⁻¹P, β·P⁻¹A⁻¹P⁻ᵗ)`.
    Inverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessVerdict {
    pub pass: bool,
    pub alpha: Option<Scalar>,
    pub beta: Option<Scalar>,
    /// `(component, row, col)` of failing entries, one-based.
    pub mismatches: Vec<(char, usize, usize)>,
}

/// `α` with `target = α·model`, read from the first nonzero entry of
/// `model` and then checked on the whole matrix.
fn proportionality(target: &ScalarMatrix, model: &ScalarMatrix) -> (Option<Scalar>, Vec<(usize, usize)>) {
    let alpha = model
        .entries()
        .find(|(_, _, v)| !v.is_zero())
        .and_then(|(i, j, v)| target.get(i, j).checked_div(v).ok())
        .filter(|a| !a.is_zero());
    match &alpha {
        Some(a) => {
            let bad = target.differing_entries(&model.scalar_mul(a));
            (alpha.filter(|_| bad.is_empty()), bad)
        }
        None => (None, vec![(0, 0)]),
    }
}

pub fn verify_iso_witness(
    a: &ScalarMatrix,
    b: &ScalarMatrix,
    c: &ScalarMatrix,
    d: &ScalarMatrix,
    p: &ScalarMatrix,
    orientation: Orientation,
) -> Result<WitnessVerdict> {
    let n = a.rows();
    for m in [a, b, c, d, p] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::ShapeMismatch("all matrices must be n x n".into()));
        }
    }
    let pi = p.inverse()?;
    let (l, r) = match orientation {
        Orientation::Direct => (a.clone(), b.clone()),
        Orientation::Inverse => (b.inverse()?, a.inverse()?),
    };
    let cm = ScalarMatrix::product(&[&p.transpose(), &l, p])?;
    let dm = ScalarMatrix::product(&[&pi, &r, &pi.transpose()])?;
    let (alpha, bad_c) = proportionality(c, &cm);
    let (beta, bad_d) = proportionality(d, &dm);
    let mismatches: Vec<_> = bad_c
        .into_iter()
        .map(|(i, j)| ('C', i + 1, j + 1))
        .chain(bad_d.into_iter().map(|(i, j)| ('D', i + 1, j + 1)))
        .collect();
    Ok(WitnessVerdict {
        pass: mismatches.is_empty(),
        alpha,
        beta,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisPairVerdict {
    pub pass: bool,
    pub lambda_ab: Option<Scalar>,
    pub lambda_cd: Option<Scalar>,
    pub trace_ab: Scalar,
    pub trace_cd: Scalar,
    pub failures: Vec<String>,
}

/// `DᵗCᵗDC = λI` with the `λ` of `(A,B)`, and `tr(ABᵗ) = tr(CDᵗ)`.
pub fn verify_galois_pair(
    a: &ScalarMatrix,
    b: &ScalarMatrix,
    c: &ScalarMatrix,
    d: &ScalarMatrix,
) -> Result<GaloisPairVerdict> {
    let lambda_ab = ScalarMatrix::product(&[&b.transpose(), &a.transpose(), b, a])?
        .scalar_multiple_of_identity();
    let lambda_cd = ScalarMatrix::product(&[&d.transpose(), &c.transpose(), d, c])?
        .scalar_multiple_of_identity();
    let trace_ab = a.mul(&b.transpose())?.trace()?;
    let trace_cd = c.mul(&d.transpose())?.trace()?;
    let mut failures = Vec::new();
    match (&lambda_ab, &lambda_cd) {
        (None, _) => failures.push("B^t A^t B A is not scalar".to_string()),
        (Some(_), None) => failures.push("D^t C^t D C is not scalar".to_string()),
        (Some(l1), Some(l2)) if l1 != l2 => {
            failures.push(format!("lambda differs: {l1} vs {l2}"))
        }
        _ => {}
    }
    if trace_ab != trace_cd {
        failures.push(format!("traces differ: {trace_ab} vs {trace_cd}"));
    }
    Ok(GaloisPairVerdict {
        pass: failures.is_empty(),
        lambda_ab,
        lambda_cd,
        trace_ab,
        trace_cd,
        failures,
    })
}

/// `(C₂, D₂) = (M⁻ᵗC₁M⁻¹, M D₁ Mᵗ)`, exactly.
pub fn verify_galois_iso_witness(
    c1: &ScalarMatrix,
    d1: &ScalarMatrix,
    c2: &ScalarMatrix,
    d2: &ScalarMatrix,
    m: &ScalarMatrix,
) -> Result<WitnessVerdict> {
    let n = m.rows();
    for x in [c1, d1, c2, d2, m] {
        if x.rows() != n || x.cols() != n {
            return Err(Error::ShapeMismatch("all matrices must be n x n".into()));
        }
    }
    let mi = m.inverse()?;
    let ce = ScalarMatrix::product(&[&mi.transpose(), c1, &mi])?;
    let de = ScalarMatrix::product(&[m, d1, &m.transpose()])?;
    let mismatches: Vec<_> = c2
        .differing_entries(&ce)
        .into_iter()
        .map(|(i, j)| ('C', i + 1, j + 1))
        .chain(
            d2.differing_entries(&de)
                .into_iter()
                .map(|(i, j)| ('D', i + 1, j + 1)),
        )
        .collect();
    Ok(WitnessVerdict {
        pass: mismatches.is_empty(),
        alpha: None,
        beta: None,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isotropic {
    /// `P` invertible with `(PᵗMP)_nn = 0`.
    Found(ScalarMatrix),
    NotFoundOverBaseField,
}

fn constant(s: &Scalar) -> Result<GaussRat> {
    s.constant_value()
        .ok_or_else(|| Error::Invalid(format!("parametric entry {s}")))
}

/// Searches `e_i`, then `e_i + t·e_j` with `t` a root of
/// `M_ii + t(M_ij + M_ji) + t²M_jj` in the base field of `M`.
pub fn isotropic_normalize(m: &ScalarMatrix) -> Result<Isotropic> {
    let n = m.rows();
    if !m.is_square() || n < 2 {
        return Err(Error::ShapeMismatch("need a square matrix of size >= 2".into()));
    }
    if !m.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let gaussian = !m.is_real();
    let e = |i: usize, j: usize| constant(m.get(i, j));
    let with_last = |i: usize, v: Vec<GaussRat>| {
        let mut p = ScalarMatrix::zeros(n, n);
        let mut col = 0;
        for k in (0..n).filter(|&k| k != i) {
            p.set(k, col, Scalar::one());
            col += 1;
        }
        for (k, vk) in v.into_iter().enumerate() {
            p.set(k, n - 1, Scalar::from_gauss(vk));
        }
        p
    };
    let unit = |i: usize, t: Option<(usize, GaussRat)>| {
        let mut v = vec![GaussRat::zero(); n];
        v[i] = GaussRat::one();
        if let Some((j, t)) = t {
            v[j] = t;
        }
        v
    };
    for i in 0..n {
        if e(i, i)?.is_zero() {
            return Ok(Isotropic::Found(with_last(i, unit(i, None))));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b, c) = (e(j, j)?, &e(i, j)? + &e(j, i)?, e(i, i)?);
            // a t² + b t + c = 0 with a, c ≠ 0 here.
            let disc = &(&b * &b) - &(&GaussRat::from_int(4) * &(&a * &c));
            let Some(s) = disc.sqrt(!gaussian) else {
                continue;
            };
            let two_a = &GaussRat::from_int(2) * &a;
            let t = &(&-&b - &s) * &two_a.inv().expect("a nonzero");
            return Ok(Isotropic::Found(with_last(i, unit(i, Some((j, t))))));
        }
    }
    Ok(Isotropic::NotFoundOverBaseField)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Positivity {
    Positive,
    /// `λ = c·s²` with `c > 0` rational and `s` a real rational function:
    /// positive whenever the parameters are real and `s ≠ 0`.
    ConditionallyPositive,
    NotPositive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CqgVerdict {
    pub lambda: Option<Scalar>,
    pub positivity: Option<Positivity>,
    pub pass: bool,
}

pub fn positivity(l: &Scalar) -> Positivity {
    if !l.is_parametric() {
        return if l.is_positive_rational() {
            Positivity::Positive
        } else {
            Positivity::NotPositive
        };
    }
    let lc = l.numer().lc();
    let c = Scalar::from_gauss(lc.clone());
    if !c.is_positive_rational() {
        return Positivity::NotPositive;
    }
    match l.checked_div(&c).ok().and_then(|r| r.real_sqrt()) {
        Some(_) => Positivity::ConditionallyPositive,
        None => Positivity::NotPositive,
    }
}

/// `ĒᵗEᵗĒE = λI` with `λ` positive.
pub fn cqg_condition(e: &ScalarMatrix) -> Result<CqgVerdict> {
    if !e.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let eb = e.conj();
    let prod = ScalarMatrix::product(&[&eb.transpose(), &e.transpose(), &eb, e])?;
    let lambda = prod.scalar_multiple_of_identity();
    let pos = lambda.as_ref().map(positivity);
    Ok(CqgVerdict {
        pass: matches!(
            pos,
            Some(Positivity::Positive | Positivity::ConditionallyPositive)
        ),
        lambda,
        positivity: pos,
    })
}
