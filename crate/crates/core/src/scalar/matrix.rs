//! Dense matrices over [`Scalar`].

use super::Scalar;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ScalarMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if r == 0 || c == 0 {
            return Err(Error::ShapeMismatch("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(ScalarMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses a grid of scalar strings.
    pub fn parse(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<Scalar>>>())
            .collect::<Result<Vec<_>>>()?;
        ScalarMatrix::from_rows(parsed)
    }

    /// Parses a grid given as string literals, panicking on bad input.
    pub fn from_strs<const C: usize>(rows: &[[&str; C]]) -> Self {
        ScalarMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().expect("valid scalar")).collect())
                .collect(),
        )
        .expect("well-formed matrix")
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = ScalarMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based entry access.
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|s| s.to_string()).collect())
            .collect()
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> ScalarMatrix {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<ScalarMatrix> {
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = ScalarMatrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.set(c, r, v.clone());
        }
        t
    }

    pub fn conj(&self) -> ScalarMatrix {
        self.map(Scalar::conj)
    }

    pub fn scalar_mul(&self, s: &Scalar) -> ScalarMatrix {
        self.map(|v| v.mul(s))
    }

    pub fn neg(&self) -> ScalarMatrix {
        self.map(Scalar::neg)
    }

    fn same_shape(&self, o: &ScalarMatrix, what: &str) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::ShapeMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.same_shape(o, "add")?;
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, o: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.same_shape(o, "sub")?;
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn mul(&self, o: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = ScalarMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = o.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Product of a chain of matrices, left to right.
    pub fn product(chain: &[&ScalarMatrix]) -> Result<ScalarMatrix> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| Error::ShapeMismatch("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("trace of non-square matrix".into()));
        }
        Ok((0..self.rows).fold(Scalar::zero(), |acc, i| acc.add(self.get(i, i))))
    }

    /// Row reduction returning the determinant and, when invertible, the
    /// inverse.
    fn eliminate(&self, want_inverse: bool) -> Result<(Scalar, Option<ScalarMatrix>)> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("square matrix required".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = ScalarMatrix::identity(n).to_rows();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok((Scalar::zero(), None));
            };
            if p != col {
                a.swap(p, col);
                inv.swap(p, col);
                det = det.neg();
            }
            let pivot = a[col][col].clone();
            det = det.mul(&pivot);
            let pinv = pivot.inv()?;
            for j in 0..n {
                a[col][j] = a[col][j].mul(&pinv);
                if want_inverse {
                    inv[col][j] = inv[col][j].mul(&pinv);
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                    }
                    if want_inverse && !inv[col][j].is_zero() {
                        inv[r][j] = inv[r][j].sub(&f.mul(&inv[col][j]));
                    }
                }
            }
        }
        let inverse = if want_inverse {
            Some(ScalarMatrix::from_rows(inv)?)
        } else {
            None
        };
        Ok((det, inverse))
    }

    pub fn det(&self) -> Result<Scalar> {
        Ok(self.eliminate(false)?.0)
    }

    pub fn inverse(&self) -> Result<ScalarMatrix> {
        match self.eliminate(true)? {
            (_, Some(inv)) => Ok(inv),
            _ => Err(Error::SingularMatrix),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.det().map(|d| !d.is_zero()).unwrap_or(false)
    }

    /// `Some(λ)` when `self = λ·I`.
    pub fn scalar_multiple_of_identity(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        let lambda = self.get(0, 0).clone();
        for (r, c, v) in self.entries() {
            let expected = if r == c { &lambda } else { &Scalar::zero() };
            if v != expected {
                return None;
            }
        }
        Some(lambda)
    }

    /// Positions (zero-based) where the two matrices differ.
    pub fn differing_entries(&self, o: &ScalarMatrix) -> Vec<(usize, usize)> {
        if self.rows != o.rows || self.cols != o.cols {
            return vec![];
        }
        self.entries()
            .filter(|&(r, c, v)| v != o.get(r, c))
            .map(|(r, c, _)| (r, c))
            .collect()
    }

    /// Whether every entry is free of `i`.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn is_parametric(&self) -> bool {
        self.data.iter().any(Scalar::is_parametric)
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `A_q = [[0, 1], [-q, 0]]`.
pub fn a_q(q: &Scalar) -> ScalarMatrix {
    ScalarMatrix::from_rows(vec![
        vec![Scalar::zero(), Scalar::one()],
        vec![q.neg(), Scalar::zero()],
    ])
    .expect("2x2")
}
