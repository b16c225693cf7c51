//! Matrices with noncommutative polynomial entries.

use super::poly::NCPoly;
use super::word::{GenKind, Generator};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCMatrix {
    rows: usize,
    cols: usize,
    data: Vec<NCPoly>,
}

impl NCMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        NCMatrix {
            rows,
            cols,
            data: vec![NCPoly::zero(); rows * cols],
        }
    }

    /// The matrix `(x_ij)` of generators in the given slot.
    pub fn generators(rows: usize, cols: usize, slot: u8) -> Self {
        let mut m = NCMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(
                    r,
                    c,
                    NCPoly::gen(Generator::new(slot, GenKind::X(r as u8 + 1, c as u8 + 1))),
                );
            }
        }
        m
    }

    pub fn from_scalar(m: &ScalarMatrix) -> Self {
        NCMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .entries()
                .map(|(_, _, s)| NCPoly::constant(s.clone()))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based entry access.
    pub fn get(&self, r: usize, c: usize) -> &NCPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: NCPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &NCPoly)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> NCMatrix {
        let mut t = NCMatrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.set(c, r, v.clone());
        }
        t
    }

    pub fn add(&self, o: &NCMatrix) -> Result<NCMatrix> {
        self.check_same(o)?;
        Ok(NCMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, o: &NCMatrix) -> Result<NCMatrix> {
        self.check_same(o)?;
        Ok(NCMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    fn check_same(&self, o: &NCMatrix) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, o: &NCMatrix) -> Result<NCMatrix> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = NCMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = NCPoly::zero();
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

    pub fn mul_scalar_matrix(&self, m: &ScalarMatrix) -> Result<NCMatrix> {
        self.mul(&NCMatrix::from_scalar(m))
    }

    pub fn scalar_matrix_mul(m: &ScalarMatrix, x: &NCMatrix) -> Result<NCMatrix> {
        NCMatrix::from_scalar(m).mul(x)
    }

    /// Multiplies every entry by `p` on the right.
    pub fn times(&self, p: &NCPoly) -> NCMatrix {
        NCMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(p)).collect(),
        }
    }

    /// Multiplies every entry by `p` on the left.
    pub fn left_times(&self, p: &NCPoly) -> NCMatrix {
        NCMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| p.mul(a)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> NCMatrix {
        NCMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn into_entries(self) -> Vec<NCPoly> {
        self.data
    }
}

/// Entrywise differences `lhs_ij − rhs_ij` in row-major order, zeros
/// included so positions stay meaningful.
pub fn matrix_relation_expand(lhs: &NCMatrix, rhs: &NCMatrix) -> Result<Vec<NCPoly>> {
    Ok(lhs.sub(rhs)?.into_entries())
}
