use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::poly::MultiPoly;
use crate::error::{Result, TciError};
use crate::rational::Rational;

/// A square matrix of polynomials stored sparsely by `(row, col)`.
///
/// Absent entries are zero and no stored entry is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), MultiPoly>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        PolyMatrix {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, MultiPoly::one());
        }
        m
    }

    pub fn from_rationals(rows: &[Vec<Rational>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(TciError::DimensionMismatch(format!(
                    "row {} has {} entries, expected {dim}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, MultiPoly::constant(v.clone()));
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> MultiPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        if p.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&(usize, usize), &MultiPoly)> {
        self.entries.iter()
    }

    /// Constant entries as a dense grid, if every entry is constant.
    pub fn to_rationals(&self) -> Option<Vec<Vec<Rational>>> {
        let mut out = vec![vec![crate::rational::zero(); self.dim]; self.dim];
        for (&(i, j), p) in &self.entries {
            out[i][j] = p.as_constant()?;
        }
        Some(out)
    }

    pub fn add_to(&mut self, i: usize, j: usize, p: &MultiPoly) {
        match self.entries.entry((i, j)) {
            Entry::Vacant(v) => {
                if !p.is_zero() {
                    v.insert(p.clone());
                }
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(p);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check(other)?;
        let mut out = self.clone();
        for (&(i, j), p) in &other.entries {
            out.add_to(i, j, p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.add(&other.scale_poly(&MultiPoly::constant(-crate::rational::one())))
    }

    pub fn scale_poly(&self, s: &MultiPoly) -> PolyMatrix {
        let mut out = Self::zero(self.dim);
        for (&(i, j), p) in &self.entries {
            out.set(i, j, p.mul(s));
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check(other)?;
        let mut rows_of_b: Vec<Vec<(usize, &MultiPoly)>> = vec![Vec::new(); self.dim];
        for (&(k, j), p) in &other.entries {
            rows_of_b[k].push((j, p));
        }
        let mut acc: BTreeMap<(usize, usize), MultiPoly> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rows_of_b[k] {
                acc.entry((i, j)).or_default().add_product(a, b);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        Ok(PolyMatrix {
            dim: self.dim,
            entries: acc,
        })
    }

    /// Kronecker product with the first factor as the most significant index.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = Self::zero(self.dim * other.dim);
        for (&(i1, j1), a) in &self.entries {
            for (&(i2, j2), b) in &other.entries {
                out.set(i1 * other.dim + i2, j1 * other.dim + j2, a.mul(b));
            }
        }
        out
    }

    pub fn trace(&self) -> MultiPoly {
        let mut t = MultiPoly::zero();
        for (&(i, j), p) in &self.entries {
            if i == j {
                t.add_assign(p);
            }
        }
        t
    }

    fn check(&self, other: &PolyMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(TciError::DimensionMismatch(format!(
                "{} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }
}
