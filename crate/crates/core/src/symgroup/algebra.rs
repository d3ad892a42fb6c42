use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Permutation;
use crate::error::{Result, TciError};
use crate::rational::{self, Rational};

/// A finite rational combination of permutations of a fixed degree.
///
/// Canonical invariant: no stored coefficient is zero, so the empty map is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    // ---- Constructors ----

    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree))
    }

    pub fn from_perm(p: Permutation) -> Self {
        Self::from_term(p, rational::one())
    }

    pub fn from_term(p: Permutation, c: Rational) -> Self {
        let mut e = Self::zero(p.degree());
        e.add_term(p, c);
        e
    }

    /// `Σ_{σ ∈ S_I} ε_σ σ` inside `S_m`; `I` is zero-based.
    pub fn antisymmetrizer(m: usize, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= m) {
            return Err(TciError::IndexOutOfRange {
                index: bad + 1,
                max: m,
            });
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != indices.len() {
            return Err(TciError::Range("antisymmetrizer index set repeats an index".into()));
        }
        let mut e = Self::zero(m);
        for p in Permutation::all_on(m, &sorted) {
            let s = rational::int(p.sign() as i64);
            e.add_term(p, s);
        }
        Ok(e)
    }

    // ---- Accessors ----

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    // ---- Arithmetic ----

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        assert_eq!(p.degree(), self.degree, "degree mismatch in add_term");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.degree);
        if c.is_zero() {
            return out;
        }
        for (p, v) in &self.terms {
            out.terms.insert(p.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p * q, a * b);
            }
        }
        Ok(out)
    }

    /// `g x g⁻¹` applied termwise.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, c) in &self.terms {
            out.add_term(p.conjugate_by(g), c.clone());
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(TciError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (t, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (t, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{}*", rational::render(&abs))?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
