//! Normal-form arithmetic in the twisted algebra `T⟨X⟩^{⊗n} ⋉ Q[S_n]`.
//!
//! A term is `c · (M_1 ⊗ … ⊗ M_n) ∘ σ` with the permutation always on the right.
//! Moving a permutation across a tensor word uses
//! `σ ∘ (M_1 ⊗ … ⊗ M_n) = (M_{σ⁻¹(1)} ⊗ … ⊗ M_{σ⁻¹(n)}) ∘ σ`,
//! which matches the place-permutation operator under evaluation.

mod polar;
mod subst;
mod trace;

pub use polar::{polarize, restitute};
pub use subst::{substitute, Substitution, TracePoly};

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Result, TciError};
use crate::rational::{self, Rational};
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::tracering::{TraceScalar, Word};

/// `M_1 ⊗ … ⊗ M_n`; empty words are the factor `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord(pub Vec<Word>);

impl TensorWord {
    pub fn unit(n: usize) -> Self {
        TensorWord(vec![Word::one(); n])
    }

    /// `1 ⊗ … ⊗ w ⊗ … ⊗ 1` with `w` in the zero-based `slot`.
    pub fn at(n: usize, slot: usize, w: Word) -> Self {
        let mut t = Self::unit(n);
        t.0[slot] = w;
        t
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[Word] {
        &self.0
    }

    /// Factorwise product.
    pub fn mul(&self, other: &TensorWord) -> TensorWord {
        TensorWord(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.concat(b))
                .collect(),
        )
    }

    /// The word `W'` with `σ ∘ W = W' ∘ σ`, i.e. `W'_j = W_{σ⁻¹(j)}`.
    pub fn permuted(&self, sigma: &Permutation) -> TensorWord {
        let mut out = vec![Word::one(); self.arity()];
        for (i, w) in self.0.iter().enumerate() {
            out[sigma.apply(i)] = w.clone();
        }
        TensorWord(out)
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join("⊗"))
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of the twisted algebra of a fixed arity, in normal form.
///
/// Equal keys are merged and zero coefficients dropped, so structural
/// equality is mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistedElement {
    arity: usize,
    terms: BTreeMap<(TensorWord, Permutation), TraceScalar>,
}

impl TwistedElement {
    // ---- Constructors ----

    pub fn zero(n: usize) -> Self {
        TwistedElement {
            arity: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        Self::scalar(n, TraceScalar::one())
    }

    pub fn scalar(n: usize, s: TraceScalar) -> Self {
        Self::term(s, TensorWord::unit(n), Permutation::identity(n))
    }

    pub fn from_perm(p: Permutation) -> Self {
        let n = p.degree();
        Self::term(TraceScalar::one(), TensorWord::unit(n), p)
    }

    pub fn from_tensor(t: TensorWord) -> Self {
        let n = t.arity();
        Self::term(TraceScalar::one(), t, Permutation::identity(n))
    }

    pub fn from_group_algebra(g: &GroupAlgebraElement) -> Self {
        let mut e = Self::zero(g.degree());
        for (p, c) in g.iter() {
            e.add_term(TraceScalar::constant(c.clone()), TensorWord::unit(g.degree()), p.clone());
        }
        e
    }

    pub fn term(coeff: TraceScalar, t: TensorWord, p: Permutation) -> Self {
        let mut e = Self::zero(t.arity());
        e.add_term(coeff, t, p);
        e
    }

    /// `c · σ ∘ W`, normalized to `c · W' ∘ σ`.
    pub fn term_left(coeff: TraceScalar, sigma: &Permutation, t: &TensorWord) -> Self {
        Self::term(coeff, t.permuted(sigma), sigma.clone())
    }

    // ---- Accessors ----

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn iter(&self) -> impl Iterator<Item = (&TensorWord, &Permutation, &TraceScalar)> {
        self.terms.iter().map(|((t, p), c)| (t, p, c))
    }

    pub fn coefficient(&self, t: &TensorWord, p: &Permutation) -> TraceScalar {
        self.terms
            .get(&(t.clone(), p.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// For arity 0, the element viewed as a scalar.
    pub fn as_scalar(&self) -> Option<TraceScalar> {
        (self.arity == 0).then(|| self.coefficient(&TensorWord::unit(0), &Permutation::identity(0)))
    }

    /// Every variable index occurring in tensor words or trace factors.
    pub fn variables(&self) -> BTreeSet<u32> {
        let mut vars = BTreeSet::new();
        for ((t, _), c) in &self.terms {
            for w in t.factors() {
                vars.extend(w.letters().iter().copied());
            }
            for (m, _) in c.iter() {
                vars.extend(m.letters());
            }
        }
        vars
    }

    pub fn has_lambda(&self) -> bool {
        self.terms.values().any(|c| c.has_lambda())
    }

    // ---- Linear structure ----

    pub fn add_term(&mut self, coeff: TraceScalar, t: TensorWord, p: Permutation) {
        assert_eq!(t.arity(), self.arity, "tensor word arity mismatch");
        assert_eq!(p.degree(), self.arity, "permutation degree mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((t, p)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&coeff);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TwistedElement) -> Result<()> {
        self.check(other)?;
        for ((t, p), c) in &other.terms {
            self.add_term(c.clone(), t.clone(), p.clone());
        }
        Ok(())
    }

    pub fn add(&self, other: &TwistedElement) -> Result<TwistedElement> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &TwistedElement) -> Result<TwistedElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TwistedElement {
        self.scale(&-rational::one())
    }

    pub fn scale(&self, c: &Rational) -> TwistedElement {
        self.map_coefficients(|s| s.scale(c))
    }

    pub fn scale_scalar(&self, s: &TraceScalar) -> TwistedElement {
        self.map_coefficients(|c| c.mul(s))
    }

    pub fn specialize_lambda(&self, d: i64) -> TwistedElement {
        self.map_coefficients(|c| c.specialize_lambda(d))
    }

    fn map_coefficients(&self, f: impl Fn(&TraceScalar) -> TraceScalar) -> TwistedElement {
        let mut out = Self::zero(self.arity);
        for ((t, p), c) in &self.terms {
            out.add_term(f(c), t.clone(), p.clone());
        }
        out
    }

    // ---- Multiplicative structure ----

    /// The product `self · other`.
    pub fn mul(&self, other: &TwistedElement) -> Result<TwistedElement> {
        self.check(other)?;
        let mut out = Self::zero(self.arity);
        for ((t1, p1), c1) in &self.terms {
            for ((t2, p2), c2) in &other.terms {
                let t = t1.mul(&t2.permuted(p1));
                out.add_term(c1.mul(c2), t, p1 * p2);
            }
        }
        Ok(out)
    }

    pub fn left_mul_perm(&self, g: &Permutation) -> Result<TwistedElement> {
        TwistedElement::from_perm(g.clone()).mul(self)
    }

    pub fn right_mul_perm(&self, g: &Permutation) -> Result<TwistedElement> {
        self.mul(&TwistedElement::from_perm(g.clone()))
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<TwistedElement> {
        self.left_mul_perm(g)?.right_mul_perm(&g.inverse())
    }

    /// `self ⊗ other`: tensor words concatenated, permutations placed block-diagonally.
    pub fn outer_product(&self, other: &TwistedElement) -> TwistedElement {
        let mut out = Self::zero(self.arity + other.arity);
        for ((t1, p1), c1) in &self.terms {
            for ((t2, p2), c2) in &other.terms {
                let mut words = t1.0.clone();
                words.extend(t2.0.iter().cloned());
                out.add_term(c1.mul(c2), TensorWord(words), p1.direct_sum(p2));
            }
        }
        out
    }

    fn check(&self, other: &TwistedElement) -> Result<()> {
        if self.arity != other.arity {
            return Err(TciError::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }
}

impl fmt::Display for TwistedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((t, p), c)| format!("({c})·{t}∘{p}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TwistedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
