use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::{TensorWord, TwistedElement};
use crate::tracering::{TraceScalar, Word};

/// An element of the free algebra with trace: a `TraceScalar`-combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TracePoly {
    terms: BTreeMap<Word, TraceScalar>,
}

impl TracePoly {
    pub fn zero() -> Self {
        TracePoly::default()
    }

    pub fn word(w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, TraceScalar::one());
        p
    }

    pub fn var(i: u32) -> Self {
        Self::word(Word::var(i))
    }

    pub fn add_term(&mut self, w: Word, c: TraceScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TracePoly) -> TracePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale_scalar(&self, s: &TraceScalar) -> TracePoly {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    pub fn mul(&self, other: &TracePoly) -> TracePoly {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    pub fn trace(&self) -> TraceScalar {
        let mut out = TraceScalar::zero();
        for (w, c) in &self.terms {
            out.add_assign(&c.mul(&TraceScalar::trace_of(w)));
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &TraceScalar)> {
        self.terms.iter()
    }
}

/// An endomorphism of the free algebra with trace, given on variables.
/// Unmapped variables are fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    images: BTreeMap<u32, TracePoly>,
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution::default()
    }

    pub fn single(var: u32, image: TracePoly) -> Self {
        let mut s = Self::identity();
        s.set(var, image);
        s
    }

    /// Renames variables according to `map`.
    pub fn rename(map: &BTreeMap<u32, u32>) -> Self {
        let mut s = Self::identity();
        for (&from, &to) in map {
            s.set(from, TracePoly::var(to));
        }
        s
    }

    pub fn set(&mut self, var: u32, image: TracePoly) {
        self.images.insert(var, image);
    }

    pub fn apply_word(&self, w: &Word) -> TracePoly {
        w.letters().iter().fold(TracePoly::word(Word::one()), |acc, &v| {
            match self.images.get(&v) {
                Some(img) => acc.mul(img),
                None => acc.mul(&TracePoly::var(v)),
            }
        })
    }

    pub fn apply_scalar(&self, s: &TraceScalar) -> TraceScalar {
        let mut out = TraceScalar::zero();
        for (m, c) in s.iter() {
            let mut term = TraceScalar::lambda().pow(m.lambda).scale(c);
            for cw in m.traces() {
                term = term.mul(&self.apply_word(&cw.as_word()).trace());
            }
            out.add_assign(&term);
        }
        out
    }

    /// Applies the substitution to every tensor factor and every trace factor.
    pub fn apply(&self, a: &TwistedElement) -> TwistedElement {
        let n = a.arity();
        let mut out = TwistedElement::zero(n);
        for (t, p, c) in a.iter() {
            let coeff = self.apply_scalar(c);
            // expand ⊗ g(W_i) into a sum of tensor words
            let mut partial: Vec<(Vec<Word>, TraceScalar)> = vec![(Vec::new(), coeff)];
            for w in t.factors() {
                let img = self.apply_word(w);
                let mut next = Vec::new();
                for (words, c0) in &partial {
                    for (w2, c2) in img.iter() {
                        let mut ws = words.clone();
                        ws.push(w2.clone());
                        next.push((ws, c0.mul(c2)));
                    }
                }
                partial = next;
            }
            for (words, c) in partial {
                out.add_term(c, TensorWord(words), p.clone());
            }
        }
        out
    }
}

/// Convenience: `substitute(a, g)`.
pub fn substitute(a: &TwistedElement, g: &Substitution) -> TwistedElement {
    g.apply(a)
}

impl TwistedElement {
    pub fn substitute(&self, g: &Substitution) -> TwistedElement {
        g.apply(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_substitution() {
        // x1 ↦ x1x2 on tr(x1)·(x1 ⊗ 1)
        let a = TwistedElement::from_tensor(TensorWord(vec![Word::var(1), Word::one()]))
            .scale_scalar(&TraceScalar::trace_of(&Word::var(1)));
        let g = Substitution::single(1, TracePoly::word(Word(vec![1, 2])));
        let expected = TwistedElement::from_tensor(TensorWord(vec![Word(vec![1, 2]), Word::one()]))
            .scale_scalar(&TraceScalar::trace_of(&Word(vec![1, 2])));
        assert_eq!(a.substitute(&g), expected);
        assert_eq!(a.substitute(&Substitution::identity()), a);
    }

    #[test]
    fn substitution_into_trace_can_produce_lambda() {
        let a = TwistedElement::scalar(1, TraceScalar::trace_of(&Word::var(1)));
        let g = Substitution::single(1, TracePoly::word(Word::one()));
        assert_eq!(a.substitute(&g), TwistedElement::scalar(1, TraceScalar::lambda()));
    }
}
