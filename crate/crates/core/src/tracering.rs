//! Words in the variables `x1, x2, …` and their cyclic classes `tr(M)`.
//! Coefficients live in the commutative ring `Q[λ][tr(M)]` where `λ` stands for `tr(1)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Result, TciError};
use crate::rational::{self, Rational};

/// A noncommutative monomial; the empty word is `1`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn var(i: u32) -> Self {
        Word(vec![i])
    }

    /// `x_i^e`.
    pub fn power(i: u32, e: usize) -> Self {
        Word(vec![i; e])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("x{i}")).collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A nonempty word up to rotation, stored as its lexicographically least rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<u32>);

impl CyclicWord {
    pub fn new(w: &Word) -> Result<Self> {
        cyclic_canonicalize(w)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tr({})", Word(self.0.clone()))
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn cyclic_canonicalize(w: &Word) -> Result<CyclicWord> {
    let v = &w.0;
    if v.is_empty() {
        return Err(TciError::EmptyWord);
    }
    let n = v.len();
    let best = (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|t| v[(a + t) % n])
                .cmp((0..n).map(|t| v[(b + t) % n]))
        })
        .unwrap();
    Ok(CyclicWord((0..n).map(|t| v[(best + t) % n]).collect()))
}

/// `λ^lambda · ∏ traces`, with `traces` kept sorted.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceMonomial {
    pub lambda: u32,
    traces: Vec<CyclicWord>,
}

impl TraceMonomial {
    pub fn new(lambda: u32, mut traces: Vec<CyclicWord>) -> Self {
        traces.sort();
        TraceMonomial { lambda, traces }
    }

    pub fn traces(&self) -> &[CyclicWord] {
        &self.traces
    }

    pub fn mul(&self, other: &TraceMonomial) -> TraceMonomial {
        let mut traces = self.traces.clone();
        traces.extend(other.traces.iter().cloned());
        TraceMonomial::new(self.lambda + other.lambda, traces)
    }

    /// Every variable occurrence inside the trace factors.
    pub fn letters(&self) -> impl Iterator<Item = u32> + '_ {
        self.traces.iter().flat_map(|c| c.0.iter().copied())
    }
}

impl fmt::Display for TraceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.lambda {
            0 => {}
            1 => parts.push("L".to_string()),
            e => parts.push(format!("L^{e}")),
        }
        parts.extend(self.traces.iter().map(|c| c.to_string()));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// An element of `Q[λ][tr(M)]`; no stored coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceScalar {
    terms: BTreeMap<TraceMonomial, Rational>,
}

impl TraceScalar {
    // ---- Constructors ----

    pub fn zero() -> Self {
        TraceScalar::default()
    }

    pub fn one() -> Self {
        Self::constant(rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_monomial(TraceMonomial::default(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rational::int(n))
    }

    /// The formal `λ = tr(1)`.
    pub fn lambda() -> Self {
        Self::from_monomial(TraceMonomial::new(1, Vec::new()), rational::one())
    }

    /// `tr(w)`, which is `λ` for the empty word.
    pub fn trace_of(w: &Word) -> Self {
        if w.is_empty() {
            return Self::lambda();
        }
        let c = cyclic_canonicalize(w).expect("nonempty word");
        Self::from_monomial(TraceMonomial::new(0, vec![c]), rational::one())
    }

    pub fn from_monomial(m: TraceMonomial, c: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(m, c);
        s
    }

    // ---- Accessors ----

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TraceMonomial, &Rational)> {
        self.terms.iter()
    }

    /// The rational value if the scalar has no λ and no trace factors.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.lambda == 0 && m.traces.is_empty()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn has_lambda(&self) -> bool {
        self.terms.keys().any(|m| m.lambda > 0)
    }

    // ---- Ring operations ----

    pub fn add_term(&mut self, m: TraceMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_assign(&mut self, other: &TraceScalar) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &TraceScalar) -> TraceScalar {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &TraceScalar) -> TraceScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TraceScalar {
        self.scale(&-rational::one())
    }

    pub fn scale(&self, c: &Rational) -> TraceScalar {
        if c.is_zero() {
            return Self::zero();
        }
        TraceScalar {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &TraceScalar) -> TraceScalar {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TraceScalar {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Replaces `λ` by the integer `d`.
    pub fn specialize_lambda(&self, d: i64) -> TraceScalar {
        let mut out = Self::zero();
        let dq = rational::int(d);
        for (m, c) in &self.terms {
            let factor = num_traits::pow(dq.clone(), m.lambda as usize);
            out.add_term(TraceMonomial::new(0, m.traces.clone()), c * factor);
        }
        out
    }
}

impl fmt::Display for TraceScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (t, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (t, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_unit = m.lambda == 0 && m.traces.is_empty();
            if is_unit {
                f.write_str(&rational::render(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::render(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TraceScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
