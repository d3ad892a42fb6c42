//! The `n`-interpretation `Q[S_{n+k}] → T_mult(k, n)` and its inverse.
//!
//! Points `0..n` of `S_{n+k}` stand for the tensor slots `y_1..y_n` and points
//! `n..n+k` for the variables `x_1..x_k`. A permutation `τ` is sent to the
//! element `T` whose pairing `tr(T · (y_1 ⊗ … ⊗ y_n))` is the product over the
//! cycles `(i, τ(i), τ²(i), …)` of `τ` of the traces of the corresponding words
//! in the `y`s and `x`s.

mod reduce;

pub use reduce::{
    reduce_to_basic, replay, verify_certificate, BasicRelation, DeductionCertificate, Side, Step,
};

use std::collections::BTreeMap;

use crate::error::{Result, TciError};
use crate::symgroup::{split_cycles, GroupAlgebraElement, Permutation};
use crate::tracering::{TraceScalar, Word};
use crate::twisted::{TensorWord, TwistedElement};

/// Tensor arity `n` and variable count `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InterpContext {
    n: usize,
    k: usize,
}

impl InterpContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n + k == 0 {
            return Err(TciError::Range("n + k must be at least 1".into()));
        }
        Ok(InterpContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.n + self.k
    }

    /// Variable number (1-based) carried by the zero-based point `i ≥ n`.
    fn var_of(&self, i: usize) -> u32 {
        (i - self.n + 1) as u32
    }

    fn point_of(&self, var: u32) -> usize {
        self.n + var as usize - 1
    }

    fn check(&self, tau: &Permutation) -> Result<()> {
        if tau.degree() != self.degree() {
            return Err(TciError::DegreeMismatch(tau.degree(), self.degree()));
        }
        Ok(())
    }
}

/// The twisted element attached to one permutation of `S_{n+k}`.
pub fn interpret_perm(tau: &Permutation, ctx: &InterpContext) -> Result<TwistedElement> {
    ctx.check(tau)?;
    let n = ctx.n;
    let split = split_cycles(tau, &(0..n).collect::<Vec<_>>());

    let mut coeff = TraceScalar::one();
    for cycle in tau.cycles() {
        if cycle[0] >= n && cycle.iter().all(|&i| i >= n) {
            let w = Word(cycle.iter().map(|&i| ctx.var_of(i)).collect());
            coeff = coeff.mul(&TraceScalar::trace_of(&w));
        }
    }

    let words = (0..n)
        .map(|i| {
            let mut letters = Vec::new();
            let mut j = split.tau1.apply(i);
            while j != i {
                letters.push(ctx.var_of(j));
                j = split.tau1.apply(j);
            }
            Word(letters)
        })
        .collect();
    let tau3 = split.tau3.restrict(n)?;
    Ok(TwistedElement::term_left(coeff, &tau3.inverse(), &TensorWord(words)))
}

/// Linear extension of [`interpret_perm`].
pub fn interpret(g: &GroupAlgebraElement, ctx: &InterpContext) -> Result<TwistedElement> {
    if g.degree() != ctx.degree() {
        return Err(TciError::DegreeMismatch(g.degree(), ctx.degree()));
    }
    let mut out = TwistedElement::zero(ctx.n);
    for (p, c) in g.iter() {
        out.add_assign(&interpret_perm(p, ctx)?.scale(c))?;
    }
    Ok(out)
}

/// Inverse of [`interpret`] on elements multilinear in `x_1..x_k`.
pub fn encode(a: &TwistedElement, ctx: &InterpContext) -> Result<GroupAlgebraElement> {
    if a.arity() != ctx.n {
        return Err(TciError::ArityMismatch(a.arity(), ctx.n));
    }
    let m = ctx.degree();
    let bad = |reason: String| TciError::NotMultilinear { k: ctx.k, reason };
    let mut out = GroupAlgebraElement::zero(m);
    for (t, sigma, scalar) in a.iter() {
        // W ∘ σ = σ ∘ W' with W' = W permuted by σ⁻¹.
        let left = t.permuted(&sigma.inverse());
        for (mono, c) in scalar.iter() {
            if mono.lambda > 0 {
                return Err(bad("a term carries tr(1)".into()));
            }
            let mut images: Vec<Option<usize>> = vec![None; m];
            let mut seen = vec![false; ctx.k];
            let mut close_cycle = |points: &[usize]| -> Result<()> {
                for (idx, &p) in points.iter().enumerate() {
                    images[p] = Some(points[(idx + 1) % points.len()]);
                }
                Ok(())
            };
            let mut mark = |v: u32| -> Result<usize> {
                let v = v as usize;
                if v == 0 || v > ctx.k {
                    return Err(bad(format!("variable x{v} is outside x1..x{}", ctx.k)));
                }
                if std::mem::replace(&mut seen[v - 1], true) {
                    return Err(bad(format!("variable x{v} occurs twice in a term")));
                }
                Ok(ctx.point_of(v as u32))
            };
            for cw in mono.traces() {
                let pts = cw.letters().iter().map(|&v| mark(v)).collect::<Result<Vec<_>>>()?;
                close_cycle(&pts)?;
            }
            for (slot, w) in left.factors().iter().enumerate() {
                let mut pts = vec![slot];
                for &v in w.letters() {
                    pts.push(mark(v)?);
                }
                close_cycle(&pts)?;
            }
            if let Some(v) = seen.iter().position(|s| !s) {
                return Err(bad(format!("variable x{} is missing from a term", v + 1)));
            }
            let tau12 = Permutation::from_images(images.into_iter().map(|i| i.unwrap()).collect())?;
            let tau3 = sigma.inverse().extend(m);
            out.add_term(&tau12 * &tau3, c.clone());
        }
    }
    Ok(out)
}

/// Interpretation of a permutation on labelled points: slots `0..n` and the
/// named variables in `vars` (point `n + j` carries `vars[j]`).
pub(crate) fn interpret_labelled(tau: &Permutation, n: usize, vars: &[u32]) -> Result<TwistedElement> {
    let ctx = InterpContext::new(n, vars.len())?;
    let e = interpret_perm(tau, &ctx)?;
    let map: BTreeMap<u32, u32> = vars.iter().enumerate().map(|(j, &v)| (j as u32 + 1, v)).collect();
    Ok(e.substitute(&crate::twisted::Substitution::rename(&map)))
}

/// `Σ_{π ∈ S_C} ε_π · g ∘ π` as a group algebra element of degree `m`.
pub fn coset_antisymmetrizer(g: &Permutation, c: &[usize]) -> Result<GroupAlgebraElement> {
    let a = GroupAlgebraElement::antisymmetrizer(g.degree(), c)?;
    GroupAlgebraElement::from_perm(g.clone()).mul(&a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::parse_cycles;

    fn ctx(n: usize, k: usize) -> InterpContext {
        InterpContext::new(n, k).unwrap()
    }

    #[test]
    fn worked_examples() {
        let t = interpret_perm(&parse_cycles(3, "(2,1,3)").unwrap(), &ctx(2, 1)).unwrap();
        let expected = TwistedElement::term_left(
            TraceScalar::one(),
            &parse_cycles(2, "(1,2)").unwrap(),
            &TensorWord(vec![Word::one(), Word::var(1)]),
        );
        assert_eq!(t, expected);

        let t = interpret_perm(&parse_cycles(6, "(6,4,2,1,5,3)").unwrap(), &ctx(3, 3)).unwrap();
        let expected = TwistedElement::term_left(
            TraceScalar::one(),
            &parse_cycles(3, "(1,2,3)").unwrap(),
            &TensorWord(vec![Word::one(), Word(vec![3, 1]), Word::var(2)]),
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn constants_and_pure_traces() {
        let p = parse_cycles(3, "(1,2,3)").unwrap();
        assert_eq!(
            interpret_perm(&p, &ctx(3, 0)).unwrap(),
            TwistedElement::from_perm(p.inverse())
        );
        let t = interpret_perm(&parse_cycles(3, "(1,3)").unwrap(), &ctx(0, 3)).unwrap();
        let expected = TraceScalar::trace_of(&Word(vec![1, 3])).mul(&TraceScalar::trace_of(&Word::var(2)));
        assert_eq!(t.as_scalar(), Some(expected));
    }

    #[test]
    fn encode_inverts_interpret_on_s4() {
        for n in 0..=4 {
            let c = ctx(n, 4 - n);
            for p in Permutation::all(4) {
                let e = interpret_perm(&p, &c).unwrap();
                assert_eq!(encode(&e, &c).unwrap(), GroupAlgebraElement::from_perm(p));
            }
        }
    }

    #[test]
    fn encode_rejects_non_multilinear() {
        let c = ctx(1, 2);
        let a = TwistedElement::from_tensor(TensorWord(vec![Word(vec![1, 1])]));
        assert!(matches!(encode(&a, &c), Err(TciError::NotMultilinear { .. })));
        let b = TwistedElement::from_tensor(TensorWord(vec![Word::var(1)]));
        assert!(encode(&b, &c).is_err());
        let l = TwistedElement::scalar(1, TraceScalar::lambda());
        assert!(encode(&l, &ctx(1, 0)).is_err());
        assert_eq!(
            encode(&TwistedElement::unit(2), &ctx(2, 0)).unwrap(),
            GroupAlgebraElement::one(2)
        );
    }

    #[test]
    fn labelled_interpretation_renames() {
        let p = parse_cycles(3, "(2,3)").unwrap();
        let e = interpret_labelled(&p, 1, &[7, 4]).unwrap();
        assert_eq!(e.as_scalar(), None);
        assert_eq!(e.variables().into_iter().collect::<Vec<_>>(), vec![4, 7]);
    }
}
