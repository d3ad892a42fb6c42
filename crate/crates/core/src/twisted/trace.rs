use super::{TensorWord, TwistedElement};
use crate::error::{Result, TciError};
use crate::symgroup::Permutation;
use crate::tracering::{TraceScalar, Word};

impl TwistedElement {
    /// The full trace. For `W ∘ σ` each cycle `(i, σ⁻¹(i), σ⁻²(i), …)` of `σ⁻¹`
    /// contributes `tr(W_i W_{σ⁻¹(i)} …)`, and an empty cycle word contributes `λ`.
    pub fn full_trace(&self) -> TraceScalar {
        let mut out = TraceScalar::zero();
        for (t, p, c) in self.iter() {
            let inv = p.inverse();
            let mut factor = TraceScalar::one();
            for cycle in inv.cycles() {
                let word = cycle
                    .iter()
                    .fold(Word::one(), |acc, &i| acc.concat(&t.factors()[i]));
                factor = factor.mul(&TraceScalar::trace_of(&word));
            }
            out.add_assign(&c.mul(&factor));
        }
        out
    }

    /// The formal partial trace over the last tensor slot.
    ///
    /// With `last = n` and `j = σ(n)`: if `j = n` the last factor closes into a
    /// trace; otherwise it is appended to factor `j` and the permutation becomes
    /// `(n, j) ∘ σ` restricted to `S_{n−1}`.
    pub fn partial_trace(&self) -> Result<TwistedElement> {
        let n = self.arity();
        if n == 0 {
            return Err(TciError::ArityZero);
        }
        let last = n - 1;
        let mut out = TwistedElement::zero(last);
        for (t, p, c) in self.iter() {
            let mut words = t.factors().to_vec();
            let tail = words.pop().expect("arity at least one");
            let j = p.apply(last);
            if j == last {
                let q = p.restrict(last).expect("σ fixes the last point");
                out.add_term(c.mul(&TraceScalar::trace_of(&tail)), TensorWord(words), q);
            } else {
                words[j] = words[j].concat(&tail);
                let swap = Permutation::transposition(n, last, j)?;
                let q = (&swap * p).restrict(last).expect("(n,j)∘σ fixes n");
                out.add_term(c.clone(), TensorWord(words), q);
            }
        }
        Ok(out)
    }

    /// Applies the partial trace `times` times.
    pub fn partial_trace_iter(&self, times: usize) -> Result<TwistedElement> {
        (0..times).try_fold(self.clone(), |acc, _| acc.partial_trace())
    }
}
