use std::collections::BTreeMap;

use super::{Substitution, TensorWord, TwistedElement};
use crate::error::{Result, TciError};
use crate::symgroup::Permutation;
use crate::tracering::{CyclicWord, TraceMonomial, TraceScalar, Word};

/// Full polarization of an element homogeneous of degree `k` in `x1`.
///
/// Each term is expanded over all `k!` ways of assigning the fresh variables
/// `x1..xk` to its `k` occurrences of `x1`, so `restitute(polarize(a)) = k!·a`.
pub fn polarize(a: &TwistedElement) -> Result<TwistedElement> {
    let vars = a.variables();
    if vars.iter().any(|&v| v != 1) {
        return Err(TciError::NotHomogeneous(format!(
            "expected only x1, found variables {vars:?}"
        )));
    }
    let mut degree: Option<usize> = None;
    let mut out = TwistedElement::zero(a.arity());
    for (t, p, c) in a.iter() {
        for (m, coeff) in c.iter() {
            let k = m.letters().count() + t.factors().iter().map(Word::len).sum::<usize>();
            match degree {
                None => degree = Some(k),
                Some(d) if d != k => {
                    return Err(TciError::NotHomogeneous(format!(
                        "terms of degree {d} and {k}"
                    )))
                }
                _ => {}
            }
            for assignment in Permutation::all(k) {
                let mut next = assignment.images().iter().map(|&v| v as u32 + 1);
                let traces: Vec<CyclicWord> = m
                    .traces()
                    .iter()
                    .map(|cw| {
                        let w = Word(cw.letters().iter().map(|_| next.next().unwrap()).collect());
                        CyclicWord::new(&w).expect("nonempty")
                    })
                    .collect();
                let words: Vec<Word> = t
                    .factors()
                    .iter()
                    .map(|w| Word(w.letters().iter().map(|_| next.next().unwrap()).collect()))
                    .collect();
                let mono = TraceMonomial::new(m.lambda, traces);
                out.add_term(
                    TraceScalar::from_monomial(mono, coeff.clone()),
                    TensorWord(words),
                    p.clone(),
                );
            }
        }
    }
    Ok(out)
}

/// Sets every variable to `x1`.
pub fn restitute(a: &TwistedElement) -> TwistedElement {
    let map: BTreeMap<u32, u32> = a.variables().into_iter().map(|v| (v, 1)).collect();
    a.substitute(&Substitution::rename(&map))
}
