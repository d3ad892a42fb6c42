//! Tensor Cayley–Hamilton identities in one matrix variable `x = x1`, and the
//! multilinear relations `F_{k,d}` they polarize to.

use crate::error::{Result, TciError};
use crate::interp::{interpret, InterpContext};
use crate::rational::{self, Rational};
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::tracering::{TraceScalar, Word};
use crate::twisted::{TensorWord, TwistedElement};

const X: u32 = 1;

fn power_trace(i: usize) -> TraceScalar {
    TraceScalar::trace_of(&Word::power(X, i))
}

fn sign(j: usize) -> Rational {
    rational::int(if j.is_multiple_of(2) { 1 } else { -1 })
}

fn check_range(k: usize, d: usize) -> Result<()> {
    if k > d + 1 {
        return Err(TciError::Range(format!(
            "k = {k} must satisfy 0 <= k <= d+1 = {}",
            d + 1
        )));
    }
    Ok(())
}

/// Elementary symmetric function `σ_j` of the eigenvalues of `x`, by Newton's identities.
pub fn sigma_j(j: usize) -> TraceScalar {
    let mut sigmas = vec![TraceScalar::one()];
    for r in 1..=j {
        let mut acc = TraceScalar::zero();
        for i in 1..=r {
            acc.add_assign(&sigmas[r - i].mul(&power_trace(i)).scale(&sign(i - 1)));
        }
        sigmas.push(acc.scale(&rational::frac(1, r as i64)));
    }
    sigmas.pop().unwrap()
}

/// `Σ_{σ ∈ S_j} ε_σ ∏_{cycles} tr(x^{len}) / j!`; factorial cost, kept for cross-checks.
pub fn sigma_j_by_permutations(j: usize) -> TraceScalar {
    let mut acc = TraceScalar::zero();
    for p in Permutation::all(j) {
        let mut term = TraceScalar::int(p.sign() as i64);
        for c in p.cycles() {
            term = term.mul(&power_trace(c.len()));
        }
        acc.add_assign(&term);
    }
    acc.scale(&(rational::one() / rational::factorial(j)))
}

fn weak_compositions(i: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![i]];
    }
    let mut out = Vec::new();
    for first in (0..=i).rev() {
        for mut rest in weak_compositions(i - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `𝔗_{i,n}`: the sum of `x^{c_1} ⊗ … ⊗ x^{c_n}` over `c_1 + … + c_n = i`.
///
/// For `n = 0` this is the scalar `tr(x^i)`, with `tr(x^0) = λ`.
pub fn frak_t(i: usize, n: usize) -> TwistedElement {
    if n == 0 {
        return TwistedElement::scalar(0, power_trace(i));
    }
    let mut out = TwistedElement::zero(n);
    for c in weak_compositions(i, n) {
        let t = TensorWord(c.into_iter().map(|e| Word::power(X, e)).collect());
        out.add_term(TraceScalar::one(), t, Permutation::identity(n));
    }
    out
}

/// `F_{k,d} = (−1)^k · interpret(A_{d+1})` in arity `d+1−k` with variables `x1..xk`.
pub fn f_kd(k: usize, d: usize) -> Result<TwistedElement> {
    check_range(k, d)?;
    let ctx = InterpContext::new(d + 1 - k, k)?;
    let a = GroupAlgebraElement::antisymmetrizer(d + 1, &(0..=d).collect::<Vec<_>>())?;
    Ok(interpret(&a, &ctx)?.scale(&sign(k)))
}

/// The tensor Cayley–Hamilton element `𝔠_{k,d}(x)` of arity `d+1−k`.
pub fn ch(k: usize, d: usize) -> Result<TwistedElement> {
    check_range(k, d)?;
    let n = d + 1 - k;
    if n == 0 {
        return Ok(TwistedElement::scalar(0, sigma_j(k).scale(&sign(k))));
    }
    let mut inner = TwistedElement::zero(n);
    for j in 0..=k {
        inner.add_assign(&frak_t(k - j, n).scale_scalar(&sigma_j(j).scale(&sign(j))))?;
    }
    let a = GroupAlgebraElement::antisymmetrizer(n, &(0..n).collect::<Vec<_>>())?;
    TwistedElement::from_group_algebra(&a).mul(&inner)
}

/// `𝔠_{k,d}` from the antisymmetrizer by `k` partial-trace steps with `tr(1) = d`.
pub fn ch_recursive(k: usize, d: usize) -> Result<TwistedElement> {
    check_range(k, d)?;
    let a = GroupAlgebraElement::antisymmetrizer(d + 1, &(0..=d).collect::<Vec<_>>())?;
    let mut c = TwistedElement::from_group_algebra(&a);
    for j in 0..k {
        c = recursion_step(&c, j)?.specialize_lambda(d as i64);
    }
    Ok(c)
}

/// `−1/(j+1) · 𝚝(c · (1 ⊗ … ⊗ 1 ⊗ x))`, without specializing `λ`.
pub fn recursion_step(c: &TwistedElement, j: usize) -> Result<TwistedElement> {
    let n = c.arity();
    if n == 0 {
        return Err(TciError::ArityZero);
    }
    let x_last = TwistedElement::from_tensor(TensorWord::at(n, n - 1, Word::var(X)));
    Ok(c.mul(&x_last)?
        .partial_trace()?
        .scale(&rational::frac(-1, j as i64 + 1)))
}
