//! Reduction of `interpret(σ · A_{d+1}(C))` to a basic relation `F_{h,d}`.
//!
//! The reducer works on a permutation of labelled points (tensor slots and
//! named variables) and strips points outside `C` one at a time. Every
//! stripped point corresponds to one rewrite step on twisted elements, so the
//! steps replayed from `F_{h,d}` rebuild the target.

use std::collections::{BTreeMap, BTreeSet};

use super::{coset_antisymmetrizer, interpret, interpret_labelled, InterpContext};
use crate::chident::f_kd;
use crate::error::{Result, TciError};
use crate::rational::{self, Rational};
use crate::symgroup::{split_cycles, Permutation};
use crate::tracering::{TraceScalar, Word};
use crate::twisted::{Substitution, TensorWord, TracePoly, TwistedElement};

/// Side on which a factor acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One rewrite step. Slots are zero-based; variables keep their names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// `E ↦ factor · E`.
    Scale { factor: Rational },
    /// `E ↦ α · β(E) · α⁻¹`, where `β` renames variables.
    Conjugate {
        alpha: Permutation,
        beta: BTreeMap<u32, u32>,
    },
    /// `E ↦ E ⊗ interpret(perm)` in context `(n, k)`, with `x_j` renamed to `vars[j-1]`.
    TensorSplit {
        n: usize,
        k: usize,
        perm: Permutation,
        vars: Vec<u32>,
    },
    /// `E ↦ E · (1 ⊗ … ⊗ word ⊗ … ⊗ 1)`.
    RightMultiply { slot: usize, word: Word },
    /// `E ↦ (1 ⊗ … ⊗ word ⊗ … ⊗ 1) · E`.
    LeftMultiply { slot: usize, word: Word },
    /// `x_var ↦ x_var · word` (right) or `word · x_var` (left).
    Substitute { var: u32, word: Word, side: Side },
    /// `E ↦ γ ∘ E` (left) or `E ∘ γ` (right).
    PermutationMove { gamma: Permutation, side: Side },
    /// `E ↦ tr(x_var) · E`.
    TraceFactor { var: u32 },
    /// Inserts a tensor factor `1` at `slot`.
    Pad { slot: usize },
}

/// The relation `F_{k,d}` a certificate starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasicRelation {
    pub k: usize,
    pub d: usize,
}

/// A replayable derivation of `target` from `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeductionCertificate {
    pub target: TwistedElement,
    pub base: BasicRelation,
    pub steps: Vec<Step>,
}

fn malformed(msg: impl Into<String>) -> TciError {
    TciError::Certificate(msg.into())
}

fn check_slot(slot: usize, arity: usize) -> Result<()> {
    if slot >= arity {
        return Err(malformed(format!(
            "slot {} out of range for arity {arity}",
            slot + 1
        )));
    }
    Ok(())
}

fn check_degree(p: &Permutation, arity: usize) -> Result<()> {
    if p.degree() != arity {
        return Err(malformed(format!(
            "permutation {p} has degree {}, expected {arity}",
            p.degree()
        )));
    }
    Ok(())
}

impl Step {
    /// Applies the step to `e`.
    pub fn apply(&self, e: &TwistedElement) -> Result<TwistedElement> {
        let n = e.arity();
        match self {
            Step::Scale { factor } => Ok(e.scale(factor)),
            Step::Conjugate { alpha, beta } => {
                check_degree(alpha, n)?;
                let targets: BTreeSet<u32> = beta.values().copied().collect();
                if targets.len() != beta.len() || beta.keys().chain(beta.values()).any(|&v| v == 0) {
                    return Err(malformed("variable renaming is not injective"));
                }
                e.substitute(&Substitution::rename(beta)).conjugate_by(alpha)
            }
            Step::TensorSplit { n: n2, k, perm, vars } => {
                if vars.len() != *k || vars.iter().collect::<BTreeSet<_>>().len() != *k {
                    return Err(malformed("tensor split needs k distinct variable names"));
                }
                check_degree(perm, n2 + k)?;
                Ok(e.outer_product(&interpret_labelled(perm, *n2, vars)?))
            }
            Step::RightMultiply { slot, word } => {
                check_slot(*slot, n)?;
                e.mul(&TwistedElement::from_tensor(TensorWord::at(n, *slot, word.clone())))
            }
            Step::LeftMultiply { slot, word } => {
                check_slot(*slot, n)?;
                TwistedElement::from_tensor(TensorWord::at(n, *slot, word.clone())).mul(e)
            }
            Step::Substitute { var, word, side } => {
                if *var == 0 {
                    return Err(malformed("variable x0"));
                }
                let image = match side {
                    Side::Right => Word::var(*var).concat(word),
                    Side::Left => word.concat(&Word::var(*var)),
                };
                Ok(e.substitute(&Substitution::single(*var, TracePoly::word(image))))
            }
            Step::PermutationMove { gamma, side } => {
                check_degree(gamma, n)?;
                match side {
                    Side::Left => e.left_mul_perm(gamma),
                    Side::Right => e.right_mul_perm(gamma),
                }
            }
            Step::TraceFactor { var } => {
                if *var == 0 {
                    return Err(malformed("variable x0"));
                }
                Ok(e.scale_scalar(&TraceScalar::trace_of(&Word::var(*var))))
            }
            Step::Pad { slot } => {
                if *slot > n {
                    return Err(malformed(format!(
                        "pad position {} out of range for arity {n}",
                        slot + 1
                    )));
                }
                let mut images: Vec<usize> = (0..=n).map(|i| if i < *slot { i } else { i + 1 }).collect();
                images[n] = *slot;
                let g = Permutation::from_images(images)?;
                e.outer_product(&TwistedElement::unit(1)).conjugate_by(&g)
            }
        }
    }
}

/// Replays the steps of `cert` starting from its base relation.
pub fn replay(cert: &DeductionCertificate) -> Result<TwistedElement> {
    let BasicRelation { k, d } = cert.base;
    let mut e = f_kd(k, d).map_err(|err| malformed(format!("base relation: {err}")))?;
    for step in &cert.steps {
        e = step.apply(&e)?;
    }
    Ok(e)
}

/// True iff replaying `cert` reproduces its target exactly.
pub fn verify_certificate(cert: &DeductionCertificate) -> Result<bool> {
    Ok(replay(cert)? == cert.target)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Label {
    Y(usize),
    X(u32),
}

/// `Σ_{π ∈ S_C} ε_π [ρ ∘ π]` on a labelled point set.
struct State {
    rho: BTreeMap<Label, Label>,
    c: BTreeSet<Label>,
}

impl State {
    fn next(&self, l: Label) -> Label {
        self.rho[&l]
    }

    fn prev(&self, l: Label) -> Label {
        *self.rho.iter().find(|(_, &v)| v == l).unwrap().0
    }

    fn slots(&self) -> usize {
        self.rho.keys().filter(|l| matches!(l, Label::Y(_))).count()
    }

    /// `ρ ↦ (a b) ∘ ρ`.
    fn left_transpose(&mut self, a: Label, b: Label) {
        for v in self.rho.values_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    /// `ρ ↦ ρ ∘ (a b)`.
    fn right_transpose(&mut self, a: Label, b: Label) {
        let (ra, rb) = (self.rho[&a], self.rho[&b]);
        self.rho.insert(a, rb);
        self.rho.insert(b, ra);
    }

    fn relabel(&mut self, f: impl Fn(Label) -> Label) {
        self.rho = self.rho.iter().map(|(&k, &v)| (f(k), f(v))).collect();
        self.c = self.c.iter().map(|&l| f(l)).collect();
    }

    /// Removes a fixed point, closing the gap in slot positions.
    fn remove(&mut self, l: Label) {
        debug_assert_eq!(self.rho.get(&l), Some(&l));
        self.rho.remove(&l);
        self.c.remove(&l);
        if let Label::Y(s) = l {
            self.relabel(|x| match x {
                Label::Y(t) if t > s => Label::Y(t - 1),
                other => other,
            });
        }
    }

    fn outside_c(&self) -> Vec<Label> {
        self.rho.keys().copied().filter(|l| !self.c.contains(l)).collect()
    }
}

fn transposition(n: usize, s: usize, t: usize) -> Permutation {
    Permutation::transposition(n, s, t).expect("slots in range")
}

/// Strips one point outside `C`, recording the forward steps in reverse order.
fn peel(state: &mut State, rev: &mut Vec<Step>) -> bool {
    let outside = state.outside_c();
    if outside.is_empty() {
        return false;
    }
    // Fixed points first.
    if let Some(&p) = outside.iter().find(|&&p| state.next(p) == p) {
        rev.push(match p {
            Label::X(v) => Step::TraceFactor { var: v },
            Label::Y(s) => Step::Pad { slot: s },
        });
        state.remove(p);
        return true;
    }
    // A variable is always removable through its successor.
    if let Some(&p) = outside.iter().find(|l| matches!(l, Label::X(_))) {
        let Label::X(v) = p else { unreachable!() };
        let j = state.next(p);
        rev.push(match j {
            Label::Y(s) => Step::RightMultiply {
                slot: s,
                word: Word::var(v),
            },
            Label::X(a) => Step::Substitute {
                var: a,
                word: Word::var(v),
                side: Side::Left,
            },
        });
        state.left_transpose(j, p);
        state.remove(p);
        return true;
    }
    let n = state.slots();
    for &p in &outside {
        let Label::Y(t) = p else { continue };
        if let Label::Y(s) = state.next(p) {
            rev.push(Step::PermutationMove {
                gamma: transposition(n, s, t),
                side: Side::Right,
            });
            rev.push(Step::Pad { slot: t });
            state.left_transpose(Label::Y(s), p);
            state.remove(p);
            return true;
        }
        let q = state.prev(p);
        if let (Label::Y(s), false) = (q, state.c.contains(&q)) {
            rev.push(Step::PermutationMove {
                gamma: transposition(n, s, t),
                side: Side::Left,
            });
            rev.push(Step::Pad { slot: t });
            state.right_transpose(q, p);
            state.remove(p);
            return true;
        }
    }
    // Only 2-cycles (c, p) remain, with c a variable in C and p a slot outside:
    // trade c for p in C and reattach c as a left factor on slot p.
    let p = outside[0];
    let c = state.next(p);
    let (Label::Y(t), Label::X(v)) = (p, c) else {
        unreachable!("stuck configuration is a slot paired with a variable of C")
    };
    debug_assert_eq!(state.next(c), p);
    rev.push(Step::LeftMultiply {
        slot: t,
        word: Word::var(v),
    });
    state.right_transpose(p, c);
    state.remove(c);
    state.c.insert(p);
    true
}

/// Builds a certificate deriving `interpret(σ · A_{d+1}(C))` from some `F_{h,d}`.
///
/// `c` holds zero-based points of `S_{n+k}`.
pub fn reduce_to_basic(
    sigma: &Permutation,
    c: &[usize],
    ctx: &InterpContext,
    d: usize,
) -> Result<DeductionCertificate> {
    let m = ctx.degree();
    if sigma.degree() != m {
        return Err(TciError::DegreeMismatch(sigma.degree(), m));
    }
    let c_set: BTreeSet<usize> = c.iter().copied().collect();
    if c_set.len() != c.len() || c_set.len() != d + 1 {
        return Err(TciError::Range(format!(
            "C must consist of d+1 = {} distinct points",
            d + 1
        )));
    }
    if d + 1 > m {
        return Err(TciError::Range(format!(
            "d+1 = {} exceeds n+k = {m}: no relation exists",
            d + 1
        )));
    }
    if let Some(&i) = c_set.iter().find(|&&i| i >= m) {
        return Err(TciError::IndexOutOfRange { index: i + 1, max: m });
    }
    let target = interpret(&coset_antisymmetrizer(sigma, c)?, ctx)?;

    let n = ctx.n();
    let label = |i: usize| {
        if i < n {
            Label::Y(i)
        } else {
            Label::X((i - n + 1) as u32)
        }
    };
    let mut rev = Vec::new();

    // σ = σ1 σ2 σ3 with σ3 ∈ S_C, and σ3 · A(C) = ε(σ3) · A(C).
    let split = split_cycles(sigma, c);
    let sign = split.tau3.sign();
    if sign != 1 {
        rev.push(Step::Scale {
            factor: rational::int(sign as i64),
        });
    }
    let rho = &split.tau1 * &split.tau2;
    let mut state = State {
        rho: (0..m).map(|i| (label(i), label(rho.apply(i)))).collect(),
        c: c_set.iter().map(|&i| label(i)).collect(),
    };

    // Cycles avoiding C split off as a separate tensor block.
    let block: Vec<usize> = split
        .tau2
        .nontrivial_cycles()
        .into_iter()
        .flatten()
        .collect();
    if !block.is_empty() {
        let in_block: BTreeSet<Label> = block.iter().map(|&i| label(i)).collect();
        let kept: Vec<usize> = (0..n).filter(|i| !in_block.contains(&Label::Y(*i))).collect();
        let moved: Vec<usize> = (0..n).filter(|i| in_block.contains(&Label::Y(*i))).collect();
        let mut new_pos = vec![0usize; n];
        for (pos, &old) in kept.iter().chain(&moved).enumerate() {
            new_pos[old] = pos;
        }
        let alpha = Permutation::from_images(new_pos.clone())?.inverse();
        if !alpha.is_identity() {
            rev.push(Step::Conjugate {
                alpha,
                beta: BTreeMap::new(),
            });
        }
        state.relabel(|l| match l {
            Label::Y(s) => Label::Y(new_pos[s]),
            other => other,
        });

        let n1 = kept.len();
        let vars: Vec<u32> = in_block
            .iter()
            .filter_map(|l| match l {
                Label::X(v) => Some(*v),
                Label::Y(_) => None,
            })
            .collect();
        let point = |l: Label| match l {
            Label::Y(s) => s - n1,
            Label::X(v) => moved.len() + vars.iter().position(|&w| w == v).unwrap(),
        };
        let mut images = vec![0usize; moved.len() + vars.len()];
        let block_labels: Vec<Label> = state
            .rho
            .keys()
            .copied()
            .filter(|l| match l {
                Label::Y(s) => *s >= n1,
                Label::X(v) => vars.contains(v),
            })
            .collect();
        for &l in &block_labels {
            images[point(l)] = point(state.next(l));
        }
        rev.push(Step::TensorSplit {
            n: moved.len(),
            k: vars.len(),
            perm: Permutation::from_images(images)?,
            vars,
        });
        for l in block_labels {
            state.rho.remove(&l);
        }
    }

    while peel(&mut state, &mut rev) {}

    // Only C is left and ρ is the identity there: this is (−1)^h F_{h,d}.
    debug_assert!(state.rho.iter().all(|(a, b)| a == b));
    let names: Vec<u32> = state
        .rho
        .keys()
        .filter_map(|l| match l {
            Label::X(v) => Some(*v),
            Label::Y(_) => None,
        })
        .collect();
    let h = names.len();
    let beta: BTreeMap<u32, u32> = names
        .iter()
        .enumerate()
        .map(|(j, &v)| (j as u32 + 1, v))
        .filter(|(a, b)| a != b)
        .collect();
    if !beta.is_empty() {
        rev.push(Step::Conjugate {
            alpha: Permutation::identity(state.slots()),
            beta,
        });
    }
    if h % 2 == 1 {
        rev.push(Step::Scale {
            factor: rational::int(-1),
        });
    }
    rev.reverse();
    Ok(DeductionCertificate {
        target,
        base: BasicRelation { k: h, d },
        steps: rev,
    })
}
