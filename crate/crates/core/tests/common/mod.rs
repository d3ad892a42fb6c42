#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, RngExt};
use std::collections::BTreeMap;

use tci_core::interp::{interpret_perm, InterpContext};
use tci_core::rational;
use tci_core::symgroup::{parse_cycles, GroupAlgebraElement, Permutation};
use tci_core::tracering::{TraceScalar, Word};
use tci_core::twisted::{Substitution, TensorWord, TracePoly, TwistedElement};

pub fn ctx(n: usize, k: usize) -> InterpContext {
    InterpContext::new(n, k).unwrap()
}

pub fn perm(m: usize, s: &str) -> Permutation {
    parse_cycles(m, s).unwrap()
}

pub fn x() -> Word {
    Word::var(1)
}

pub fn tensor(words: Vec<Word>) -> TwistedElement {
    TwistedElement::from_tensor(TensorWord(words))
}

pub fn tr(w: Word) -> TraceScalar {
    TraceScalar::trace_of(&w)
}

/// `Σ c_i · p_i` over `S_n` as a twisted element.
pub fn perms(n: usize, terms: &[(i64, &str)]) -> TwistedElement {
    let mut g = GroupAlgebraElement::zero(n);
    for &(c, p) in terms {
        g.add_term(perm(n, p), rational::int(c));
    }
    TwistedElement::from_group_algebra(&g)
}

pub fn t(n: usize, rho: &Permutation, k: usize) -> TwistedElement {
    interpret_perm(rho, &ctx(n, k)).unwrap()
}

/// `ρ ⊕ id` on `extra` more points.
pub fn pad_fixed(rho: &Permutation, extra: usize) -> Permutation {
    rho.extend(rho.degree() + extra)
}

/// Inserts a fixed point at position `at`, shifting later points up.
pub fn insert_fixed(rho: &Permutation, at: usize) -> Permutation {
    let shift = |i: usize| if i >= at { i + 1 } else { i };
    let mut images: Vec<usize> = (0..=rho.degree()).collect();
    for i in 0..rho.degree() {
        images[shift(i)] = shift(rho.apply(i));
    }
    Permutation::from_images(images).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, m: usize) -> Permutation {
    let mut images: Vec<usize> = (0..m).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn random_subset<R: Rng>(rng: &mut R, m: usize, size: usize) -> Vec<usize> {
    let mut pts: Vec<usize> = (0..m).collect();
    pts.shuffle(rng);
    let mut c = pts[..size].to_vec();
    c.sort_unstable();
    c
}

fn random_word<R: Rng>(rng: &mut R, max_len: usize, vars: u32) -> Word {
    let len = rng.random_range(0..=max_len);
    Word((0..len).map(|_| rng.random_range(1..=vars)).collect())
}

/// A small random element of arity `n` in `x1, x2`, optionally with `λ`.
pub fn random_element<R: Rng>(rng: &mut R, n: usize, with_lambda: bool) -> TwistedElement {
    let mut out = TwistedElement::zero(n);
    for _ in 0..rng.random_range(1..=3) {
        let words = (0..n).map(|_| random_word(rng, 2, 2)).collect();
        let mut coeff = TraceScalar::int(rng.random_range(-3..=3));
        match rng.random_range(0..4) {
            0 => {
                let w = random_word(rng, 2, 2);
                if !w.is_empty() {
                    coeff = coeff.mul(&tr(w));
                }
            }
            1 if with_lambda => coeff = coeff.mul(&TraceScalar::lambda()),
            _ => {}
        }
        out.add_term(coeff, TensorWord(words), random_perm(rng, n));
    }
    out
}

/// A random element of `T_mult(k, n)` as a combination of interpretations.
pub fn random_multilinear<R: Rng>(rng: &mut R, n: usize, k: usize) -> TwistedElement {
    let c = ctx(n, k);
    let mut out = TwistedElement::zero(n);
    for _ in 0..rng.random_range(1..=4) {
        let p = random_perm(rng, n + k);
        let coeff = rational::int(rng.random_range(-2..=2));
        out.add_assign(&interpret_perm(&p, &c).unwrap().scale(&coeff)).unwrap();
    }
    out
}

pub fn rename(a: &TwistedElement, map: &[(u32, u32)]) -> TwistedElement {
    let m: BTreeMap<u32, u32> = map.iter().copied().collect();
    a.substitute(&Substitution::rename(&m))
}

pub fn substitute_word(a: &TwistedElement, var: u32, image: Word) -> TwistedElement {
    a.substitute(&Substitution::single(var, TracePoly::word(image)))
}

/// The word `x_{k'+1} … x_{k'+p}` of the fresh variables.
pub fn fresh_word(k_old: usize, p: usize) -> Word {
    Word((k_old as u32 + 1..=(k_old + p) as u32).collect())
}

/// The cycle `(first, n+k', …, n+k'+p−1)` through the fresh points.
pub fn fresh_cycle(m: usize, first: usize, fresh_start: usize, p: usize) -> Permutation {
    let mut c = vec![first];
    c.extend(fresh_start..fresh_start + p);
    Permutation::cycle(m, &c).unwrap()
}

/// Checks every deduction rule for one `ρ ∈ S_{n+k}`; returns a description of the first failure.
pub fn check_rules(n: usize, k: usize, rho: &Permutation) -> Result<(), String> {
    let m = n + k;
    let base = t(n, rho, k);
    let fail = |rule: &str| Err(format!("{rule} fails for n={n}, k={k}, ρ={rho}"));

    // Tensor-monomial multiplication and monomial substitution with p fresh variables.
    for p in 1..=2usize {
        let big = pad_fixed(rho, p);
        let word = fresh_word(k, p);
        for slot in 0..n {
            let g = fresh_cycle(m + p, slot, m, p);
            let right = base
                .mul(&TwistedElement::from_tensor(TensorWord::at(n, slot, word.clone())))
                .unwrap();
            if t(n, &(&g * &big), k + p) != right {
                return fail("right tensor multiplication");
            }
            let left = TwistedElement::from_tensor(TensorWord::at(n, slot, word.clone()))
                .mul(&base)
                .unwrap();
            if t(n, &(&big * &g), k + p) != left {
                return fail("left tensor multiplication");
            }
        }
        for var in 1..=k as u32 {
            let point = n + var as usize - 1;
            let g = fresh_cycle(m + p, point, m, p);
            let after = substitute_word(&base, var, Word::var(var).concat(&word));
            if t(n, &(&big * &g), k + p) != after {
                return fail("substitution x ↦ xM");
            }
            let before = substitute_word(&base, var, word.concat(&Word::var(var)));
            if t(n, &(&g * &big), k + p) != before {
                return fail("substitution x ↦ Mx");
            }
        }
    }

    // Permutations of the tensor slots move to permutation factors.
    for gamma in Permutation::all(n) {
        let g = gamma.extend(m);
        let gi = gamma.inverse();
        if t(n, &(rho * &g), k) != base.left_mul_perm(&gi).unwrap() {
            return fail("slot permutation on the right");
        }
        if t(n, &(&g * rho), k) != base.right_mul_perm(&gi).unwrap() {
            return fail("slot permutation on the left");
        }
        if t(n, &rho.conjugate_by(&g), k) != base.conjugate_by(&gamma).unwrap() {
            return fail("slot conjugation");
        }
    }

    // Conjugation by variable permutations renames variables.
    for s in Permutation::all(k) {
        let g = Permutation::identity(n).direct_sum(&s);
        let map: Vec<(u32, u32)> = (0..k).map(|j| (j as u32 + 1, s.apply(j) as u32 + 1)).collect();
        if t(n, &rho.conjugate_by(&g), k) != rename(&base, &map) {
            return fail("variable conjugation");
        }
    }

    // A new fixed slot pads with 1; a new fixed variable multiplies by its trace.
    let padded = t(n + 1, &insert_fixed(rho, n), k);
    if padded != base.outer_product(&TwistedElement::unit(1)) {
        return fail("identity pad");
    }
    let traced = t(n, &pad_fixed(rho, 1), k + 1);
    if traced != base.scale_scalar(&tr(Word::var(k as u32 + 1))) {
        return fail("trace factor");
    }
    Ok(())
}

/// The interpretation of a block product equals the outer product of interpretations.
pub fn check_blocks(n1: usize, k1: usize, r1: &Permutation, n2: usize, k2: usize, r2: &Permutation) -> Result<(), String> {
    // Points: slots of block 1, slots of block 2, variables of block 1, variables of block 2.
    let m = n1 + n2 + k1 + k2;
    let place1 = |i: usize| if i < n1 { i } else { n2 + i };
    let place2 = |i: usize| if i < n2 { n1 + i } else { n1 + k1 + i };
    let mut images = vec![0usize; m];
    for i in 0..n1 + k1 {
        images[place1(i)] = place1(r1.apply(i));
    }
    for i in 0..n2 + k2 {
        images[place2(i)] = place2(r2.apply(i));
    }
    let joint = Permutation::from_images(images).unwrap();
    let lhs = t(n1 + n2, &joint, k1 + k2);
    let shift: Vec<(u32, u32)> = (1..=k2 as u32).map(|v| (v, v + k1 as u32)).collect();
    let rhs = t(n1, r1, k1).outer_product(&rename(&t(n2, r2, k2), &shift));
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("block product fails for {r1} ({n1},{k1}) and {r2} ({n2},{k2})"))
    }
}
