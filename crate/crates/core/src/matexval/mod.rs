//! Exact evaluation of twisted elements on `d × d` matrices.
//!
//! Tensor words become Kronecker products, permutations become place-permutation
//! operators on `(Q^d)^{⊗n}` with `σ·(v_1 ⊗ … ⊗ v_n) = v_{σ⁻¹(1)} ⊗ … ⊗ v_{σ⁻¹(n)}`,
//! and trace factors become polynomial scalars. Basis tuples are indexed with
//! the first tensor slot most significant.

mod matrix;
mod poly;

pub use matrix::PolyMatrix;
pub use poly::{Monomial, MultiPoly, Var};

use std::collections::{BTreeMap, HashMap};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, TciError};
use crate::rational::{self, Rational};
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::tracering::{TraceScalar, Word};
use crate::twisted::TwistedElement;

/// Default ceiling on `d^n`.
pub const DEFAULT_MAX_DIM: usize = 4096;

/// The active dimension cap: `TCI_MAX_DIM` if set to a positive integer, else 4096.
pub fn dim_cap() -> usize {
    std::env::var("TCI_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn checked_dim(d: usize, n: usize) -> Result<usize> {
    let cap = dim_cap();
    let dim = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(d));
    match dim {
        Some(dim) if dim <= cap => Ok(dim),
        Some(dim) => Err(TciError::DimensionCap { dim, cap }),
        None => Err(TciError::DimensionCap {
            dim: usize::MAX,
            cap,
        }),
    }
}

/// The `d × d` matrix with entry `(a, b)` equal to `ξ^{(i)}_{a,b}`.
pub fn generic_matrix(i: u32, d: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zero(d);
    for a in 0..d {
        for b in 0..d {
            m.set(
                a,
                b,
                MultiPoly::var(Var {
                    mat: i,
                    row: a as u16,
                    col: b as u16,
                }),
            );
        }
    }
    m
}

/// Index of `σ·e_a` where `a` is the basis index of a tuple in `{0..d}^m`.
fn act_on_index(sigma: &Permutation, d: usize, index: usize) -> usize {
    let m = sigma.degree();
    let mut digits = vec![0usize; m];
    let mut rest = index;
    for slot in (0..m).rev() {
        digits[slot] = rest % d;
        rest /= d;
    }
    let mut moved = vec![0usize; m];
    for (i, &a) in digits.iter().enumerate() {
        moved[sigma.apply(i)] = a;
    }
    moved.iter().fold(0, |acc, &a| acc * d + a)
}

/// The place-permutation operator of `σ ∈ S_m` on `(Q^d)^{⊗m}`.
pub fn perm_operator(sigma: &Permutation, d: usize) -> Result<PolyMatrix> {
    let dim = checked_dim(d, sigma.degree())?;
    let mut m = PolyMatrix::zero(dim);
    for col in 0..dim {
        m.set(act_on_index(sigma, d, col), col, MultiPoly::one());
    }
    Ok(m)
}

/// Value given to a matrix variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixValue {
    /// Fresh indeterminates `ξ^{(i)}_{a,b}`.
    Generic,
    /// A concrete `d × d` rational matrix.
    Concrete(Vec<Vec<Rational>>),
}

/// Assignment of matrices to variables; unassigned variables are generic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<u32, MatrixValue>,
}

impl Assignment {
    pub fn generic() -> Self {
        Assignment::default()
    }

    pub fn with(mut self, var: u32, value: MatrixValue) -> Self {
        self.values.insert(var, value);
        self
    }

    pub fn set(&mut self, var: u32, value: MatrixValue) {
        self.values.insert(var, value);
    }

    fn matrix(&self, var: u32, d: usize) -> Result<PolyMatrix> {
        match self.values.get(&var) {
            None | Some(MatrixValue::Generic) => Ok(generic_matrix(var, d)),
            Some(MatrixValue::Concrete(rows)) => {
                if rows.len() != d {
                    return Err(TciError::DimensionMismatch(format!(
                        "matrix for x{var} has {} rows, expected {d}",
                        rows.len()
                    )));
                }
                PolyMatrix::from_rationals(rows)
            }
        }
    }
}

struct Evaluator<'a> {
    asg: &'a Assignment,
    d: usize,
    words: HashMap<Word, PolyMatrix>,
}

impl Evaluator<'_> {
    fn word(&mut self, w: &Word) -> Result<PolyMatrix> {
        if let Some(m) = self.words.get(w) {
            return Ok(m.clone());
        }
        let mut m = PolyMatrix::identity(self.d);
        for &v in w.letters() {
            m = m.mul(&self.asg.matrix(v, self.d)?)?;
        }
        self.words.insert(w.clone(), m.clone());
        Ok(m)
    }

    fn scalar(&mut self, s: &TraceScalar) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in s.iter() {
            if m.lambda > 0 {
                return Err(TciError::UnspecializedLambda);
            }
            let mut term = MultiPoly::constant(c.clone());
            for cw in m.traces() {
                term = term.mul(&self.word(&cw.as_word())?.trace());
            }
            out.add_assign(&term);
        }
        Ok(out)
    }
}

/// Evaluates a trace scalar (no `λ` allowed).
pub fn evaluate_scalar(s: &TraceScalar, asg: &Assignment, d: usize) -> Result<MultiPoly> {
    Evaluator {
        asg,
        d,
        words: HashMap::new(),
    }
    .scalar(s)
}

/// The matrix `π_n(a)` of dimension `d^n`.
pub fn evaluate(a: &TwistedElement, asg: &Assignment, d: usize) -> Result<PolyMatrix> {
    if a.has_lambda() {
        return Err(TciError::UnspecializedLambda);
    }
    let n = a.arity();
    let dim = checked_dim(d, n)?;
    let mut ev = Evaluator {
        asg,
        d,
        words: HashMap::new(),
    };
    let mut out = PolyMatrix::zero(dim);
    for (t, p, c) in a.iter() {
        let coeff = ev.scalar(c)?;
        if coeff.is_zero() {
            continue;
        }
        let mut entries: Vec<(usize, usize, MultiPoly)> = vec![(0, 0, coeff)];
        for w in t.factors() {
            let m = ev.word(w)?;
            let mut next = Vec::new();
            for (r, c0, poly) in &entries {
                for (&(i, j), q) in m.nonzero_entries() {
                    next.push((r * d + i, c0 * d + j, poly.mul(q)));
                }
            }
            entries = next;
        }
        let inv = p.inverse();
        for (r, k, poly) in entries {
            out.add_to(r, act_on_index(&inv, d, k), &poly);
        }
    }
    Ok(out)
}

/// Contraction of the last tensor slot of a `d^n`-dimensional matrix.
pub fn partial_trace_matrix(m: &PolyMatrix, d: usize, n: usize) -> Result<PolyMatrix> {
    if n == 0 || d.checked_pow(n as u32) != Some(m.dim()) {
        return Err(TciError::DimensionMismatch(format!(
            "matrix of dimension {} is not d^n with d={d}, n={n}",
            m.dim()
        )));
    }
    let mut out = PolyMatrix::zero(m.dim() / d);
    for (&(r, c), p) in m.nonzero_entries() {
        if r % d == c % d {
            out.add_to(r / d, c / d, p);
        }
    }
    Ok(out)
}

fn random_assignment(vars: impl Iterator<Item = u32>, d: usize, seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut asg = Assignment::generic();
    for v in vars {
        let rows = (0..d)
            .map(|_| (0..d).map(|_| rational::int(rng.random_range(-4..=4))).collect())
            .collect();
        asg.set(v, MatrixValue::Concrete(rows));
    }
    asg
}

/// True iff `a` vanishes on all `d × d` matrices, with `λ` read as `d`.
///
/// A few random integer evaluations run first; a nonzero value there settles
/// the question. Otherwise the generic evaluation decides.
pub fn is_identity(a: &TwistedElement, d: usize) -> Result<bool> {
    let a = a.specialize_lambda(d as i64);
    for seed in 0..2 {
        let asg = random_assignment(a.variables().into_iter(), d, seed);
        if !evaluate(&a, &asg, d)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(evaluate(&a, &Assignment::generic(), d)?.is_zero())
}

/// True iff `Σ c_σ P_σ = 0` on `(Q^d)^{⊗m}`.
pub fn group_operator_is_zero(g: &GroupAlgebraElement, d: usize) -> Result<bool> {
    let dim = checked_dim(d, g.degree())?;
    let terms: Vec<(&Permutation, &Rational)> = g.iter().collect();
    let mut column: HashMap<usize, Rational> = HashMap::new();
    for col in 0..dim {
        column.clear();
        for (p, c) in &terms {
            *column.entry(act_on_index(p, d, col)).or_insert_with(rational::zero) += *c;
        }
        if column.values().any(|v| !num_traits::Zero::is_zero(v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Identity test for multilinear elements through their permutation encoding.
///
/// The element's arity plus its number of variables fixes the encoding context.
pub fn is_identity_multilinear(a: &TwistedElement, d: usize) -> Result<bool> {
    let k = a.variables().into_iter().max().unwrap_or(0) as usize;
    let ctx = crate::interp::InterpContext::new(a.arity(), k)?;
    let g = crate::interp::encode(a, &ctx)?;
    group_operator_is_zero(&g, d)
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    use num_traits::Zero;
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rational::one() / rows[r][col].clone();
        let pivot_row: Vec<Rational> = rows[r].iter().map(|v| v * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

/// Dimension of the kernel of `Q[S_m] → End((Q^d)^{⊗m})`, computed exactly as
/// `m!` minus the rank of the Gram matrix `⟨P_σ, P_τ⟩ = d^{#cycles(σ⁻¹τ)}`.
pub fn operator_kernel_dimension(m: usize, d: usize) -> usize {
    let perms = Permutation::all(m);
    let gram: Vec<Vec<Rational>> = perms
        .iter()
        .map(|s| {
            let si = s.inverse();
            perms
                .iter()
                .map(|t| num_traits::pow(rational::int(d as i64), (&si * t).cycle_count()))
                .collect()
        })
        .collect();
    perms.len() - rank(gram)
}
