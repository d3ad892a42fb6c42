mod common;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use tci_core::chident::{ch, ch_recursive, f_kd, frak_t, recursion_step, sigma_j, sigma_j_by_permutations};
use tci_core::interp::{encode, interpret, interpret_perm};
use tci_core::matexval::{
    evaluate, evaluate_scalar, generic_matrix, is_identity, is_identity_multilinear, operator_kernel_dimension,
    perm_operator, Assignment, MatrixValue, MultiPoly, PolyMatrix,
};
use tci_core::rational::{self, Rational};
use tci_core::symgroup::{GroupAlgebraElement, Permutation};
use tci_core::tracering::{TraceScalar, Word};
use tci_core::twisted::{restitute, TensorWord, TwistedElement};

fn p(i: usize) -> TraceScalar {
    tr(Word::power(1, i))
}

#[test]
fn sigma_three_by_hand() {
    let expected = p(1)
        .pow(3)
        .sub(&p(1).mul(&p(2)).scale(&rational::int(3)))
        .add(&p(3).scale(&rational::int(2)))
        .scale(&rational::frac(1, 6));
    assert_eq!(sigma_j(3), expected);
    assert_eq!(sigma_j(4), sigma_j_by_permutations(4));
    assert_eq!(sigma_j(0), TraceScalar::one());
}

#[test]
fn frak_t_three_three() {
    // T_{3,0,0} + T_{2,1,0} + T_{1,1,1}: 3 + 6 + 1 tensors
    let t = frak_t(3, 3);
    assert_eq!(t.len(), 10);
    let w = TensorWord(vec![Word::var(1), Word::var(1), Word::var(1)]);
    assert_eq!(t.coefficient(&w, &Permutation::identity(3)), TraceScalar::one());
    let expected = tensor(vec![Word::power(1, 2), Word::one()])
        .add(&tensor(vec![Word::one(), Word::power(1, 2)]))
        .unwrap()
        .add(&tensor(vec![x(), x()]))
        .unwrap();
    assert_eq!(frak_t(2, 2), expected);
}

#[test]
fn f_top_degrees_restitute_to_cayley_hamilton() {
    for d in 1..=3usize {
        // x^d + Σ (−1)^i σ_i x^{d−i}, times d!
        let mut poly = TwistedElement::zero(1);
        for i in 0..=d {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            poly.add_assign(
                &tensor(vec![Word::power(1, d - i)]).scale_scalar(&sigma_j(i).scale(&rational::int(sign))),
            )
            .unwrap();
        }
        assert_eq!(restitute(&f_kd(d, d).unwrap()), poly.scale(&rational::factorial(d)));
        assert!(is_identity(&poly, d).unwrap());

        let mut scalar = TraceScalar::zero();
        for i in 0..=d {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            scalar.add_assign(&sigma_j(i).mul(&p(d + 1 - i)).scale(&rational::int(sign)));
        }
        let restituted = restitute(&f_kd(d + 1, d).unwrap()).as_scalar().unwrap();
        assert_eq!(restituted, scalar.scale(&-rational::factorial(d)), "d = {d}");
    }
}

#[test]
fn first_recursion_step_gives_c12() {
    let a = GroupAlgebraElement::antisymmetrizer(3, &[0, 1, 2]).unwrap();
    let step = recursion_step(&TwistedElement::from_group_algebra(&a), 0)
        .unwrap()
        .specialize_lambda(2);
    assert_eq!(step, ch(1, 2).unwrap());
    assert_eq!(ch_recursive(1, 2).unwrap(), ch(1, 2).unwrap());
}

#[test]
fn interpreting_the_antisymmetrizer() {
    for d in 1..=3usize {
        for k in 0..=d + 1 {
            let a = GroupAlgebraElement::antisymmetrizer(d + 1, &(0..=d).collect::<Vec<_>>()).unwrap();
            let sign = rational::int(if k % 2 == 0 { 1 } else { -1 });
            assert_eq!(interpret(&a, &ctx(d + 1 - k, k)).unwrap(), f_kd(k, d).unwrap().scale(&sign));
        }
    }
    assert!(interpret(&GroupAlgebraElement::zero(3), &ctx(1, 2)).unwrap().is_zero());
}

#[test]
fn c12_vanishes_on_a_concrete_matrix() {
    let m = vec![
        vec![rational::int(1), rational::int(2)],
        vec![rational::int(3), rational::int(4)],
    ];
    let asg = Assignment::generic().with(1, MatrixValue::Concrete(m));
    assert!(evaluate(&ch(1, 2).unwrap(), &asg, 2).unwrap().is_zero());
    assert!(evaluate(&ch(2, 2).unwrap(), &Assignment::generic(), 2).unwrap().is_zero());
    assert_eq!(evaluate(&TwistedElement::unit(2), &asg, 3).unwrap(), PolyMatrix::identity(9));
    assert!(is_identity(&TwistedElement::zero(2), 2).unwrap());
}

#[test]
fn single_permutation_is_never_an_identity() {
    for d in 1..=3 {
        let e = interpret_perm(&perm(3, "(1,2)"), &ctx(2, 1)).unwrap();
        assert!(!is_identity_multilinear(&e, d).unwrap());
        assert!(!is_identity(&e, d).unwrap());
    }
}

fn partitions(m: usize, max: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=m.min(max)).rev() {
        for mut rest in partitions(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn hook_dimension(shape: &[usize]) -> u64 {
    let m: usize = shape.iter().sum();
    let mut hooks = 1u64;
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= (arm + leg + 1) as u64;
        }
    }
    (1..=m as u64).product::<u64>() / hooks
}

#[test]
fn kernel_dimension_matches_hook_formula() {
    for m in 1..=5 {
        for d in 1..=3 {
            let expected: u64 = partitions(m, m)
                .iter()
                .filter(|s| s.len() > d)
                .map(|s| hook_dimension(s).pow(2))
                .sum();
            assert_eq!(operator_kernel_dimension(m, d) as u64, expected, "m = {m}, d = {d}");
        }
    }
}

#[test]
fn degree_k_identities_in_d_plus_one_minus_k_tensors_are_unique() {
    for d in 1..=3 {
        assert_eq!(operator_kernel_dimension(d + 1, d), 1);
    }
}

fn rational_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let d = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..d).map(|j| rational::int((i == j) as i64)));
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| a[r][col] != rational::zero())?;
        a.swap(col, pivot);
        let inv = rational::one() / a[col][col].clone();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..d {
            if r != col {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[d..].to_vec()).collect())
}

fn const_matrix(m: &[Vec<Rational>]) -> PolyMatrix {
    PolyMatrix::from_rationals(m).unwrap()
}

#[test]
fn evaluation_is_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let d = rng.random_range(1..=3usize);
        let n = rng.random_range(1..=2usize);
        let (g, gi) = loop {
            let g: Vec<Vec<Rational>> = (0..d)
                .map(|_| (0..d).map(|_| rational::int(rng.random_range(-2..=2))).collect())
                .collect();
            if let Some(gi) = rational_inverse(&g) {
                break (g, gi);
            }
        };
        let a = random_element(&mut rng, n, false);
        let xs: Vec<Vec<Vec<Rational>>> = (0..2)
            .map(|_| {
                (0..d)
                    .map(|_| (0..d).map(|_| rational::int(rng.random_range(-3..=3))).collect())
                    .collect()
            })
            .collect();
        let plain = Assignment::generic()
            .with(1, MatrixValue::Concrete(xs[0].clone()))
            .with(2, MatrixValue::Concrete(xs[1].clone()));
        let conj = |x: &Vec<Vec<Rational>>| {
            const_matrix(&g)
                .mul(&const_matrix(x))
                .unwrap()
                .mul(&const_matrix(&gi))
                .unwrap()
                .to_rationals()
                .unwrap()
        };
        let moved = Assignment::generic()
            .with(1, MatrixValue::Concrete(conj(&xs[0])))
            .with(2, MatrixValue::Concrete(conj(&xs[1])));
        let mut gn = PolyMatrix::identity(1);
        let mut gin = PolyMatrix::identity(1);
        for _ in 0..n {
            gn = gn.kron(&const_matrix(&g));
            gin = gin.kron(&const_matrix(&gi));
        }
        let lhs = evaluate(&a, &moved, d).unwrap();
        let rhs = gn.mul(&evaluate(&a, &plain, d).unwrap()).unwrap().mul(&gin).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn interpretation_pairs_with_tensor_slots_by_cycles() {
    // tr(π_n(T_τ) · (Y_1 ⊗ … ⊗ Y_n)) = Π over cycles of τ of tr(Z_i Z_τ(i) …)
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let m = rng.random_range(1..=4usize);
        let n = rng.random_range(0..=m);
        let k = m - n;
        let d = m;
        let tau = random_perm(&mut rng, m);
        let mats: Vec<Vec<Vec<Rational>>> = (0..m)
            .map(|_| {
                (0..d)
                    .map(|_| (0..d).map(|_| rational::int(rng.random_range(-2..=2))).collect())
                    .collect()
            })
            .collect();
        // points 0..n are the Y's, points n.. carry x1..xk
        let mut asg = Assignment::generic();
        for j in 0..k {
            asg.set(j as u32 + 1, MatrixValue::Concrete(mats[n + j].clone()));
        }
        let t = interpret_perm(&tau, &ctx(n, k)).unwrap();
        let mut ys = PolyMatrix::identity(1);
        for mat in &mats[..n] {
            ys = ys.kron(&const_matrix(mat));
        }
        let lhs = evaluate(&t, &asg, d).unwrap().mul(&ys).unwrap().trace();
        let mut rhs = MultiPoly::one();
        for cycle in tau.cycles() {
            let mut prod = PolyMatrix::identity(d);
            for &i in &cycle {
                prod = prod.mul(&const_matrix(&mats[i])).unwrap();
            }
            rhs = rhs.mul(&prod.trace());
        }
        assert_eq!(lhs, rhs, "τ = {tau}, n = {n}");
    }
}

#[test]
fn generic_matrices_and_operators() {
    let g = generic_matrix(1, 1);
    assert_eq!(g.dim(), 1);
    let swap = perm_operator(&perm(2, "(1,2)"), 2).unwrap();
    assert_eq!(swap.mul(&swap).unwrap(), PolyMatrix::identity(4));
    let a = GroupAlgebraElement::antisymmetrizer(3, &[0, 1, 2]).unwrap();
    let mut sum = PolyMatrix::zero(8);
    for (q, c) in a.iter() {
        sum = sum
            .add(&perm_operator(q, 2).unwrap().scale_poly(&MultiPoly::constant(c.clone())))
            .unwrap();
    }
    assert!(sum.is_zero());
}

#[test]
fn scalar_evaluation_of_traces() {
    let s = tr(Word(vec![1, 2])).sub(&tr(Word(vec![2, 1])));
    assert!(evaluate_scalar(&s, &Assignment::generic(), 2).unwrap().is_zero());
}

#[test]
fn encode_worked_example_and_unit() {
    let a = TwistedElement::term_left(
        TraceScalar::one(),
        &perm(2, "(1,2)"),
        &TensorWord(vec![Word::one(), Word::var(1)]),
    );
    assert_eq!(encode(&a, &ctx(2, 1)).unwrap(), GroupAlgebraElement::from_perm(perm(3, "(2,1,3)")));
    assert_eq!(encode(&TwistedElement::unit(3), &ctx(3, 0)).unwrap(), GroupAlgebraElement::one(3));
}
