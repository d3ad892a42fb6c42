mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use tci_core::interp::{coset_antisymmetrizer, encode, interpret, interpret_perm, reduce_to_basic, replay};
use tci_core::json::{element_from_str, element_to_string};
use tci_core::matexval::{evaluate, partial_trace_matrix, Assignment, MultiPoly, Var};
use tci_core::rational;
use tci_core::symgroup::{parse_cycles, split_cycle_left, split_cycles, GroupAlgebraElement, Permutation};
use tci_core::twisted::TwistedElement;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|m| Just((0..m).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn same_degree(m: usize) -> impl Strategy<Value = Permutation> {
    Just((0..m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=7usize).prop_flat_map(|m| (same_degree(m), same_degree(m), same_degree(m)))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..2, 0u16..2, 0u16..2, -3i64..=3), 0..4).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (mat, row, col, c)| {
            acc.add(&MultiPoly::var(Var { mat, row, col }).scale(&rational::int(c)))
                .add(&MultiPoly::constant(rational::int(c)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutations_form_a_group((p, q, r) in triple()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p * &p.inverse()).is_identity());
        prop_assert_eq!((&p * &q).sign(), p.sign() * q.sign());
    }

    #[test]
    fn cycle_notation_round_trips(p in permutation(9)) {
        let text = p.to_string();
        prop_assert_eq!(parse_cycles(p.degree(), &text).unwrap(), p);
    }

    #[test]
    fn splits_recompose(p in permutation(8), mask in 0u32..256) {
        let a: Vec<usize> = (0..p.degree()).filter(|i| mask & (1 << i) != 0).collect();
        prop_assert_eq!(split_cycles(&p, &a).recompose(), p.clone());
        prop_assert_eq!(split_cycle_left(&p, &a).recompose(), p);
    }

    #[test]
    fn group_algebra_is_associative((p, q, r) in triple(), c in -3i64..=3) {
        let m = p.degree();
        let a = GroupAlgebraElement::from_perm(p).add(&GroupAlgebraElement::one(m)).unwrap();
        let b = GroupAlgebraElement::from_perm(q).scale(&rational::int(c));
        let g = GroupAlgebraElement::from_perm(r).sub(&GroupAlgebraElement::one(m)).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().mul(&g).unwrap(), a.mul(&b.mul(&g).unwrap()).unwrap());
    }

    #[test]
    fn polynomials_form_a_ring(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn twisted_product_is_associative(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&mut rng, n, true);
        let b = random_element(&mut rng, n, true);
        let c = random_element(&mut rng, n, true);
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&TwistedElement::unit(n)).unwrap(), a);
    }

    #[test]
    fn json_round_trip_is_exact(seed in any::<u64>(), n in 0usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&mut rng, n, true);
        let s = element_to_string(&a, false);
        let b = element_from_str(&s).unwrap();
        prop_assert_eq!(element_to_string(&b, false), s);
        prop_assert_eq!(b, a);
    }

    #[test]
    fn encode_inverts_interpret(seed in any::<u64>(), m in 1usize..=6, n_raw in 0usize..=6) {
        let n = n_raw.min(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_multilinear(&mut rng, n, m - n);
        let c = ctx(n, m - n);
        let g = encode(&a, &c).unwrap();
        prop_assert_eq!(interpret(&g, &c).unwrap(), a);
    }

    #[test]
    fn deduction_rules_hold(p in permutation(5), n_raw in 0usize..=5) {
        let n = n_raw.min(p.degree());
        prop_assert!(check_rules(n, p.degree() - n, &p).is_ok());
    }

    #[test]
    fn partial_trace_matches_contraction(seed in any::<u64>(), n in 1usize..=3, d in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&mut rng, n, true).specialize_lambda(d as i64);
        let asg = Assignment::generic();
        let lhs = evaluate(&a.partial_trace().unwrap().specialize_lambda(d as i64), &asg, d).unwrap();
        let rhs = partial_trace_matrix(&evaluate(&a, &asg, d).unwrap(), d, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn certificates_replay_to_their_target(seed in any::<u64>(), m in 1usize..=7, n_raw in 0usize..=7, d_raw in 0usize..=3) {
        let n = n_raw.min(m);
        let d = d_raw.min(m - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = random_perm(&mut rng, m);
        let cset = random_subset(&mut rng, m, d + 1);
        let c = ctx(n, m - n);
        let cert = reduce_to_basic(&sigma, &cset, &c, d).unwrap();
        let expected = interpret(&coset_antisymmetrizer(&sigma, &cset).unwrap(), &c).unwrap();
        prop_assert_eq!(replay(&cert).unwrap(), expected);
    }

    #[test]
    fn interpretation_is_injective_on_basis(p in permutation(5), q in permutation(5), n_raw in 0usize..=5) {
        prop_assume!(p.degree() == q.degree() && p != q);
        let n = n_raw.min(p.degree());
        let c = ctx(n, p.degree() - n);
        prop_assert_ne!(interpret_perm(&p, &c).unwrap(), interpret_perm(&q, &c).unwrap());
    }
}
