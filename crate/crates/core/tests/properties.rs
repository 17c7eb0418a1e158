mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use totalbetti::algebra::{Field, Monomial, MonomialOrder, Polynomial, PrimeField, Rationals};
use totalbetti::complex::{
    euler_characteristic, homology_lengths, tensor_square, AdamsSquares, ChainComplex, ComplexInvolution,
};
use totalbetti::frobenius::{dutta_estimate, frobenius_twist};
use totalbetti::graded::{koszul_complex, minimal_free_resolution, BettiTable, GradedRing};
use totalbetti::groebner::{apply_columns, syzygies_of, FreeVector, LaurentPoly};

use common::fp;

fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn prime() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![2u64, 3, 5, 7, 101, 32003, 2147483647]).prop_map(fp)
}

fn monomial3() -> impl Strategy<Value = Monomial> {
    prop::array::uniform3(0u32..4).prop_map(|e| Monomial::from_exponents(&e))
}

fn poly3(field: PrimeField) -> impl Strategy<Value = Polynomial<PrimeField>> {
    prop::collection::vec((monomial3(), -50i64..50), 0..6).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(m, c)| (m, field.from_i64(c)));
        Polynomial::from_terms(field, 3, MonomialOrder::DegRevLex, terms)
    })
}

/// Two or three random homogeneous forms in x, y, z over F_101.
fn random_ideal(seed: u64) -> Vec<Polynomial<PrimeField>> {
    let mut rng = rng_from(seed);
    let n = 2 + (seed % 2) as usize;
    (0..n)
        .map(|k| loop {
            let f = common::random_form(&mut rng, fp(101), 3, 1 + ((seed >> k) % 3) as u32);
            if !f.is_zero() {
                break f;
            }
        })
        .collect()
}

fn ring_of(gens: Vec<Polynomial<PrimeField>>) -> std::sync::Arc<GradedRing<PrimeField>> {
    let names = ["x", "y", "z"].map(String::from).to_vec();
    GradedRing::new(fp(101), names, gens).unwrap()
}

fn random_resolution(seed: u64) -> ChainComplex<PrimeField> {
    let m = common::random_finite_module(&mut rng_from(seed));
    minimal_free_resolution(&m, 6).unwrap().complex
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_axioms(field in prime(), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let (a, b, c) = (field.from_i64(a), field.from_i64(b), field.from_i64(c));
        prop_assert_eq!(field.add(&a, &b), field.add(&b, &a));
        prop_assert_eq!(field.mul(&a, &field.mul(&b, &c)), field.mul(&field.mul(&a, &b), &c));
        prop_assert_eq!(
            field.mul(&a, &field.add(&b, &c)),
            field.add(&field.mul(&a, &b), &field.mul(&a, &c))
        );
        prop_assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
        if !field.is_zero(&a) {
            prop_assert!(field.is_one(&field.mul(&a, &field.inv(&a).unwrap())));
        } else {
            prop_assert!(field.inv(&a).is_err());
        }
        prop_assert_eq!(field.pow(&a, field.characteristic()), a);
    }

    #[test]
    fn rational_field_axioms(a in (-99i64..99, 1i64..30), b in (-99i64..99, 1i64..30)) {
        let q = Rationals;
        let x = q.from_ratio(&BigInt::from(a.0), &BigInt::from(a.1)).unwrap();
        let y = q.from_ratio(&BigInt::from(b.0), &BigInt::from(b.1)).unwrap();
        prop_assert_eq!(q.mul(&x, &y), q.mul(&y, &x));
        prop_assert_eq!(q.sub(&q.add(&x, &y), &y), x.clone());
        if !q.is_zero(&y) {
            prop_assert_eq!(q.mul(&q.div(&x, &y).unwrap(), &y), x);
        }
        prop_assert!(q.from_ratio(&BigInt::one(), &BigInt::zero()).is_err());
    }

    #[test]
    fn polynomial_ring_laws(f in poly3(fp(101)), g in poly3(fp(101)), h in poly3(fp(101))) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g * &h), &(&f * &g) * &h);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        if let (Some(a), Some(b)) = (f.degree(), g.degree()) {
            prop_assert_eq!((&f * &g).degree(), Some(a + b));
        }
    }

    #[test]
    fn homogeneous_degrees_add(seed in any::<u64>(), a in 1u32..4, b in 1u32..4) {
        let mut rng = rng_from(seed);
        let f = common::random_form(&mut rng, fp(7), 3, a);
        let g = common::random_form(&mut rng, fp(7), 3, b);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!((&f * &g).homogeneous_degree(), Some(a + b));
    }

    #[test]
    fn monomial_orders_are_term_orders(a in monomial3(), b in monomial3(), c in monomial3()) {
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let ab = order.cmp(&a, &b);
            prop_assert_eq!(ab.reverse(), order.cmp(&b, &a));
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert!(order.cmp(&Monomial::one(3), &a) != std::cmp::Ordering::Greater);
            if order.cmp(&b, &c) == ab && ab != std::cmp::Ordering::Equal {
                prop_assert_eq!(order.cmp(&a, &c), ab);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normal_form_is_idempotent_and_linear(seed in any::<u64>(), f in poly3(fp(101)), g in poly3(fp(101))) {
        let r = ring_of(random_ideal(seed));
        let nf = r.reduce(&f);
        prop_assert_eq!(r.reduce(&nf), nf.clone());
        prop_assert_eq!(r.reduce(&(&f + &g)), &nf + &r.reduce(&g));
        let c = fp(101).from_i64(17);
        prop_assert_eq!(r.reduce(&f.scale(&c)), nf.scale(&c));
        let naive = common::naive_groebner(r.ideal_generators());
        prop_assert_eq!(common::naive_reduce(&f, &naive), nf);
    }

    #[test]
    fn groebner_basis_ignores_generator_order(seed in any::<u64>()) {
        let gens = random_ideal(seed);
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng_from(seed ^ 1));
        shuffled.reverse();
        let a = ring_of(gens.clone()).ideal_gb().generators();
        let b = ring_of(shuffled).ideal_gb().generators();
        prop_assert_eq!(a.clone(), b);
        let polys: Vec<_> = a.into_iter().map(|v| v.components[0].clone()).collect();
        prop_assert_eq!(polys, common::naive_groebner(&gens));
    }

    #[test]
    fn hilbert_function_matches_dense_linear_algebra(seed in any::<u64>()) {
        let gens = random_ideal(seed);
        let r = ring_of(gens.clone());
        let m = totalbetti::graded::ModulePresentation::cyclic(r, Vec::new()).unwrap();
        for t in 0..6u32 {
            prop_assert_eq!(m.hilbert_function(t as i64), common::dense_hilbert(fp(101), 3, &gens, t) as u64);
        }
    }

    #[test]
    fn syzygies_are_killed_by_the_map(seed in any::<u64>()) {
        let r = ring_of(Vec::new());
        let amb = r.ambient(vec![0]);
        let cols: Vec<_> = random_ideal(seed).into_iter().map(FreeVector::from_polynomial).collect();
        let syz = syzygies_of(&amb, &cols).unwrap();
        prop_assert!(!syz.is_empty());
        for s in syz.generators() {
            prop_assert!(apply_columns(&amb, &cols, &s).is_zero());
        }
    }

    #[test]
    fn squares_are_complexes_and_swap_is_a_chain_involution(seed in any::<u64>()) {
        let f = random_resolution(seed);
        let sq = AdamsSquares::new(&f).unwrap();
        for c in [&sq.tensor.complex, &sq.sym, &sq.wedge] {
            let rebuilt = ChainComplex::new(c.ring().clone(), c.start(), c.modules().to_vec(), c.differentials().to_vec());
            prop_assert!(rebuilt.is_ok());
        }
        let tau = ComplexInvolution::of(&tensor_square(&f).unwrap());
        prop_assert!(tau.is_involution());
        prop_assert!(tau.commutes_with(&sq.tensor));
        prop_assert!(sq.inclusion_is_isomorphism());
    }

    #[test]
    fn frobenius_twists_compose(seed in any::<u64>()) {
        let f = random_resolution(seed);
        prop_assume!(f.ring().characteristic() < 100);
        let once = frobenius_twist(&frobenius_twist(&f, 1).unwrap(), 1).unwrap();
        let twice = frobenius_twist(&f, 2).unwrap();
        prop_assert_eq!(once.modules(), twice.modules());
        prop_assert_eq!(once.differentials(), twice.differentials());
    }

    #[test]
    fn kunz_scaling_and_dutta_denominators(seed in any::<u64>()) {
        let f = random_resolution(seed);
        let p = f.ring().characteristic();
        prop_assume!(p < 100);
        let d = f.ring().dimension() as u32;
        let chi = euler_characteristic(&f).unwrap();
        let seq = dutta_estimate(&f, 1).unwrap();
        prop_assert_eq!(seq.euler.clone(), vec![chi, chi * (p as i64).pow(d)]);
        let scale = BigInt::from(p).pow(d);
        for t in &seq.terms {
            prop_assert!((&scale % t.denom()).is_zero());
        }
        prop_assert!(seq.is_constant() && seq.is_positive());
    }

    #[test]
    fn euler_characteristic_is_additive_and_odd_under_shift(a in any::<u64>(), b in any::<u64>(), k in -2i64..3) {
        let f = random_resolution(a);
        let r = f.ring().clone();
        let mut rng = rng_from(b);
        let forms: Vec<_> = (0..r.nvars()).map(|i| common::random_form(&mut rng, r.field(), r.nvars(), 1 + i as u32)).collect();
        let m = totalbetti::graded::ModulePresentation::cyclic(r, forms).unwrap();
        prop_assume!(m.length().finite().is_some());
        let g = minimal_free_resolution(&m, 6).unwrap().complex.shift(k);
        let (cf, cg) = (euler_characteristic(&f).unwrap(), euler_characteristic(&g).unwrap());
        prop_assert_eq!(euler_characteristic(&f.direct_sum(&g)).unwrap(), cf + cg);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(euler_characteristic(&f.shift(k)).unwrap(), sign * cf);
        prop_assert_eq!(cg, sign * m.length().finite().unwrap() as i64);
    }

    #[test]
    fn pruning_removes_trivial_summands(seed in any::<u64>(), i in 1i64..3, twist in 0i64..4) {
        let f = random_resolution(seed);
        let padded = f.direct_sum(&ChainComplex::trivial(f.ring().clone(), i, twist));
        prop_assert!(!padded.is_minimal());
        let pruned = padded.prune().trimmed();
        prop_assert!(pruned.is_minimal());
        prop_assert_eq!(BettiTable::from_complex(&pruned), BettiTable::from_complex(&f));
        prop_assert_eq!(homology_lengths(&pruned).unwrap(), homology_lengths(&f).unwrap());
    }

    #[test]
    fn graded_betti_numbers_give_the_hilbert_numerator(seed in any::<u64>()) {
        let m = common::random_finite_module(&mut rng_from(seed));
        let res = minimal_free_resolution(&m, 6).unwrap();
        let mut acc = LaurentPoly::zero();
        for i in res.complex.degrees() {
            for &t in &res.complex.module(i).twists {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                acc = acc.add(&LaurentPoly::new(t, vec![sign]));
            }
        }
        prop_assert_eq!(acc, m.hilbert_numerator());
    }

    #[test]
    fn koszul_on_variables_is_exact_with_alternating_ranks(n in 1usize..4, p in prop::sample::select(vec![3u64, 5, 101])) {
        let names = ["x", "y", "z"];
        let r = GradedRing::polynomial_ring(fp(p), &names[..n]).unwrap();
        let vars: Vec<_> = (0..n).map(|i| r.var(i)).collect();
        let k = koszul_complex(&r, &vars).unwrap();
        let alt: i64 = k.ranks().iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        prop_assert_eq!(alt, 0);
        let h = homology_lengths(&k).unwrap();
        prop_assert_eq!(h.get(0), 1);
        prop_assert_eq!(h.total(), 1);
    }
}
