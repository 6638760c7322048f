//! Property tests for the algebraic invariants of rings, series and checkers.

use std::sync::Arc;

use mn_core::harness::{coefficient_extraction, lift_fusible_decomposition, TruncatedUniverse};
use mn_core::ideal::{enumerate_ideals, quotient_set, IdealKind, IdealSet};
use mn_core::props::{is_in_over, is_sa_over, zero_divisor_sets};
use mn_core::ring::{check_ring_axioms, ring_make, units};
use mn_core::series::{
    embed_scalar, series_add, series_make, series_mul, x_w_pairs, AutomorphismSpec, SigmaSpec, TauSpec,
    TwistSpec,
};
use mn_core::{Elem, FiniteRing, GroupElement, OrderedGroup, RingSpec, Series, TwistSystem};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn ring(spec: RingSpec) -> Arc<FiniteRing> {
    Arc::new(ring_make(&spec).unwrap())
}

fn small_ring_spec() -> impl Strategy<Value = RingSpec> {
    let leaf = prop_oneof![(2usize..=6).prop_map(RingSpec::zn), Just(RingSpec::gf4())];
    prop_oneof![
        leaf.clone(),
        (leaf.clone(), (2usize..=3).prop_map(RingSpec::zn)).prop_map(|(a, b)| RingSpec::product(a, b)),
        (2usize..=4).prop_map(|n| RingSpec::trivial_extension(RingSpec::zn(n))),
    ]
}

/// The twist systems shipped as fixtures, all associative.
fn twists() -> Vec<Arc<TwistSystem>> {
    let z4 = ring(RingSpec::zn(4));
    let gf4 = ring(RingSpec::gf4());
    let klein = ring(RingSpec::product(RingSpec::zn(2), RingSpec::zn(2)));
    let frob = SigmaSpec { generator: Some(AutomorphismSpec::Named("frobenius".into())), generators: None };
    let plane = SigmaSpec {
        generator: None,
        generators: Some(vec![AutomorphismSpec::Named("frobenius".into()), AutomorphismSpec::Named("identity".into())]),
    };
    let bilinear = TauSpec::UnitPower {
        unit: 3,
        exponent_rule: mn_core::series::ExponentRule::Bilinear(vec![vec![1, 0], vec![1, 1]]),
        overrides: vec![],
    };
    vec![
        Arc::new(TwistSystem::trivial(&z4, OrderedGroup::Integers)),
        Arc::new(TwistSystem::new(&z4, OrderedGroup::Integers, TwistSpec { sigma: SigmaSpec::identity(), tau: TauSpec::unit_power(3) }).unwrap()),
        Arc::new(TwistSystem::new(&gf4, OrderedGroup::Integers, TwistSpec { sigma: frob, tau: TauSpec::one() }).unwrap()),
        Arc::new(TwistSystem::trivial(&klein, OrderedGroup::Integers)),
        Arc::new(TwistSystem::new(&gf4, OrderedGroup::Lex(2), TwistSpec { sigma: plane, tau: TauSpec::one() }).unwrap()),
        Arc::new(TwistSystem::new(&z4, OrderedGroup::Lex(2), TwistSpec { sigma: SigmaSpec::identity(), tau: bilinear }).unwrap()),
    ]
}

fn series_in(t: &Arc<TwistSystem>) -> impl Strategy<Value = Series> {
    let n = t.ring().size();
    let k = t.group().rank();
    let t = t.clone();
    prop::collection::btree_map(prop::collection::vec(-3i32..=3, k), 0..n, 0..4).prop_map(move |m| {
        series_make(&t, m.into_iter().map(|(x, r)| (GroupElement::from(x), r))).unwrap()
    })
}

fn twist_and_series(count: usize) -> impl Strategy<Value = (Arc<TwistSystem>, Vec<Series>)> {
    (0..twists().len()).prop_flat_map(move |i| {
        let t = twists().swap_remove(i);
        (Just(t.clone()), prop::collection::vec(series_in(&t), count))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructed_rings_satisfy_axioms(spec in small_ring_spec()) {
        let r = ring(spec);
        prop_assert!(check_ring_axioms(&r).passed());
    }

    #[test]
    fn zero_divisor_partition(spec in small_ring_spec()) {
        let r = ring(spec);
        let zd = zero_divisor_sets(&r);
        prop_assert_eq!(zd.left.union(&zd.left_regular), r.full_set());
        prop_assert!(zd.left.intersection(&zd.left_regular).is_empty());
        let u = units(&r);
        prop_assert!(u.is_subset(&zd.left_regular.intersection(&zd.right_regular)));
    }

    #[test]
    fn series_form_a_ring((t, s) in twist_and_series(3)) {
        let (f, g, h) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(series_add(f, g).unwrap(), series_add(g, f).unwrap());
        prop_assert!(series_add(f, &f.neg()).unwrap().is_zero());
        let fg_h = series_mul(&series_mul(f, g).unwrap(), h).unwrap();
        let f_gh = series_mul(f, &series_mul(g, h).unwrap()).unwrap();
        prop_assert_eq!(fg_h, f_gh);
        let left = series_mul(f, &series_add(g, h).unwrap()).unwrap();
        let right = series_add(&series_mul(f, g).unwrap(), &series_mul(f, h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = embed_scalar(&t, t.ring().one()).unwrap();
        prop_assert_eq!(&series_mul(&one, f).unwrap(), f);
        prop_assert_eq!(&series_mul(f, &one).unwrap(), f);
    }

    #[test]
    fn scalar_embedding_is_a_homomorphism(i in 0usize..6, a in 0usize..4, b in 0usize..4) {
        let t = twists().swap_remove(i);
        let (a, b) = (a % t.ring().size(), b % t.ring().size());
        let r = t.ring();
        let prod = series_mul(&embed_scalar(&t, a).unwrap(), &embed_scalar(&t, b).unwrap()).unwrap();
        prop_assert_eq!(prod, embed_scalar(&t, r.mul(a, b)).unwrap());
    }

    #[test]
    fn x_w_pairs_reassemble_the_product((t, s) in twist_and_series(2)) {
        let (f, g) = (&s[0], &s[1]);
        let fg = series_mul(f, g).unwrap();
        let r = t.ring();
        for (w, c) in fg.terms() {
            let pairs = x_w_pairs(f, g, w).unwrap();
            prop_assert!(pairs.windows(2).all(|p| p[0].0 < p[1].0 && p[0].1 > p[1].1));
            let sum = pairs.iter().fold(0, |acc, (x, y)| {
                r.add(acc, mn_core::series::term_product(&t, x, f.coeff(x), y, g.coeff(y)))
            });
            prop_assert_eq!(sum, c);
        }
    }

    #[test]
    fn ideal_verdicts_ignore_enumeration_order(spec in small_ring_spec(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let r = ring(spec);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut right = enumerate_ideals(&r, IdealKind::Right).unwrap();
        let base = is_in_over(&r, &right).verdict;
        right.shuffle(&mut rng);
        prop_assert_eq!(is_in_over(&r, &right).verdict, base);
        let mut two = enumerate_ideals(&r, IdealKind::Twosided).unwrap();
        let base = is_sa_over(&r, &two).verdict;
        two.shuffle(&mut rng);
        prop_assert_eq!(is_sa_over(&r, &two).verdict, base);
    }

    #[test]
    fn quotients_are_antitone(xs in subsequence((0usize..16).collect::<Vec<_>>(), 0..6), extra in 0usize..16) {
        let r = ring(RingSpec::trivial_extension(RingSpec::zn(4)));
        let u = r.set_of(0..4);
        let small = r.set_of(xs.iter().copied());
        let mut big = small.clone();
        big.insert(extra);
        prop_assert!(quotient_set(&r, &u, &big).is_subset(&quotient_set(&r, &u, &small)));
        prop_assert!(u.is_subset(&quotient_set(&r, &u, &big)));
    }
}

fn z4_u(t: &Arc<TwistSystem>) -> IdealSet {
    IdealSet::classified(t.ring(), t.ring().set_of([0, 2]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn extraction_matches_oracle(i in 0usize..2, fc in prop::collection::vec(0usize..4, 3), gc in prop::collection::vec(0usize..4, 3)) {
        let t = twists().swap_remove(i);
        let mk = |c: &[Elem]| series_make(&t, c.iter().enumerate().map(|(x, &r)| (GroupElement::int(x as i32), r))).unwrap();
        let (f, g) = (mk(&fc), mk(&gc));
        let u = z4_u(&t);
        if series_mul(&f, &g).unwrap().coefficients_in(u.members()) {
            let trace = coefficient_extraction(&f, &g, &u).unwrap();
            prop_assert!(trace.agrees());
            prop_assert_eq!(trace.conclusion.len(), f.len() * g.len());
        } else {
            prop_assert!(coefficient_extraction(&f, &g, &u).is_err());
        }
    }

    #[test]
    fn fusible_lift_is_exact(i in prop::sample::select(vec![2usize, 3]), coeffs in prop::collection::vec(0usize..4, 3)) {
        let t = twists().swap_remove(i);
        let f = series_make(&t, coeffs.iter().enumerate().map(|(x, &r)| (GroupElement::int(x as i32), r))).unwrap();
        prop_assume!(!f.is_zero());
        let uni = TruncatedUniverse::new(&t, OrderedGroup::Integers.window(0, 2)).unwrap();
        let lift = lift_fusible_decomposition(&f, &uni).unwrap();
        prop_assert_eq!(series_add(&lift.g, &lift.h).unwrap(), f);
        prop_assert!(lift.certified());
    }
}
