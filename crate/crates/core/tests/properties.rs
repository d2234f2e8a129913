use egc_core::combinatorics::{compatible_flag, flags_equivalent, is_compatible, skew_props};
use egc_core::edelman_greene::{j_coefficient, j_oracle_eval, structure_violations, Case};
use egc_core::grothendieck::{g_eval, g_eval_enumerated};
use egc_core::ring::{eval_graham, eval_graham_normalized, ominus, ominus_unary, GrahamSum, DEFAULT_PRIME};
use egc_core::tableaux::{enumerate, merge, omega1_tableau, omega1_tableau_inverse, split};
use egc_core::{EnumSpec, EvaluationPoint, Flag, Fp, Partition, Permutation, Sign, SkewShape};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn flag_for(len: usize, lo: i64, hi: i64) -> impl Strategy<Value = Flag> {
    prop::collection::vec(lo..=hi, len).prop_map(|mut v| {
        v.sort_unstable();
        Flag::new(v).unwrap()
    })
}

/// A partition of size ≤ `n` with a compatible flag in `[lo, hi]`.
fn compatible_pair(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = (Partition, Flag)> {
    partition(n, n)
        .prop_filter("size bound", move |l| l.size() <= n)
        .prop_flat_map(move |l| (Just(l.clone()), flag_for(l.len(), lo, hi)))
        .prop_filter("compatible", |(l, f)| is_compatible(l, f).unwrap())
}

fn point(seed: u64, lo: i64, hi: i64) -> EvaluationPoint {
    EvaluationPoint::random(DEFAULT_PRIME, lo, hi, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n, any::<u64>(), -2i64..=2).prop_map(|(n, seed, base)| {
        use rand::seq::SliceRandom;
        let mut v: Vec<i64> = (base..base + n as i64).collect();
        v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Permutation::from_oneline(base, &v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn conjugation_is_an_involution(l in partition(5, 5)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn code_length_and_reduced_word(w in perm(6)) {
        let code_total: usize = w.code().values().sum();
        prop_assert_eq!(code_total, w.length());
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(&word), w.clone());
        prop_assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn vexillary_data_round_trips(w in perm(6)) {
        prop_assume!(w.is_vexillary());
        let csf = w.code_shape_flag().unwrap();
        let phi = compatible_flag(&csf.shape, &csf.flag).unwrap();
        prop_assert!(is_compatible(&csf.shape, &phi).unwrap());
        prop_assert!(flags_equivalent(&csf.shape, &phi, &csf.flag).unwrap());
        prop_assert_eq!(Permutation::from_shape_flag(&csf.shape, &phi).unwrap(), w.clone());
        prop_assert_eq!(w.shape().size(), w.length());
    }

    #[test]
    fn ominus_identities(a in 0u64..DEFAULT_PRIME, b in 0u64..DEFAULT_PRIME, bt in 1u64..DEFAULT_PRIME) {
        let (a, b, beta) = (Fp::new(a, DEFAULT_PRIME), Fp::new(b, DEFAULT_PRIME), Fp::new(bt, DEFAULT_PRIME));
        let zero = Fp::zero(DEFAULT_PRIME);
        prop_assume!(!(Fp::one(DEFAULT_PRIME) + beta * b).is_zero());
        prop_assume!(!(Fp::one(DEFAULT_PRIME) + beta * a).is_zero());
        prop_assert_eq!(ominus(a, a, beta).unwrap(), zero);
        prop_assert_eq!(ominus(a, zero, beta).unwrap(), a);
        let na = ominus_unary(a, beta).unwrap();
        prop_assert_eq!(ominus_unary(na, beta).unwrap(), a);
        // a ⊖ b = a ⊕ (⊖b) with u ⊕ v = u + v + βuv
        let nb = ominus_unary(b, beta).unwrap();
        prop_assert_eq!(ominus(a, b, beta).unwrap(), a + nb + beta * a * nb);
    }

    #[test]
    fn omega_on_points_is_an_involution(seed in any::<u64>()) {
        let pt = point(seed, -3, 3);
        prop_assert_eq!(pt.omega1().unwrap().omega1().unwrap(), pt);
    }

    #[test]
    fn split_merge_and_omega_round_trip((l, phi) in compatible_pair(4, -2, 2), pick in any::<prop::sample::Index>()) {
        let spec = EnumSpec::new(SkewShape::straight(l), Some(phi), Sign::Any, (-2, 2)).unwrap();
        let all: Vec<_> = enumerate(&spec).unwrap().collect();
        prop_assume!(!all.is_empty());
        let t = &all[pick.index(all.len())];
        let (m, p) = split(t).unwrap();
        prop_assert_eq!(&merge(&m, &p).unwrap(), t);
        prop_assert!(skew_props(&SkewShape::new(m.shape().outer().clone(), p.shape().inner().clone()).unwrap()).is_disconnected);
        prop_assert_eq!(&omega1_tableau_inverse(&omega1_tableau(t)), t);
    }

    #[test]
    fn dp_matches_enumeration(outer in partition(3, 3), inner in partition(2, 2), phi in flag_for(3, -1, 2), seed in any::<u64>()) {
        prop_assume!(outer.contains(&inner));
        let shape = SkewShape::new(outer, inner).unwrap();
        let pt = point(seed, 0, 1);
        let w = Some((-3, 4));
        for sign in [Sign::Any, Sign::Positive, Sign::NonPositive] {
            let a = g_eval(&shape, Some(&phi), sign, &pt, w).unwrap();
            let b = g_eval_enumerated(&shape, Some(&phi), sign, &pt, (-3, 4)).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn coefficients_are_graham_positive_and_match_oracle((l, phi) in compatible_pair(4, -3, 3), pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let subs = l.subpartitions();
        let rho = &subs[pick.index(subs.len())];
        let j = j_coefficient(&l, &phi, rho).unwrap();
        prop_assert!(structure_violations(&j, Case::of(&l, &phi)).is_empty());
        let pt = point(seed, -6, 6);
        prop_assert_eq!(eval_graham_normalized(&j, &pt).unwrap(), j_oracle_eval(&l, &phi, rho, &pt).unwrap());
    }

    #[test]
    fn graham_sums_round_trip_json_and_omega((l, phi) in compatible_pair(4, -3, 3), seed in any::<u64>()) {
        let pt = point(seed, -4, 4);
        let flipped = pt.omega1().unwrap();
        for rho in l.subpartitions() {
            let j = j_coefficient(&l, &phi, &rho).unwrap();
            prop_assert_eq!(GrahamSum::from_json(&j.to_json()).unwrap(), j.clone());
            prop_assert_eq!(j.omega1().omega1(), j.clone());
            prop_assert_eq!(eval_graham(&j.omega1(), &pt).unwrap(), eval_graham(&j, &flipped).unwrap());
        }
    }
}
