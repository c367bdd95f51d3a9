use proptest::prelude::*;
use sumhard::linear::{
    extend_to_segcontpnt, normalize_to_unit_interval, reduce_3sum_to_prime, reduce_prime_to_3sum,
    reduce_prime_to_eqdist, solve_3sum, solve_3sum_prime, solve_eqdist, solve_segcontpnt, verify_3sum,
    verify_3sum_prime, verify_eqdist, verify_segcontpnt, SegContPntInstance, ThreeSumInstance, ThreeSumMode,
    ThreeSumPrimeInstance,
};
use sumhard::oracle::{brute_3sum, brute_3sum_prime, brute_eqdist, brute_segcontpnt};
use sumhard::geom::{Interval, IntervalSet};
use sumhard::Rational;

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from_int(x)).collect()
}

fn prime_instance(max_n: usize) -> impl Strategy<Value = ThreeSumPrimeInstance> {
    (1..=max_n).prop_flat_map(|n| {
        let side = || prop::collection::vec(-30i64..=30, n);
        (side(), side(), side())
            .prop_map(|(a, b, c)| ThreeSumPrimeInstance::new(ints(&a), ints(&b), ints(&c)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_oracles_agree(inst in prime_instance(10)) {
        let truth = brute_3sum_prime(&inst).is_some();
        let eq = reduce_prime_to_eqdist(&normalize_to_unit_interval(&inst)).unwrap();
        prop_assert_eq!(brute_eqdist(&eq).is_some(), truth);
        if inst.n() >= 2 {
            let seg = extend_to_segcontpnt(&eq).unwrap();
            prop_assert_eq!(brute_segcontpnt(&seg).is_some(), truth);
        }
        prop_assert_eq!(brute_3sum(&reduce_prime_to_3sum(&inst), ThreeSumMode::AllowRepeats).is_some(), truth);
    }

    #[test]
    fn gadget_scales_separate(inst in prime_instance(10)) {
        let eq = reduce_prime_to_eqdist(&normalize_to_unit_interval(&inst)).unwrap();
        let p = eq.p();
        let ninety_seven = Rational::from_int(97);
        let three = Rational::from_int(3);
        for i in 0..p.len() {
            for j in 0..p.len() {
                if i / 2 != j / 2 {
                    prop_assert!((&p[i] - &p[j]).abs() >= ninety_seven);
                }
            }
        }
        for x in eq.q() {
            for y in eq.q() {
                prop_assert!((x - y).abs() <= three);
            }
        }
    }

    #[test]
    fn yes_answers_carry_valid_witnesses(inst in prime_instance(8)) {
        if let Some(w) = solve_3sum_prime(&inst) {
            prop_assert!(verify_3sum_prime(&inst, &w));
        }
        let eq = reduce_prime_to_eqdist(&normalize_to_unit_interval(&inst)).unwrap();
        if let Some(w) = solve_eqdist(&eq) {
            prop_assert!(verify_eqdist(&eq, &w));
        }
        let s = reduce_prime_to_3sum(&inst);
        if let Some(w) = solve_3sum(&s) {
            prop_assert!(verify_3sum(&s, &w, ThreeSumMode::AllowRepeats));
        }
    }

    #[test]
    fn three_sum_matches_its_prime_image(xs in prop::collection::vec(-60i64..=60, 1..25)) {
        let s = ThreeSumInstance::new(ints(&xs)).unwrap();
        prop_assert_eq!(solve_3sum(&s).is_some(), solve_3sum_prime(&reduce_3sum_to_prime(&s)).is_some());
        prop_assert_eq!(solve_3sum(&s).is_some(), brute_3sum(&s, ThreeSumMode::AllowRepeats).is_some());
    }

    #[test]
    fn segcontpnt_solver_matches_oracle(
        p in prop::collection::vec(0i64..40, 1..6),
        ivs in prop::collection::vec((0i64..60, 0i64..5), 1..8),
    ) {
        let mut ivs: Vec<(i64, i64)> = ivs.into_iter().map(|(lo, len)| (lo, lo + len)).collect();
        ivs.sort();
        let mut merged: Vec<(i64, i64)> = Vec::new();
        for (lo, hi) in ivs {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        let q = IntervalSet::new(
            merged.iter().map(|&(lo, hi)| Interval::new(Rational::from_int(lo), Rational::from_int(hi)).unwrap()).collect(),
        ).unwrap();
        let inst = SegContPntInstance::new(ints(&p), q).unwrap();
        let fast = solve_segcontpnt(&inst);
        prop_assert_eq!(fast.is_some(), brute_segcontpnt(&inst).is_some());
        if let Some(v) = fast {
            prop_assert!(verify_segcontpnt(&inst, &v));
        }
    }
}
