use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use semireflex::classify::{
    cone_deep_point, cone_facets, is_deep_point, is_semi_reflexive_structural, only_if_witness,
    origin_outside_witness, polar_dual_polytope,
};
use semireflex::cli::corpus::{random_polytope, CorpusConfig};
use semireflex::ehrhart::{count, floor_property, membership_interval, step_function, Endpoint};
use semireflex::exact_math::{int_vector_to_rat, rat, Integer, Rational};
use semireflex::formats::{polytope_json, read_polytope};
use semireflex::polytope::Polytope;

fn polytope(seed: u64, constructed: bool) -> Polytope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_polytope(&mut rng, &CorpusConfig::default(), constructed)
}

/// Dilations in `[0, 4]` with denominators up to 6.
fn dilation() -> impl Strategy<Value = Rational> {
    (1i64..=6).prop_flat_map(|q| (0..=4 * q).prop_map(move |p| rat(p, q)))
}

fn small_point(d: usize) -> impl Strategy<Value = Vec<Integer>> {
    proptest::collection::vec(-6i64..=6, d).prop_map(|v| v.into_iter().map(Integer::from).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn step_function_agrees_with_direct_count(seed in any::<u64>(), s in dilation(), strict in any::<bool>()) {
        let p = polytope(seed, false);
        let f = step_function(&p, &rat(4, 1), strict).unwrap();
        prop_assert_eq!(f.value_at(&s), Some(count(&p, &s, strict).unwrap()));
    }

    #[test]
    fn origin_in_p_makes_counts_nondecreasing(seed in any::<u64>(), constructed in any::<bool>()) {
        let p = polytope(seed, constructed);
        let f = step_function(&p, &rat(6, 1), false).unwrap();
        if p.contains_origin() {
            prop_assert!(f.is_nondecreasing());
        }
    }

    #[test]
    fn offsets_in_zero_one_give_floor_steps(seed in any::<u64>()) {
        let p = polytope(seed, true);
        prop_assert!(is_semi_reflexive_structural(&p).unwrap().semi_reflexive);
        prop_assert!(floor_property(&step_function(&p, &rat(6, 1), false).unwrap()).holds);
    }

    #[test]
    fn membership_interval_matches_containment(seed in any::<u64>(), s in dilation(), strict in any::<bool>(), x in small_point(3)) {
        let p = polytope(seed, false);
        let x: Vec<Integer> = x.into_iter().take(p.dim()).collect();
        prop_assume!(!s.is_zero());
        let interval = membership_interval(&p, &x, strict);
        let scaled: Vec<Rational> = int_vector_to_rat(&x).iter().map(|c| c / &s).collect();
        prop_assert_eq!(interval.contains(&s), p.contains(&scaled, strict).unwrap());
    }

    #[test]
    fn canonical_form_keeps_the_point_set(seed in any::<u64>(), constructed in any::<bool>()) {
        let p = polytope(seed, constructed);
        if let Some(rep) = is_semi_reflexive_structural(&p).unwrap().canonical {
            let q = Polytope::new(rep).unwrap();
            prop_assert_eq!(q.vertices(), p.vertices());
        }
    }

    #[test]
    fn polar_dual_is_an_involution(seed in any::<u64>()) {
        let p = polytope(seed, false);
        if p.origin_in_interior() {
            let dual = polar_dual_polytope(&p).unwrap().expect("bounded when 0 is interior");
            let back = polar_dual_polytope(&dual).unwrap().expect("0 stays interior");
            prop_assert_eq!(back.vertices(), p.vertices());
        }
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), with_vertices in any::<bool>()) {
        let p = polytope(seed, false);
        let q = read_polytope(&polytope_json(&p, with_vertices)).unwrap();
        prop_assert_eq!(q.halfspaces(), p.halfspaces());
    }

    #[test]
    fn origin_outside_witness_leaves_after_its_dilation(seed in any::<u64>()) {
        let p = polytope(seed, false);
        if let Some(w) = origin_outside_witness(&p).unwrap() {
            let interval = membership_interval(&p, &w.point, false);
            prop_assert_eq!(interval.hi, Endpoint::finite(w.dilation, true));
        }
    }

    #[test]
    fn only_if_witness_is_missed_by_the_floor_dilate(seed in any::<u64>()) {
        let p = polytope(seed, false);
        if let Some(w) = only_if_witness(&p).unwrap() {
            prop_assert!(!w.dilation.is_integer());
            let x = int_vector_to_rat(&w.point);
            let at = |s: &Rational| -> Vec<Rational> { x.iter().map(|c| c / s).collect() };
            prop_assert!(p.contains(&at(&w.dilation), false).unwrap());
            let floor = w.dilation.floor();
            if floor.is_zero() {
                prop_assert!(x.iter().any(|c| !c.is_zero()));
            } else {
                prop_assert!(!p.contains(&at(&floor), false).unwrap());
            }
        }
    }

    #[test]
    fn cone_deep_points_are_deep(gens in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 3..6), num in 1i64..=12, den in 1i64..=4) {
        let gens: Vec<Vec<Rational>> = gens
            .into_iter()
            .map(|mut g| { g[2] = g[2].abs() + 1; g.into_iter().map(|c| rat(c, 1)).collect() })
            .collect();
        let delta = rat(num, den);
        if let Ok(x) = cone_deep_point(&gens, &delta) {
            let facets = cone_facets(&gens).unwrap();
            prop_assert!(is_deep_point(&facets, &int_vector_to_rat(&x), &delta));
        }
    }
}
