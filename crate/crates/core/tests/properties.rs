//! Cross-module property tests on randomized inputs.

use proptest::prelude::*;

use relframe::{
    equal_up_to_phase, extract_params, haar_su2, info_gain, invariants_of, orbit_equal,
    prepare_canonical, prepare_via_circuit, tensor, EncodingScheme, ParamKind, PriorModel,
    QuadratureConfig, RandomStream, RelativeParams, StateVector2Q,
};

const PI: f64 = std::f64::consts::PI;
const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;

fn arb_params() -> impl Strategy<Value = RelativeParams> {
    (0.0..=FRAC_PI_4, 0.0..=PI, 0.0..=PI)
        .prop_map(|(a, t, p)| RelativeParams::new(a, t, p).unwrap())
}

/// A generic pure state: independent Haar factors applied to a random
/// canonical state.
fn random_state(stream: &mut RandomStream, p: &RelativeParams) -> StateVector2Q {
    let u = haar_su2(stream);
    let v = haar_su2(stream);
    tensor(&u, &v).apply(&prepare_canonical(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn circuit_and_closed_form_agree(p in arb_params()) {
        prop_assert!(
            equal_up_to_phase(&prepare_via_circuit(&p), &prepare_canonical(&p), 1e-12).unwrap()
        );
    }

    #[test]
    fn invariants_survive_collective_rotations(p in arb_params(), seed in any::<u64>()) {
        let mut stream = RandomStream::new(seed);
        let base = prepare_canonical(&p);
        let inv0 = invariants_of(&base);
        let u = haar_su2(&mut stream);
        let rotated = tensor(&u, &u).apply(&base);
        let inv = invariants_of(&rotated);
        prop_assert!((inv.det_inv() - inv0.det_inv()).norm() <= 1e-10);
        prop_assert!((inv.cross_inv() - inv0.cross_inv()).norm() <= 1e-10);
    }

    #[test]
    fn extraction_round_trips_through_the_orbit(p in arb_params(), seed in any::<u64>()) {
        let mut stream = RandomStream::new(seed);
        let s = random_state(&mut stream, &p);
        let rec = prepare_canonical(&extract_params(&s).params);
        prop_assert!(orbit_equal(&rec, &s, 1e-8).unwrap());
    }

    #[test]
    fn unitaries_preserve_normalization(p in arb_params(), seed in any::<u64>()) {
        let mut stream = RandomStream::new(seed);
        let s = random_state(&mut stream, &p);
        let norm: f64 = s.amps().iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn concurrence_equals_sin_two_alpha(p in arb_params()) {
        let c = relframe::concurrence(&prepare_canonical(&p));
        prop_assert!((c - (2.0 * p.alpha()).sin()).abs() <= 1e-12);
    }

    #[test]
    fn info_gain_is_a_probability_weighted_bounded_average(
        message_idx in 0usize..3,
        fix_a in 0.0..=1.0f64,
        fix_b in 0.0..=1.0f64,
        discrete in any::<bool>(),
    ) {
        let message = ParamKind::ALL[message_idx];
        let others: Vec<ParamKind> = ParamKind::ALL
            .into_iter()
            .filter(|k| *k != message)
            .collect();
        let scale = |k: ParamKind, t: f64| {
            let (lo, hi) = k.range();
            lo + t * (hi - lo)
        };
        let scheme = EncodingScheme::new(
            message,
            (others[0], scale(others[0], fix_a)),
            (others[1], scale(others[1], fix_b)),
        )
        .unwrap();
        let prior = if discrete {
            PriorModel::two_point_endpoints(message)
        } else {
            PriorModel::uniform_over(message)
        };
        let quad = QuadratureConfig::simpson(257).unwrap();
        let r = info_gain(&scheme, &prior, &quad);
        prop_assert!((r.p_outcome[0] + r.p_outcome[1] - 1.0).abs() <= 1e-10);
        prop_assert!(r.gain_per_outcome.iter().all(|g| *g >= 0.0));
        prop_assert!(r.avg_gain >= 0.0 && r.avg_gain <= 1.0 + 1e-9);
        let weighted = r.p_outcome[0] * r.gain_per_outcome[0]
            + r.p_outcome[1] * r.gain_per_outcome[1];
        prop_assert!((r.avg_gain - weighted).abs() <= 1e-10);
    }

    #[test]
    fn orbit_equal_is_reflexive_and_symmetric_on_random_pairs(
        p in arb_params(),
        q in arb_params(),
        seed in any::<u64>(),
    ) {
        let mut stream = RandomStream::new(seed);
        let s1 = random_state(&mut stream, &p);
        let s2 = random_state(&mut stream, &q);
        prop_assert!(orbit_equal(&s1, &s1, 1e-9).unwrap());
        prop_assert_eq!(
            orbit_equal(&s1, &s2, 1e-9).unwrap(),
            orbit_equal(&s2, &s1, 1e-9).unwrap()
        );
    }
}
