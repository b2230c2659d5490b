use proptest::prelude::*;

use prodis::cesaro::{running_means, CesaroSeries};
use prodis::measure::Measure;
use prodis::params::{
    exchangeable_params, iid_uniform_params, reference_families, submartingale_envelope, submartingale_from_increments,
    submartingale_params, volatility_path, Mixing,
};
use prodis::sim::{canonical_disintegration, positive_indicator, residual_series, sample_conditional};
use prodis::SeedSpec;

fn seeds() -> impl Strategy<Value = SeedSpec> {
    (any::<u64>(), 0u64..1 << 40).prop_map(|(b, s)| SeedSpec::new(b, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_family_yields_normalized_measures(seed in seeds(), n in 1usize..400) {
        for fam in reference_families() {
            let ms = fam.generate(n, seed).unwrap();
            prop_assert_eq!(ms.len(), n);
            for m in ms.measures() {
                let total: f64 = m.weights().iter().sum();
                prop_assert!((total - 1.0).abs() <= 1e-12);
                prop_assert!(m.weights().iter().all(|w| (0.0..=1.0).contains(w)));
            }
        }
    }

    #[test]
    fn identical_seeds_give_identical_bits(seed in seeds(), n in 1usize..300) {
        for fam in reference_families() {
            let a = sample_conditional(&fam.generate(n, seed).unwrap(), seed);
            let b = sample_conditional(&fam.generate(n, seed).unwrap(), seed);
            prop_assert_eq!(a.values(), b.values());
            let (ra, rb) = (a.realized_values(), b.realized_values());
            prop_assert!(ra.iter().zip(&rb).all(|(x, y)| x.to_bits() == y.to_bits()));
        }
    }

    #[test]
    fn submartingale_envelope_and_monotone(seed in seeds(), n in 1usize..200) {
        let th = submartingale_params(n, seed).unwrap().state_one_weights();
        for (k, &t) in th.iter().enumerate() {
            prop_assert!(t >= 0.0 && t <= submartingale_envelope(k), "k={} t={}", k, t);
            if k > 0 {
                prop_assert!(t >= th[k - 1]);
            }
        }
    }

    #[test]
    fn submartingale_envelope_with_extreme_increments(us in prop::collection::vec(prop_oneof![Just(1.0f64), 0.0f64..=1.0], 1..120)) {
        let th = submartingale_from_increments(&us, SeedSpec::new(0, 0)).unwrap().state_one_weights();
        for (k, &t) in th.iter().enumerate() {
            prop_assert!(t <= submartingale_envelope(k));
        }
    }

    #[test]
    fn exchangeable_spread_is_zero(seed in seeds(), n in 1usize..300, c in 0.0f64..=1.0) {
        for mixing in [Mixing::Uniform, Mixing::PointMass { at: c }, Mixing::TwoPoint { low: 0.1, high: 0.9, p_high: c }] {
            let th = exchangeable_params(n, mixing, seed).unwrap().state_one_weights();
            let max = th.iter().cloned().fold(f64::MIN, f64::max);
            let min = th.iter().cloned().fold(f64::MAX, f64::min);
            prop_assert_eq!(max - min, 0.0);
        }
    }

    #[test]
    fn volatility_path_stays_bounded(
        seed in seeds(),
        alpha in -2.0f64..2.0,
        beta in -0.95f64..0.95,
        w_max in 0.0f64..3.0,
        n in 1usize..300,
    ) {
        let p = volatility_path(alpha, beta, w_max, 64, n, seed).unwrap();
        let bound = p.stationary_bound();
        prop_assert!(p.h.iter().all(|h| h.abs() <= bound), "bound {}", bound);
        prop_assert!(p.check().is_ok());
    }

    #[test]
    fn canonical_round_trip_is_exact(seed in seeds(), other in seeds(), n in 1usize..300) {
        for fam in reference_families() {
            let t = sample_conditional(&fam.generate(n, seed).unwrap(), seed);
            let back = sample_conditional(&canonical_disintegration(&t), other);
            prop_assert_eq!(t.values(), back.values());
            let (a, b) = (t.realized_values(), back.realized_values());
            prop_assert!(a.iter().zip(&b).all(|(x, y)| x.to_bits() == y.to_bits()));
        }
    }

    #[test]
    fn residual_terms_bounded_by_twice_sup_norm(seed in seeds(), n in 1usize..300) {
        for fam in reference_families() {
            let ms = fam.generate(n, seed).unwrap();
            let t = sample_conditional(&ms, seed);
            let r = residual_series(&t, &ms, |x| x * x - positive_indicator(x), "x^2-1{x>0}", &[n]).unwrap();
            prop_assert!(r.max_abs_term <= 2.0 * r.f_sup_norm);
        }
    }

    #[test]
    fn cesaro_matches_running_means(terms in prop::collection::vec(-5.0f64..5.0, 1..200)) {
        let all = running_means(&terms);
        let checkpoints: Vec<usize> = (1..=terms.len()).step_by(7).collect();
        let c = CesaroSeries::from_terms(terms.iter().copied(), &checkpoints).unwrap();
        for &(k, m) in c.checkpoints() {
            prop_assert_eq!(m.to_bits(), all[k - 1].to_bits());
        }
    }

    #[test]
    fn dirac_values_lie_in_support(seed in seeds(), n in 1usize..200) {
        let ms = iid_uniform_params(n, seed).unwrap();
        let t = sample_conditional(&ms, seed);
        prop_assert!(t.values().iter().all(|v| ms.support().contains(v)));
        prop_assert_eq!(t.len(), ms.len());
    }
}
