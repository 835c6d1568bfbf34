use proptest::prelude::*;

use weakdiscord_core::correlations::{discord, mutual_information, QubitMeasurement};
use weakdiscord_core::experiment::{run_alpha_sweep, ExperimentConfig};
use weakdiscord_core::qcore::{hermitian_deviation, Subsystem};
use weakdiscord_core::states::{random_dqc1, random_mixed, random_pure, werner, RandomStateSpec};
use weakdiscord_core::weak::{
    alternative_weak_discord, coincidence_condition, make_post_selection, qubit_weak_value, weak_discord,
    weak_discord_with, weak_probabilities, WeakObservable,
};

fn mixed(rank: usize, seed: u64) -> weakdiscord_core::DensityMatrix {
    random_mixed(RandomStateSpec::new(rank, seed).unwrap()).unwrap()
}

#[test]
fn weak_value_is_bounded() {
    for i in 0..10_000u64 {
        let rho = mixed(1 + (i % 4) as usize, i);
        let alpha = (i % 101) as f64 / 100.0;
        let m = QubitMeasurement::new(0.37 * i as f64, 1.3 * i as f64);
        let w = qubit_weak_value(&rho, m, alpha).unwrap();
        assert!(w.abs() <= 1.0 + 1e-12, "state {i}: {w}");
    }
}

#[test]
fn alpha_one_recovers_discord() {
    for i in 0..200u64 {
        let rho = mixed(2 + (i % 3) as usize, 50_000 + i);
        let d = discord(&rho).unwrap();
        let w = weak_discord_with(&rho, &d, 1.0).unwrap();
        assert!((w.weak_discord.unwrap() - d.discord).abs() < 1e-12);
    }
}

#[test]
fn coincidence_implies_equal_discords() {
    let states = (0..20u64)
        .map(|s| random_pure(2, 2, s).unwrap())
        .chain([-0.3, 0.0, 0.2, 1.0 / 3.0].map(|c| werner(c).unwrap()))
        .chain((0..5u64).map(|s| random_dqc1(1, s).unwrap()));
    for rho in states {
        let d = discord(&rho).unwrap();
        assert!(coincidence_condition(&rho, &d.optimal.observable(rho.dim_b())).unwrap());
        for k in 0..=10 {
            let w = weak_discord_with(&rho, &d, k as f64 / 10.0).unwrap();
            assert!((w.weak_discord.unwrap() - d.discord).abs() < 1e-10);
            assert!(w.coincides);
        }
    }
}

#[test]
fn alternative_definition_on_scaled_projector_states() {
    for (n, seed) in [(1, 3), (2, 4), (3, 5)] {
        let rho = random_dqc1(n, seed).unwrap();
        let i = mutual_information(&rho).unwrap();
        for alpha in [0.0, 0.4, 0.8] {
            assert!((alternative_weak_discord(&rho, alpha).unwrap() - i).abs() < 1e-9);
        }
    }
}

#[test]
fn weak_probabilities_sum_to_one_for_qutrits() {
    use weakdiscord_core::qcore::{identity, tensor_product};
    // Computational-basis projectors on a qutrit A paired with a qubit B.
    let projectors: Vec<_> = (0..3)
        .map(|k| {
            let mut p = identity(3).scale(0.0);
            p[(k, k)] = identity(1)[(0, 0)];
            p
        })
        .collect();
    let wo = WeakObservable::with_integer_eigenvalues(projectors).unwrap();
    for seed in 0..20u64 {
        let psi = random_pure(3, 2, seed).unwrap();
        let mixed_in = tensor_product(&identity(3).unscale(3.0), &identity(2).unscale(2.0));
        let m = psi.matrix().scale(0.6) + mixed_in.scale(0.4);
        let rho = weakdiscord_core::DensityMatrix::new(m, 3, 2).unwrap();
        for alpha in [0.1, 0.5, 1.0] {
            let ps = make_post_selection(&rho, alpha).unwrap();
            let w = weak_probabilities(&rho, &wo, &ps).unwrap();
            assert!((w.probs.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn sweep_is_negative_and_shrinking() {
    let cfg = ExperimentConfig {
        n_states: 10_000,
        alphas: (1..=9).map(|k| k as f64 / 10.0).collect(),
        ..Default::default()
    };
    let rows = run_alpha_sweep(&cfg).unwrap();
    for r in &rows {
        assert!(r.mean_diff <= 0.0, "{r:?}");
        assert_eq!(r.n_excluded, 0);
    }
    for pair in rows.windows(2) {
        let noise = 2.0 * pair[1].std_diff / (pair[1].n_valid as f64).sqrt();
        assert!(pair[1].mean_diff.abs() <= pair[0].mean_diff.abs() + noise, "{pair:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sampled_states_are_valid(rank in 1usize..=4, seed in any::<u64>()) {
        let rho = mixed(rank, seed);
        prop_assert!(hermitian_deviation(rho.matrix()) < 1e-10);
        let tr: f64 = (0..4).map(|k| rho.matrix()[(k, k)].re).sum();
        prop_assert!((tr - 1.0).abs() < 1e-10);
        prop_assert!(rho.eigenvalues().iter().all(|&l| l >= 0.0));
        prop_assert_eq!(rho.rank(1e-10), rank);
    }

    #[test]
    fn correlation_bounds(rank in 1usize..=4, seed in any::<u64>()) {
        let rho = mixed(rank, seed);
        let d = discord(&rho).unwrap();
        let s_a = rho.partial_trace(Subsystem::A).unwrap().entropy().unwrap();
        prop_assert!(d.mutual_info >= -1e-12 && d.mutual_info <= 2.0 + 1e-12);
        prop_assert!(d.max_j >= -1e-12 && d.max_j <= d.mutual_info + 1e-12);
        prop_assert!(d.discord >= 0.0 && d.discord <= s_a + 1e-9);
        prop_assert!((d.probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(d.optimal.theta >= 0.0 && d.optimal.theta <= std::f64::consts::FRAC_PI_2 + 1e-12);
    }

    #[test]
    fn weak_discord_is_continuous_near_one(seed in any::<u64>(), rank in 2usize..=4) {
        let rho = mixed(rank, seed);
        let d = discord(&rho).unwrap();
        let near = weak_discord(&rho, 0.999).unwrap().weak_discord.unwrap();
        prop_assert!((near - d.discord).abs() < 1e-2);
    }

    #[test]
    fn weak_probabilities_stay_in_unit_interval(seed in any::<u64>(), alpha in 0.0f64..=1.0) {
        let rho = mixed(3, seed);
        let w = weak_discord(&rho, alpha).unwrap();
        prop_assert!(w.prob_valid);
        prop_assert!(w.weak_probs.iter().all(|p| (0.0..=1.0).contains(p)));
        prop_assert!((w.weak_probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
