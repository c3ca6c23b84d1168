use proptest::prelude::*;

use unruh_sim::eigensolve::{eigendecompose, sturm_count};
use unruh_sim::hamiltonian::{build_hamiltonian, BathSpec, GaugeReducedHamiltonian};
use unruh_sim::output::sci;
use unruh_sim::rindler::{invariance_residual, rindler_transform, symplectic_residual};
use unruh_sim::thermo::{heat_capacity, log_partition};
use unruh_sim::unruh::{fit_kappa, BathResult};

proptest! {
    #[test]
    fn decomposition_of_arbitrary_tridiagonal(off in prop::collection::vec(0.01f64..50.0, 1..80)) {
        let h = GaugeReducedHamiltonian::from_offdiag(off, 1.0);
        let dec = eigendecompose(&h).unwrap();
        prop_assert!(dec.max_residual(&h) <= 1e-12 * h.norm());
        prop_assert!(dec.orthonormality_defect() <= 1e-12);
        prop_assert!(dec.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn sturm_count_matches_spectrum(n_e in 1usize..=12, probes in prop::collection::vec(-40.0f64..40.0, 100)) {
        let h = build_hamiltonian(&BathSpec::new(n_e, 1.0).unwrap()).unwrap();
        let dec = eigendecompose(&h).unwrap();
        for x in probes {
            let below = dec.values.iter().filter(|&&v| v < x).count();
            // probes landing within rounding of an eigenvalue are ambiguous
            if dec.values.iter().all(|v| (v - x).abs() > 1e-9) {
                prop_assert_eq!(sturm_count(&h, x), below);
            }
        }
    }

    #[test]
    fn bath_spectrum_pairs_up(n_e in 1usize..200, eta in 1e-3f64..1e3) {
        let h = build_hamiltonian(&BathSpec::new(n_e, eta).unwrap()).unwrap();
        let dec = eigendecompose(&h).unwrap();
        let n = dec.values.len();
        for l in 0..n {
            prop_assert!((dec.values[l] + dec.values[n - 1 - l]).abs() <= 1e-12 * h.norm());
        }
    }

    #[test]
    fn log_partition_shift(shift in -10.0f64..10.0, beta in 0.01f64..5.0) {
        let values = [-2.5, -0.3, 0.0, 1.7, 4.0];
        let shifted: Vec<f64> = values.iter().map(|v| v + shift).collect();
        let d = log_partition(&values, beta) - log_partition(&shifted, beta);
        prop_assert!((d - beta * shift).abs() <= 1e-12 * (1.0 + (beta * shift).abs()));
        prop_assert!((heat_capacity(&values, beta) - heat_capacity(&shifted, beta)).abs() <= 1e-10);
        prop_assert!(heat_capacity(&values, beta) >= 0.0);
    }

    #[test]
    fn pair_form_invariant(gtau in -5.0f64..5.0) {
        prop_assert!(invariance_residual(gtau).unwrap() <= 1e-10);
        prop_assert!(symplectic_residual(&rindler_transform(gtau).unwrap()) <= 1e-10);
    }

    #[test]
    fn fit_scale_equivariance(
        temps in prop::collection::vec(1e-8f64..1e-5, 2..20),
        alpha in 0.1f64..10.0,
    ) {
        let points: Vec<BathResult> = temps
            .iter()
            .enumerate()
            .map(|(i, &t)| BathResult { n_e: i + 1, t_c_kelvin: t, n_bar_at_tc: 1.0, a_sim: 1e13 * (i + 1) as f64, eta: 1.0 })
            .collect();
        let scaled: Vec<BathResult> = points
            .iter()
            .map(|p| BathResult { t_c_kelvin: alpha * p.t_c_kelvin, a_sim: alpha * p.a_sim, ..*p })
            .collect();
        let a = fit_kappa(&points).unwrap().kappa;
        let b = fit_kappa(&scaled).unwrap().kappa;
        prop_assert!((a / b - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn csv_floats_round_trip(x in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
        prop_assert_eq!(sci(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
    }
}
