//! Canonical-ensemble observables of a bath and its critical temperature.
//!
//! Everything is in reduced units: eigenvalues in `eta`, inverse
//! temperatures `beta` in `1 / eta`, temperatures `t = k_B T / eta`, heat
//! capacity in `k_B`. Sums use weights `exp(-beta (eps_l - eps_min))`, i.e.
//! log-sum-exp shifted by the ground state.

use crate::eigensolve::EigenDecomposition;
use crate::error::{Error, Result};
use crate::hamiltonian::NumberOperatorDiagonal;
use crate::optimize::{count_local_maxima, golden_section_max, log_space};
use crate::scalar::Real;

fn min_value<T: Real>(values: &[T]) -> T {
    values.iter().copied().fold(T::infinity(), T::min)
}

/// Normalized Boltzmann weights `exp(-beta eps_l) / Z`.
pub fn boltzmann_weights<T: Real>(values: &[T], beta: T) -> Vec<T> {
    let e0 = min_value(values);
    let mut w: Vec<T> = values.iter().map(|&e| (-beta * (e - e0)).exp()).collect();
    let z = w.iter().fold(T::zero(), |a, &x| a + x);
    for x in &mut w {
        *x = *x / z;
    }
    w
}

/// `ln Z = ln sum_l exp(-beta eps_l)`.
pub fn log_partition<T: Real>(values: &[T], beta: T) -> T {
    let e0 = min_value(values);
    let shifted = values
        .iter()
        .fold(T::zero(), |a, &e| a + (-beta * (e - e0)).exp());
    -beta * e0 + shifted.ln()
}

/// Mean energy `sum_l eps_l exp(-beta eps_l) / Z`.
pub fn internal_energy<T: Real>(values: &[T], beta: T) -> T {
    boltzmann_weights(values, beta)
        .iter()
        .zip(values)
        .fold(T::zero(), |a, (&w, &e)| a + w * e)
}

/// Heat capacity `beta^2 (<E^2> - <E>^2)` in units of `k_B`.
pub fn heat_capacity<T: Real>(values: &[T], beta: T) -> T {
    let w = boltzmann_weights(values, beta);
    let mean = w.iter().zip(values).fold(T::zero(), |a, (&w, &e)| a + w * e);
    let var = w.iter().zip(values).fold(T::zero(), |a, (&w, &e)| {
        let d = e - mean;
        a + w * d * d
    });
    beta * beta * var
}

/// `<psi_l|N|psi_l>` for every eigenstate.
pub fn state_occupations<T: Real>(
    decomp: &EigenDecomposition<T>,
    nop: &NumberOperatorDiagonal<T>,
) -> Result<Vec<T>> {
    if nop.dim() != decomp.dim() {
        return Err(Error::DimensionMismatch {
            expected: decomp.dim(),
            got: nop.dim(),
        });
    }
    Ok(decomp.vectors().map(|v| nop.expectation(v)).collect())
}

/// Thermal mean excitation number `sum_l exp(-beta eps_l) <psi_l|N|psi_l> / Z`.
pub fn mean_excitations<T: Real>(
    decomp: &EigenDecomposition<T>,
    nop: &NumberOperatorDiagonal<T>,
    beta: T,
) -> Result<T> {
    let occ = state_occupations(decomp, nop)?;
    Ok(thermal_average(&decomp.values, &occ, beta))
}

fn thermal_average<T: Real>(values: &[T], observable: &[T], beta: T) -> T {
    boltzmann_weights(values, beta)
        .iter()
        .zip(observable)
        .fold(T::zero(), |a, (&w, &o)| a + w * o)
}

/// Observables at one reduced temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalObservables<T> {
    pub t: T,
    pub log_z: T,
    pub energy: T,
    pub heat_capacity: T,
    pub n_bar: T,
}

/// Spectrum plus per-state occupations, reused across many temperatures.
#[derive(Debug, Clone)]
pub struct BathThermo<T> {
    values: Vec<T>,
    occupations: Vec<T>,
}

impl<T: Real> BathThermo<T> {
    pub fn new(decomp: &EigenDecomposition<T>, nop: &NumberOperatorDiagonal<T>) -> Result<Self> {
        Ok(Self {
            values: decomp.values.clone(),
            occupations: state_occupations(decomp, nop)?,
        })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn at(&self, t: T) -> ThermalObservables<T> {
        let beta = t.recip();
        let w = boltzmann_weights(&self.values, beta);
        let e0 = min_value(&self.values);
        let z_shifted = self
            .values
            .iter()
            .fold(T::zero(), |a, &e| a + (-beta * (e - e0)).exp());
        let energy = w.iter().zip(&self.values).fold(T::zero(), |a, (&w, &e)| a + w * e);
        let var = w.iter().zip(&self.values).fold(T::zero(), |a, (&w, &e)| {
            let d = e - energy;
            a + w * d * d
        });
        let n_bar = w
            .iter()
            .zip(&self.occupations)
            .fold(T::zero(), |a, (&w, &o)| a + w * o);
        ThermalObservables {
            t,
            log_z: -beta * e0 + z_shifted.ln(),
            energy,
            heat_capacity: beta * beta * var,
            n_bar,
        }
    }

    pub fn n_bar(&self, t: T) -> T {
        thermal_average(&self.values, &self.occupations, t.recip())
    }
}

/// Observables at every reduced temperature in `grid`.
pub fn thermo_curve<T: Real>(
    decomp: &EigenDecomposition<T>,
    nop: &NumberOperatorDiagonal<T>,
    grid: &[T],
) -> Result<Vec<ThermalObservables<T>>> {
    if grid.iter().any(|&t| !(t > T::zero() && t.is_finite())) {
        return Err(Error::Domain("temperature grid must be positive".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("temperature grid must be strictly increasing".into()));
    }
    let bath = BathThermo::new(decomp, nop)?;
    Ok(grid.iter().map(|&t| bath.at(t)).collect())
}

/// Reduced-temperature scan used to bracket the heat-capacity maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperatureScan<T> {
    pub t_min: T,
    pub t_max: T,
    pub points: usize,
    /// Relative bracket width at which golden-section refinement stops.
    pub rel_tol: T,
}

impl<T: Real> TemperatureScan<T> {
    pub const DEFAULT_POINTS: usize = 2000;

    /// `[1e-2, 10 N_e]`, 2000 log-spaced points, refined to `1e-8`.
    pub fn default_for(n_e: usize) -> Self {
        Self {
            t_min: T::lit(1e-2),
            t_max: T::lit(10.0) * T::from_usize_exact(n_e),
            points: Self::DEFAULT_POINTS,
            rel_tol: T::lit(1e-8),
        }
    }

    pub fn grid(&self) -> Vec<T> {
        log_space(self.t_min, self.t_max, self.points)
    }
}

/// Heat-capacity maximum in reduced units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatCapacityPeak<T> {
    pub t_c: T,
    pub c_max: T,
    /// Second difference `(C(t+h) - 2C(t) + C(t-h)) / h^2` at `t_c`.
    pub curvature: T,
}

/// Locates the global heat-capacity maximum: coarse scan, then
/// golden-section refinement on the bracketing grid cells.
pub fn find_critical_temperature<T: Real>(
    values: &[T],
    scan: &TemperatureScan<T>,
) -> Result<HeatCapacityPeak<T>> {
    if values.len() < 2 {
        return Err(Error::NoTransition);
    }
    let lo = min_value(values);
    let hi = values.iter().copied().fold(T::neg_infinity(), T::max);
    let scale = lo.abs().max(hi.abs());
    if hi - lo <= T::epsilon() * scale || hi == lo {
        return Err(Error::NoTransition);
    }

    let grid = scan.grid();
    let curve: Vec<T> = grid.iter().map(|&t| heat_capacity(values, t.recip())).collect();
    let mut best = 0;
    for (i, &c) in curve.iter().enumerate() {
        if c > curve[best] {
            best = i;
        }
    }
    if curve[best] <= T::zero() {
        return Err(Error::NoTransition);
    }
    if best == 0 || best == grid.len() - 1 {
        return Err(Error::ScanBoundary {
            t: grid[best].to_f64().unwrap_or(f64::NAN),
        });
    }

    let c_of = |t: T| heat_capacity(values, t.recip());
    let peak = golden_section_max(c_of, grid[best - 1], grid[best + 1], scan.rel_tol, 500);
    let t_c = peak.x;
    let h = T::lit(1e-3) * t_c;
    let curvature = (c_of(t_c + h) - T::two() * c_of(t_c) + c_of(t_c - h)) / (h * h);
    if !(curvature < T::zero()) {
        return Err(Error::NotAMaximum {
            t: t_c.to_f64().unwrap_or(f64::NAN),
            curvature: curvature.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(HeatCapacityPeak {
        t_c,
        c_max: peak.value,
        curvature,
    })
}

/// Shape diagnostics of one bath's curves on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveReport {
    pub heat_capacity_maxima: usize,
    pub n_bar_monotone: bool,
}

impl CurveReport {
    pub fn from_curve<T: Real>(curve: &[ThermalObservables<T>]) -> Self {
        let c: Vec<T> = curve.iter().map(|o| o.heat_capacity).collect();
        let slack = T::lit(1e-12);
        Self {
            heat_capacity_maxima: count_local_maxima(&c),
            n_bar_monotone: curve
                .windows(2)
                .all(|w| w[1].n_bar >= w[0].n_bar - slack * w[0].n_bar.abs().max(T::one())),
        }
    }

    pub fn is_unimodal(&self) -> bool {
        self.heat_capacity_maxima == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigensolve::eigendecompose;
    use crate::hamiltonian::{build_hamiltonian, number_operator, BathSpec, NumberConvention};

    const TWO_LEVEL: [f64; 2] = [-1.0, 1.0];

    /// Root of `x tanh x = 1` by Newton, independent of the scan.
    fn schottky_root() -> f64 {
        let mut x = 1.2_f64;
        for _ in 0..50 {
            let f = x * x.tanh() - 1.0;
            let df = x.tanh() + x / x.cosh().powi(2);
            x -= f / df;
        }
        x
    }

    fn bath(n_e: usize) -> (EigenDecomposition<f64>, NumberOperatorDiagonal<f64>) {
        let spec = BathSpec::new(n_e, 1.0).unwrap();
        let dec = eigendecompose(&build_hamiltonian(&spec).unwrap()).unwrap();
        (dec, number_operator(&spec, NumberConvention::Pairs).unwrap())
    }

    #[test]
    fn log_partition_examples() {
        assert!((log_partition(&TWO_LEVEL, 1.0) - (1.0_f64.exp() + (-1.0_f64).exp()).ln()).abs() < 1e-15);
        assert!((log_partition(&TWO_LEVEL, 1.0) - 1.126928).abs() < 1e-6);
        let (dec, _) = bath(6);
        assert!((log_partition(&dec.values, 1e-12) - 7.0_f64.ln()).abs() < 1e-9);
        let shifted: Vec<f64> = dec.values.iter().map(|e| e + 2.5).collect();
        let beta = 0.8;
        let d = log_partition(&dec.values, beta) - log_partition(&shifted, beta);
        assert!((d - beta * 2.5).abs() < 1e-12);
    }

    #[test]
    fn log_partition_is_finite_at_huge_beta() {
        let (dec, _) = bath(30);
        let lz = log_partition(&dec.values, 1e6);
        assert!(lz.is_finite());
        assert!((lz + 1e6 * dec.values[0]).abs() / lz.abs() < 1e-12);
    }

    #[test]
    fn internal_energy_examples() {
        assert!((internal_energy(&TWO_LEVEL, 1.0) + 1.0_f64.tanh()).abs() < 1e-15);
        assert!((internal_energy(&TWO_LEVEL, 1.0) + 0.76159).abs() < 1e-5);
        let (dec, _) = bath(5);
        assert!((internal_energy(&dec.values, 1e4) - dec.values[0]).abs() < 1e-9);
        assert!(internal_energy(&dec.values, 1e-12).abs() < 1e-9);
    }

    #[test]
    fn internal_energy_is_minus_dlnz_dbeta() {
        let (dec, _) = bath(8);
        for &beta in &[0.05, 0.3, 1.0, 4.0] {
            let h = 1e-5 * beta;
            let fd = -(log_partition(&dec.values, beta + h) - log_partition(&dec.values, beta - h)) / (2.0 * h);
            let e = internal_energy(&dec.values, beta);
            assert!((fd - e).abs() <= 1e-7 * e.abs().max(1.0));
        }
    }

    #[test]
    fn heat_capacity_examples() {
        let sech2 = 1.0 / 1.0_f64.cosh().powi(2);
        assert!((heat_capacity(&TWO_LEVEL, 1.0) - sech2).abs() < 1e-15);
        assert!((heat_capacity(&TWO_LEVEL, 1.0) - 0.419974).abs() < 1e-6);
        assert!(heat_capacity(&TWO_LEVEL, 1e-8) < 1e-15);
        assert!(heat_capacity(&TWO_LEVEL, 1e3) < 1e-300);
    }

    #[test]
    fn heat_capacity_matches_energy_derivative_at_peak() {
        let (dec, _) = bath(10);
        let peak = find_critical_temperature(&dec.values, &TemperatureScan::default_for(10)).unwrap();
        let t = peak.t_c;
        let h = 1e-4 * t;
        let fd = (internal_energy(&dec.values, 1.0 / (t + h)) - internal_energy(&dec.values, 1.0 / (t - h))) / (2.0 * h);
        assert!(((fd - peak.c_max) / peak.c_max).abs() < 1e-6);
    }

    #[test]
    fn mean_excitations_two_level_is_half() {
        let (dec, nop) = bath(1);
        for &beta in &[1e-3, 0.5, 1.0, 7.0, 100.0] {
            assert!((mean_excitations(&dec, &nop, beta).unwrap() - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn mean_excitations_high_temperature_and_conventions() {
        let n_e = 9;
        let spec = BathSpec::new(n_e, 1.0).unwrap();
        let dec = eigendecompose(&build_hamiltonian(&spec).unwrap()).unwrap();
        let pairs = number_operator(&spec, NumberConvention::Pairs).unwrap();
        let quanta = number_operator(&spec, NumberConvention::Quanta).unwrap();
        assert!((mean_excitations(&dec, &pairs, 1e-12).unwrap() - n_e as f64 / 2.0).abs() < 1e-9);
        for &beta in &[0.01, 0.2, 1.0, 3.0] {
            let p = mean_excitations(&dec, &pairs, beta).unwrap();
            let q = mean_excitations(&dec, &quanta, beta).unwrap();
            assert!((q - 2.0 * p).abs() <= 1e-14 * q.max(1.0));
        }
    }

    #[test]
    fn mean_excitations_dimension_mismatch() {
        let (dec, _) = bath(3);
        let (_, nop) = bath(4);
        assert!(matches!(
            mean_excitations(&dec, &nop, 1.0),
            Err(Error::DimensionMismatch { expected: 4, got: 5 })
        ));
    }

    #[test]
    fn schottky_critical_temperature() {
        let x_star = schottky_root();
        assert!((x_star - 1.19968).abs() < 1e-5);
        let peak = find_critical_temperature(&TWO_LEVEL, &TemperatureScan::default_for(1)).unwrap();
        assert!((peak.t_c - 1.0 / x_star).abs() < 1e-7, "{}", peak.t_c);
        assert!((peak.t_c - 0.833557).abs() < 1e-5);
        assert!(peak.curvature < 0.0);
    }

    #[test]
    fn critical_temperature_is_scale_invariant() {
        let (dec, _) = bath(6);
        let scan = TemperatureScan::default_for(6);
        let base = find_critical_temperature(&dec.values, &scan).unwrap();
        let alpha = 3.0;
        let scaled: Vec<f64> = dec.values.iter().map(|e| alpha * e).collect();
        let scan3 = TemperatureScan { t_max: alpha * scan.t_max, ..scan };
        let peak = find_critical_temperature(&scaled, &scan3).unwrap();
        assert!((peak.t_c / alpha - base.t_c).abs() < 1e-7 * base.t_c);
    }

    #[test]
    fn flat_spectrum_has_no_transition() {
        let scan = TemperatureScan::default_for(3);
        assert!(matches!(find_critical_temperature(&[0.7, 0.7, 0.7], &scan), Err(Error::NoTransition)));
        assert!(matches!(find_critical_temperature(&[0.7], &scan), Err(Error::NoTransition)));
    }

    #[test]
    fn boundary_maximum_is_range_error() {
        let scan = TemperatureScan {
            t_min: 1e-2,
            t_max: 0.5,
            points: 200,
            rel_tol: 1e-8,
        };
        assert!(matches!(find_critical_temperature(&TWO_LEVEL, &scan), Err(Error::ScanBoundary { .. })));
        let scan = TemperatureScan { t_min: 2.0, t_max: 50.0, ..scan };
        assert!(matches!(find_critical_temperature(&TWO_LEVEL, &scan), Err(Error::ScanBoundary { .. })));
    }

    #[test]
    fn curve_shape_on_default_grid() {
        let (dec, nop) = bath(1);
        let grid = TemperatureScan::<f64>::default_for(1).grid();
        let curve = thermo_curve(&dec, &nop, &grid).unwrap();
        let report = CurveReport::from_curve(&curve);
        assert!(report.is_unimodal());
        assert!(curve.iter().all(|o| (o.n_bar - 0.5).abs() < 1e-14));
        assert!(curve.windows(2).all(|w| w[1].energy >= w[0].energy));
        assert!(curve.iter().all(|o| o.heat_capacity >= 0.0));
    }

    #[test]
    fn thermo_curve_rejects_bad_grids() {
        let (dec, nop) = bath(2);
        assert!(thermo_curve(&dec, &nop, &[1.0, 0.5]).is_err());
        assert!(thermo_curve(&dec, &nop, &[0.0, 0.5]).is_err());
    }

    #[test]
    fn critical_temperature_rises_with_excitations() {
        let mut last = 0.0;
        for n_e in 1..=20 {
            let (dec, _) = bath(n_e);
            let peak = find_critical_temperature(&dec.values, &TemperatureScan::default_for(n_e)).unwrap();
            assert!(peak.t_c > last);
            last = peak.t_c;
        }
    }

    #[test]
    fn single_precision_peak() {
        let peak = find_critical_temperature(&[-1.0_f32, 1.0], &TemperatureScan {
            rel_tol: 1e-4,
            ..TemperatureScan::default_for(1)
        })
        .unwrap();
        assert!((peak.t_c - 0.833557).abs() < 1e-3);
    }
}
