//! From bath critical points to the simulated Unruh line and its slope.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::config::SimulationConfig;
use crate::coupling::CharacteristicScales;
use crate::eigensolve::eigendecompose;
use crate::error::{Error, Result};
use crate::hamiltonian::{build_hamiltonian, number_operator, BathSpec};
use crate::phys::{kappa_theory, PhysicalConstants, ReducedScale, PK_S_PER_K_S};
use crate::thermo::{find_critical_temperature, BathThermo, CurveReport, HeatCapacityPeak, ThermalObservables};

const CONSTS: PhysicalConstants = PhysicalConstants::CODATA_2018;

/// Measured Unruh ratio of the cesium experiment, pK s, with its uncertainty.
pub const EXPERIMENT_KAPPA_PKS: f64 = 1.17;
pub const EXPERIMENT_KAPPA_UNCERTAINTY_PKS: f64 = 0.07;

/// `A = 2 pi c E / (hbar ln(1 + 1/n))` with `E = hbar omega / 2`, i.e.
/// `pi c omega / ln(1 + 1/n)`.
pub fn acceleration_from_population(n_bar: f64, omega_mod: f64) -> Result<f64> {
    if !(n_bar > 0.0 && n_bar.is_finite()) {
        return Err(Error::Domain(format!("mean population must be positive, got {n_bar}")));
    }
    if !(omega_mod > 0.0 && omega_mod.is_finite()) {
        return Err(Error::Domain(format!("modulation frequency must be positive, got {omega_mod}")));
    }
    Ok(PI * CONSTS.c * omega_mod / n_bar.recip().ln_1p())
}

/// Large-population form `pi c omega n`. Diagnostic only.
pub fn acceleration_linearized(n_bar: f64, omega_mod: f64) -> f64 {
    PI * CONSTS.c * omega_mod * n_bar
}

/// `T_U = hbar a / (2 pi k_B c)`, kelvin.
pub fn unruh_temperature(accel: f64) -> Result<f64> {
    if !(accel > 0.0 && accel.is_finite()) {
        return Err(Error::Domain(format!("acceleration must be positive, got {accel}")));
    }
    Ok(CONSTS.kappa_kelvin_seconds() * accel / CONSTS.c)
}

/// One scatter point: a bath's critical temperature against its simulated
/// acceleration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathResult {
    pub n_e: usize,
    pub t_c_kelvin: f64,
    pub n_bar_at_tc: f64,
    pub a_sim: f64,
    /// Bath energy scale, J.
    pub eta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaFit {
    /// Fitted slope of `T_c` against `A / c`, pK s.
    pub kappa: f64,
    pub n_points: usize,
    /// `max_i |T_i - kappa x_i| / T_i`.
    pub max_rel_residual: f64,
    /// `kappa / kappa_theory()`.
    pub kappa_theory_ratio: f64,
}

/// Least-squares slope through the origin of `T_c` against `x = A_sim / c`.
pub fn fit_kappa(points: &[BathResult]) -> Result<KappaFit> {
    if points.len() < 2 {
        return Err(Error::Fit(format!("need at least 2 points, got {}", points.len())));
    }
    let first = points[0].a_sim;
    if points.iter().all(|p| p.a_sim == first) {
        return Err(Error::Fit("all accelerations coincide; slope undetermined".into()));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.a_sim / CONSTS.c).collect();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxt: f64 = xs.iter().zip(points).map(|(x, p)| x * p.t_c_kelvin).sum();
    if !(sxx > 0.0) {
        return Err(Error::Fit("zero spread in A / c".into()));
    }
    let slope = sxt / sxx;
    let max_rel_residual = xs
        .iter()
        .zip(points)
        .map(|(x, p)| ((p.t_c_kelvin - slope * x) / p.t_c_kelvin).abs())
        .fold(0.0, f64::max);
    let kappa = slope * PK_S_PER_K_S;
    Ok(KappaFit {
        kappa,
        n_points: points.len(),
        max_rel_residual,
        kappa_theory_ratio: kappa / kappa_theory(),
    })
}

/// Everything computed for one bath.
#[derive(Debug, Clone)]
pub struct BathOutcome {
    pub result: BathResult,
    pub peak: HeatCapacityPeak<f64>,
    /// Observables on the bath's scan grid.
    pub curve: Vec<ThermalObservables<f64>>,
    pub report: CurveReport,
}

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub scales: CharacteristicScales,
    pub baths: Vec<BathOutcome>,
    /// `None` when fewer than two distinct accelerations are available.
    pub fit: Option<KappaFit>,
}

impl PipelineOutput {
    pub fn results(&self) -> Vec<BathResult> {
        self.baths.iter().map(|b| b.result).collect()
    }
}

/// Runs one bath in reduced units (`eta = 1`) and restores SI at the end.
pub fn run_bath(config: &SimulationConfig, n_e: usize, scale: &ReducedScale) -> Result<BathOutcome> {
    let spec = BathSpec::new(n_e, 1.0)?;
    let h = build_hamiltonian(&spec)?;
    let decomp = eigendecompose(&h)?;
    let nop = number_operator(&spec, config.number_convention)?;
    let thermo = BathThermo::new(&decomp, &nop)?;

    let scan = config.t_scan.for_bath(n_e);
    let peak = find_critical_temperature(thermo.values(), &scan)?;
    let n_bar_at_tc = thermo.n_bar(peak.t_c);
    let curve: Vec<_> = scan.grid().into_iter().map(|t| thermo.at(t)).collect();
    let report = CurveReport::from_curve(&curve);

    let result = BathResult {
        n_e,
        t_c_kelvin: scale.kelvin_of(peak.t_c),
        n_bar_at_tc,
        a_sim: acceleration_from_population(n_bar_at_tc, config.omega_mod)?,
        eta: scale.eta(),
    };
    Ok(BathOutcome {
        result,
        peak,
        curve,
        report,
    })
}

pub fn run_pipeline(config: &SimulationConfig) -> Result<PipelineOutput> {
    config.validate()?;
    let scales = CharacteristicScales::from_acceleration(config.a_ch, &CONSTS)?;
    let scale = ReducedScale::new(scales.eta(), &CONSTS)?;

    let run = |&n_e: &usize| run_bath(config, n_e, &scale).map_err(|e| e.in_bath(n_e));
    // Collecting from an indexed parallel iterator keeps input order.
    let baths: Vec<BathOutcome> = if config.parallel {
        config.ne_list.par_iter().map(run).collect::<Result<_>>()?
    } else {
        config.ne_list.iter().map(run).collect::<Result<_>>()?
    };

    let results: Vec<BathResult> = baths.iter().map(|b| b.result).collect();
    let fit = match fit_kappa(&results) {
        Ok(fit) => Some(fit),
        Err(Error::Fit(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(PipelineOutput { scales, baths, fit })
}
