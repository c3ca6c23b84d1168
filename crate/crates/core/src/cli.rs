//! Batch commands behind the `unruh-sim` binary. Each computes everything
//! first and writes files afterwards, in a fixed order.

use std::path::{Path, PathBuf};

use crate::config::{SimulationConfig, OUTPUT_DIR_ENV};
use crate::coupling::CharacteristicScales;
use crate::eigensolve::eigendecompose;
use crate::error::{Error, Result};
use crate::hamiltonian::{build_hamiltonian, BathSpec};
use crate::output::{self, InvarianceRow};
use crate::phys::PhysicalConstants;
use crate::rindler::{fock_truncated_check, invariance_residual, rindler_transform, symplectic_residual};
use crate::unruh::{run_pipeline, KappaFit};

/// Coefficient-level and symplectic residual threshold.
pub const COEFFICIENT_THRESHOLD: f64 = 1e-10;
/// Truncated Fock safe-block threshold.
pub const FOCK_THRESHOLD: f64 = 1e-8;
/// Fock cutoff used by `invariance`.
pub const FOCK_DIM: usize = 16;

/// `--out` wins, then the environment variable, then the config value.
pub fn resolve_output_dir(cli_out: Option<&Path>, config_dir: &Path) -> PathBuf {
    if let Some(dir) = cli_out {
        return dir.to_path_buf();
    }
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => config_dir.to_path_buf(),
    }
}

/// Writes one heat-capacity curve per bath plus `tc_table.csv`.
pub fn cmd_sweep(config: &SimulationConfig, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let run = run_pipeline(config)?;
    let mut files = Vec::with_capacity(run.baths.len() + 1);
    for bath in &run.baths {
        files.push((
            out_dir.join(output::heat_capacity_filename(bath.result.n_e)),
            output::heat_capacity_csv(bath)?,
        ));
    }
    files.push((out_dir.join("tc_table.csv"), output::tc_table_csv(&run.results())));

    output::ensure_dir(out_dir)?;
    for (path, body) in &files {
        output::write_file(path, body)?;
    }
    Ok(files.into_iter().map(|(p, _)| p).collect())
}

/// Runs the pipeline and writes `kappa_fit.json`.
pub fn cmd_fit(config: &SimulationConfig, out_dir: &Path) -> Result<(PathBuf, KappaFit)> {
    let run = run_pipeline(config)?;
    let fit = run
        .fit
        .ok_or_else(|| Error::Fit("need at least two baths with distinct accelerations".into()))?;
    let body = output::kappa_fit_json(&fit);
    output::ensure_dir(out_dir)?;
    let path = out_dir.join("kappa_fit.json");
    output::write_file(&path, &body)?;
    Ok((path, fit))
}

/// Writes the spectrum of one bath in units of `eta` and joules.
pub fn cmd_spectrum(config: &SimulationConfig, n_e: usize, out_dir: &Path) -> Result<PathBuf> {
    config.validate()?;
    let scales = CharacteristicScales::from_acceleration(config.a_ch, &PhysicalConstants::CODATA_2018)?;
    let h = build_hamiltonian(&BathSpec::new(n_e, 1.0)?)?;
    let decomp = eigendecompose(&h)?;
    let body = output::spectrum_csv(&decomp.values, scales.eta());
    output::ensure_dir(out_dir)?;
    let path = out_dir.join(format!("spectrum_Ne{n_e}.csv"));
    output::write_file(&path, &body)?;
    Ok(path)
}

pub fn parse_gtau_list(text: &str) -> Result<Vec<f64>> {
    let values: Vec<f64> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| Error::Config(format!("`{s}` is not a number")))
        })
        .collect::<Result<_>>()?;
    if values.is_empty() {
        return Err(Error::Config("empty g tau list".into()));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Config(format!("g tau must be finite, got {bad}")));
    }
    Ok(values)
}

pub fn invariance_rows(gtau_list: &[f64]) -> Result<Vec<InvarianceRow>> {
    gtau_list
        .iter()
        .map(|&g| {
            let m = rindler_transform(g)?;
            Ok(InvarianceRow {
                gtau: g,
                coefficient: invariance_residual(g)?,
                symplectic: symplectic_residual(&m),
                fock_safe_block: fock_truncated_check(FOCK_DIM, g)?,
            })
        })
        .collect()
}

/// Writes `invariance.csv`; fails with a threshold breach (after writing)
/// if any residual exceeds its bound.
pub fn cmd_invariance(gtau_list: &[f64], out_dir: &Path) -> Result<PathBuf> {
    let rows = invariance_rows(gtau_list)?;
    output::ensure_dir(out_dir)?;
    let path = out_dir.join("invariance.csv");
    output::write_file(&path, &output::invariance_csv(&rows))?;
    let breaches: Vec<String> = rows
        .iter()
        .filter(|r| {
            !(r.coefficient <= COEFFICIENT_THRESHOLD
                && r.symplectic <= COEFFICIENT_THRESHOLD
                && r.fock_safe_block <= FOCK_THRESHOLD)
        })
        .map(|r| format!("g tau = {}", r.gtau))
        .collect();
    if breaches.is_empty() {
        Ok(path)
    } else {
        Err(Error::ThresholdBreach(breaches.join(", ")))
    }
}
