//! CSV and JSON renderers.
//!
//! CSV files have a header row, LF line endings and every float in
//! scientific notation with 17 significant digits, which round-trips f64
//! exactly.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::phys::{kappa_theory, PhysicalConstants, ReducedScale};
use crate::unruh::{BathOutcome, BathResult, KappaFit, EXPERIMENT_KAPPA_PKS, EXPERIMENT_KAPPA_UNCERTAINTY_PKS};

/// `{:.16e}`: one leading digit plus sixteen decimals.
pub fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub const HEAT_CAPACITY_HEADER: [&str; 5] = ["T_kelvin", "t_reduced", "C_over_kB", "E_over_eta", "n_bar"];
pub const TC_TABLE_HEADER: [&str; 5] = ["Ne", "Tc_kelvin", "n_bar_at_Tc", "A_sim_m_per_s2", "eta_J"];
pub const SPECTRUM_HEADER: [&str; 3] = ["index", "eigenvalue_eta", "eigenvalue_J"];
pub const INVARIANCE_HEADER: [&str; 4] = [
    "gtau",
    "coefficient_residual",
    "symplectic_residual",
    "fock_safe_block_residual",
];

pub fn heat_capacity_filename(n_e: usize) -> String {
    format!("heat_capacity_Ne{n_e}.csv")
}

pub fn heat_capacity_csv(bath: &BathOutcome) -> Result<String> {
    let scale = ReducedScale::new(bath.result.eta, &PhysicalConstants::CODATA_2018)?;
    Ok(csv(
        &HEAT_CAPACITY_HEADER,
        bath.curve.iter().map(|o| {
            vec![
                sci(scale.kelvin_of(o.t)),
                sci(o.t),
                sci(o.heat_capacity),
                sci(o.energy),
                sci(o.n_bar),
            ]
        }),
    ))
}

pub fn tc_table_csv(results: &[BathResult]) -> String {
    csv(
        &TC_TABLE_HEADER,
        results.iter().map(|r| {
            vec![
                r.n_e.to_string(),
                sci(r.t_c_kelvin),
                sci(r.n_bar_at_tc),
                sci(r.a_sim),
                sci(r.eta),
            ]
        }),
    )
}

pub fn spectrum_csv(values_eta: &[f64], eta: f64) -> String {
    csv(
        &SPECTRUM_HEADER,
        values_eta
            .iter()
            .enumerate()
            .map(|(i, &v)| vec![i.to_string(), sci(v), sci(v * eta)]),
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvarianceRow {
    pub gtau: f64,
    pub coefficient: f64,
    pub symplectic: f64,
    pub fock_safe_block: f64,
}

pub fn invariance_csv(rows: &[InvarianceRow]) -> String {
    csv(
        &INVARIANCE_HEADER,
        rows.iter().map(|r| {
            vec![
                sci(r.gtau),
                sci(r.coefficient),
                sci(r.symplectic),
                sci(r.fock_safe_block),
            ]
        }),
    )
}

#[derive(Debug, Serialize)]
#[allow(non_snake_case)]
struct Experiment {
    label: &'static str,
    kappa_pKs: f64,
    uncertainty_pKs: f64,
}

#[derive(Debug, Serialize)]
#[allow(non_snake_case)]
struct FitDocument {
    kappa_pKs: f64,
    kappa_theory_pKs: f64,
    ratio: f64,
    n_points: usize,
    max_rel_residual: f64,
    experiment: Experiment,
}

pub fn kappa_fit_json(fit: &KappaFit) -> String {
    let doc = FitDocument {
        kappa_pKs: fit.kappa,
        kappa_theory_pKs: kappa_theory(),
        ratio: fit.kappa_theory_ratio,
        n_points: fit.n_points,
        max_rel_residual: fit.max_rel_residual,
        experiment: Experiment {
            label: "experiment",
            kappa_pKs: EXPERIMENT_KAPPA_PKS,
            uncertainty_pKs: EXPERIMENT_KAPPA_UNCERTAINTY_PKS,
        },
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("fit document serializes");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

pub fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits_round_trip() {
        for &x in &[1.0415401745617251e-7, 0.1 + 0.2, -3.0, 0.0, 6.02214076e23, f64::MIN_POSITIVE] {
            let s = sci(x);
            let mantissa = s.split('e').next().unwrap().trim_start_matches('-');
            assert_eq!(mantissa.replace('.', "").len(), 17, "{s}");
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn spectrum_layout() {
        let s = spectrum_csv(&[-1.0, 1.0], 2.0);
        assert_eq!(
            s,
            "index,eigenvalue_eta,eigenvalue_J\n\
             0,-1.0000000000000000e0,-2.0000000000000000e0\n\
             1,1.0000000000000000e0,2.0000000000000000e0\n"
        );
    }

    #[test]
    fn fit_document_keys() {
        let fit = KappaFit {
            kappa: 1.21,
            n_points: 16,
            max_rel_residual: 0.01,
            kappa_theory_ratio: 0.995,
        };
        let v: serde_json::Value = serde_json::from_str(&kappa_fit_json(&fit)).unwrap();
        for key in ["kappa_pKs", "kappa_theory_pKs", "ratio", "n_points", "max_rel_residual"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["experiment"]["label"], "experiment");
        assert_eq!(v["experiment"]["kappa_pKs"], 1.17);
        assert_eq!(v["experiment"]["uncertainty_pKs"], 0.07);
    }
}
