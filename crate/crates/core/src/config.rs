//! Simulation configuration: JSON ingestion, defaults and validation.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::NumberConvention;
use crate::thermo::TemperatureScan;

/// Environment variable that overrides the output directory.
pub const OUTPUT_DIR_ENV: &str = "UNRUH_SIM_OUTPUT_DIR";

/// Characteristic acceleration shared by every bath, m/s^2.
pub const DEFAULT_A_CH: f64 = 1.07e14;

/// Modulation frequency `2 pi x 2.1 kHz`, rad/s.
pub const DEFAULT_OMEGA_MOD: f64 = 2.0 * PI * 2100.0;

/// Sixteen pair cutoffs whose `(A_sim / c, T_c)` points sit on the Unruh
/// line, with `n_bar(T_c)` between 6.4 and 16.2. Chosen by sweeping `N_e`
/// over `1..=200`: the per-bath ratio `T_c / T_U(n_bar)` is 2.27 at
/// `N_e = 1`, falls below 1.05 near `N_e = 48`, crosses 1 between 120 and
/// 125 and reaches 0.986 at 200.
pub const DEFAULT_NE_LIST: [usize; 16] = [
    80, 88, 96, 104, 112, 120, 128, 136, 144, 152, 160, 168, 176, 184, 192, 200,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScanConfig {
    /// Lowest reduced temperature `k_B T / eta`.
    pub t_min: f64,
    /// Highest reduced temperature; `None` means `10 N_e` per bath.
    pub t_max: Option<f64>,
    pub points: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            t_min: 1e-2,
            t_max: None,
            points: TemperatureScan::<f64>::DEFAULT_POINTS,
        }
    }
}

impl ScanConfig {
    pub fn for_bath(&self, n_e: usize) -> TemperatureScan<f64> {
        let base = TemperatureScan::<f64>::default_for(n_e);
        TemperatureScan {
            t_min: self.t_min,
            t_max: self.t_max.unwrap_or(base.t_max),
            points: self.points,
            rel_tol: base.rel_tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulationConfig {
    /// Characteristic acceleration, m/s^2.
    pub a_ch: f64,
    /// Modulation angular frequency, rad/s.
    pub omega_mod: f64,
    pub ne_list: Vec<usize>,
    pub number_convention: NumberConvention,
    pub t_scan: ScanConfig,
    pub output_dir: PathBuf,
    pub parallel: bool,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        Self {
            a_ch: DEFAULT_A_CH,
            omega_mod: DEFAULT_OMEGA_MOD,
            ne_list: DEFAULT_NE_LIST.to_vec(),
            number_convention: NumberConvention::Pairs,
            t_scan: ScanConfig::default(),
            output_dir: PathBuf::from("output"),
            parallel: false,
        }
    }
}

fn positive(field: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::Validation {
            field,
            message: format!("must be positive and finite, got {v}"),
        })
    }
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<()> {
        positive("a_ch", self.a_ch)?;
        positive("omega_mod", self.omega_mod)?;
        if self.ne_list.is_empty() {
            return Err(Error::Validation {
                field: "ne_list",
                message: "ne_list non-empty".into(),
            });
        }
        if self.ne_list.contains(&0) {
            return Err(Error::Validation {
                field: "ne_list",
                message: "entries must be strictly positive".into(),
            });
        }
        if self.ne_list.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Validation {
                field: "ne_list",
                message: "entries must be strictly increasing".into(),
            });
        }
        if self.t_scan.points < 100 {
            return Err(Error::Validation {
                field: "t_scan.points",
                message: format!("need at least 100 points, got {}", self.t_scan.points),
            });
        }
        positive("t_scan.t_min", self.t_scan.t_min)?;
        if let Some(t_max) = self.t_scan.t_max {
            positive("t_scan.t_max", t_max)?;
            if t_max <= self.t_scan.t_min {
                return Err(Error::Validation {
                    field: "t_scan.t_max",
                    message: format!("t_min {} must be below t_max {t_max}", self.t_scan.t_min),
                });
            }
        } else {
            let smallest = 10.0 * self.ne_list[0] as f64;
            if smallest <= self.t_scan.t_min {
                return Err(Error::Validation {
                    field: "t_scan.t_min",
                    message: format!("t_min {} must be below the default t_max {smallest}", self.t_scan.t_min),
                });
            }
        }
        Ok(())
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let cfg: SimulationConfig = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }
}

pub fn load_config(path: impl AsRef<Path>) -> Result<SimulationConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    SimulationConfig::from_json_str(&text)
}
