//! Physical constants, unit conversions and the reduced-unit scale.
//!
//! Thermodynamics runs in units of the bath energy `eta`: energies as
//! `E / eta`, temperatures as `t = k_B T / eta`. SI values appear only at
//! the boundary, where they are converted through [`ReducedScale`].

use std::f64::consts::PI;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Joules per electron-volt (exact by SI definition).
pub const JOULES_PER_EV: f64 = 1.602176634e-19;

/// Picokelvin-seconds per kelvin-second.
pub const PK_S_PER_K_S: f64 = 1e12;

/// CODATA 2018 constants plus the atomic mass used for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J s.
    pub hbar: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Atomic mass, kg. Cesium-133.
    pub m_atom: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar: 1.054571817e-34,
        k_b: 1.380649e-23,
        c: 2.99792458e8,
        m_atom: 2.20694650e-25,
    };

    /// `hbar / (2 pi k_B)` in K s.
    pub fn kappa_kelvin_seconds(&self) -> f64 {
        self.hbar / (2.0 * PI * self.k_b)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

/// Theoretical Unruh ratio `hbar / (2 pi k_B)` in pK s.
pub fn kappa_theory() -> f64 {
    PhysicalConstants::CODATA_2018.kappa_kelvin_seconds() * PK_S_PER_K_S
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnergyUnit {
    #[serde(rename = "J")]
    Joule,
    #[serde(rename = "eV")]
    ElectronVolt,
    #[serde(rename = "neV")]
    NanoElectronVolt,
}

impl EnergyUnit {
    /// Joules per one unit.
    fn joules(self) -> f64 {
        match self {
            EnergyUnit::Joule => 1.0,
            EnergyUnit::ElectronVolt => JOULES_PER_EV,
            EnergyUnit::NanoElectronVolt => JOULES_PER_EV * 1e-9,
        }
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" => Ok(EnergyUnit::Joule),
            "eV" => Ok(EnergyUnit::ElectronVolt),
            "neV" => Ok(EnergyUnit::NanoElectronVolt),
            other => Err(Error::Config(format!("unknown energy unit `{other}`"))),
        }
    }
}

/// Converts an energy in joules to `target`.
pub fn convert_energy(joules: f64, target: EnergyUnit) -> Result<f64> {
    if !joules.is_finite() {
        return Err(Error::Domain(format!("energy {joules} is not finite")));
    }
    Ok(joules / target.joules())
}

/// Inverse of [`convert_energy`].
pub fn energy_to_joules(value: f64, unit: EnergyUnit) -> f64 {
    value * unit.joules()
}

/// Maps kelvin to reduced temperature `t = k_B T / eta` and back.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedScale {
    eta: f64,
    k_b: f64,
}

impl ReducedScale {
    pub fn new(eta: f64, constants: &PhysicalConstants) -> Result<Self> {
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::Domain(format!("eta must be positive, got {eta}")));
        }
        Ok(Self {
            eta,
            k_b: constants.k_b,
        })
    }

    /// Bath energy scale, J.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn t_of(&self, kelvin: f64) -> f64 {
        self.k_b * kelvin / self.eta
    }

    pub fn kelvin_of(&self, t: f64) -> f64 {
        t * self.eta / self.k_b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn kappa_theory_value() {
        let k = kappa_theory();
        assert!((k - 1.2156).abs() <= 5e-4, "{k}");
        // three significant figures against the quoted 1.22
        assert_eq!(format!("{:.2}", k), "1.22");
        assert_eq!(kappa_theory().to_bits(), kappa_theory().to_bits());
    }

    #[test]
    fn kappa_times_a_over_c_is_kelvin() {
        let c = PhysicalConstants::CODATA_2018;
        // K s times (m/s^2)/(m/s) = K
        let t = c.kappa_kelvin_seconds() * c.c / c.c;
        assert_relative_eq!(t, kappa_theory() / PK_S_PER_K_S, max_relative = 1e-15);
    }

    #[test]
    fn constants_positive() {
        let c = PhysicalConstants::CODATA_2018;
        for v in [c.hbar, c.k_b, c.c, c.m_atom] {
            assert!(v > 0.0);
        }
    }

    #[test]
    fn energy_conversions() {
        assert_eq!(convert_energy(JOULES_PER_EV, EnergyUnit::ElectronVolt).unwrap(), 1.0);
        // 1.7253e-30 J is 1.0768e-11 eV, i.e. about 0.01077 neV
        let nev = convert_energy(1.7253e-30, EnergyUnit::NanoElectronVolt).unwrap();
        assert!((nev - 1.0768e-2).abs() < 5e-6, "{nev}");
        assert_eq!(convert_energy(0.0, EnergyUnit::ElectronVolt).unwrap(), 0.0);
        assert_eq!(convert_energy(3.5, EnergyUnit::Joule).unwrap(), 3.5);
        assert!(convert_energy(f64::NAN, EnergyUnit::Joule).is_err());
    }

    #[test]
    fn unknown_unit_is_config_error() {
        assert!(matches!("keV".parse::<EnergyUnit>(), Err(Error::Config(_))));
        assert_eq!("neV".parse::<EnergyUnit>().unwrap(), EnergyUnit::NanoElectronVolt);
    }

    #[test]
    fn energy_round_trip_within_one_ulp() {
        for &x in &[1.7253e-30, 3.1e-19, 42.0, 1e-40] {
            for unit in [EnergyUnit::ElectronVolt, EnergyUnit::NanoElectronVolt] {
                let back = energy_to_joules(convert_energy(x, unit).unwrap(), unit);
                assert!(((back - x) / x).abs() <= f64::EPSILON, "{x} {back}");
            }
        }
    }

    #[test]
    fn reduced_scale_is_monotone_and_invertible() {
        let s = ReducedScale::new(1.7253e-30, &PhysicalConstants::CODATA_2018).unwrap();
        assert!(s.t_of(2e-7) > s.t_of(1e-7));
        assert_relative_eq!(s.kelvin_of(s.t_of(1e-7)), 1e-7, max_relative = 1e-15);
        assert!(ReducedScale::new(0.0, &PhysicalConstants::CODATA_2018).is_err());
    }
}
