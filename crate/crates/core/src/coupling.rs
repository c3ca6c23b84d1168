//! Characteristic scales of a snapshot and its coupling frequency `g_ch`.
//!
//! Chain: `T_ch = hbar A / (2 pi k_B c)`, thermal wavelength `lambda_ch`,
//! wavenumber `k_ch = 2 pi / lambda_ch`, which with `k_ch^2 = m omega / hbar`
//! fixes `omega_ch = A / c`. The saturated uncertainty relation gives
//! `tau_ch = c / (A Delta n)` and substituting both into the general
//! coupling `(1 / 2 tau) ln coth(pi omega c / 4 A)` yields
//! `g_ch = sigma A / (2 c)` with `sigma = Delta n ln coth(pi / 4)`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::phys::PhysicalConstants;
use crate::scalar::ln_coth;

const CONSTS: PhysicalConstants = PhysicalConstants::CODATA_2018;

fn require_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {value}")))
    }
}

/// Number fluctuation of a Bose gas at `mu -> 0`, `T = T_ch`:
/// `e^{pi/2} / (e^pi - 1)`.
pub fn delta_n() -> f64 {
    FRAC_PI_2.exp() / PI.exp_m1()
}

/// Bose number fluctuation `exp(x/2) / (exp(x) - 1)` with `x = (E - mu) / k_B T`.
pub fn bose_number_fluctuation(reduced_energy: f64) -> f64 {
    (0.5 * reduced_energy).exp() / reduced_energy.exp_m1()
}

/// `sigma = Delta n ln coth(pi / 4)`.
pub fn sigma() -> f64 {
    delta_n() * ln_coth(FRAC_PI_4)
}

/// `g_ch = sigma A_ch / (2 c)`, rad/s.
pub fn coupling_frequency(a_ch: f64) -> Result<f64> {
    require_positive("A_ch", a_ch)?;
    Ok(sigma() * a_ch / (2.0 * CONSTS.c))
}

/// General coupling `(1 / 2 tau) ln coth(pi omega c / (4 A))`.
pub fn coupling_frequency_general(tau: f64, omega: f64, accel: f64) -> Result<f64> {
    require_positive("tau", tau)?;
    require_positive("omega", omega)?;
    require_positive("A", accel)?;
    let arg = PI * omega * CONSTS.c / (4.0 * accel);
    if !(arg > 0.0) {
        return Err(Error::Domain(format!("coth argument {arg} is not positive")));
    }
    Ok(ln_coth(arg) / (2.0 * tau))
}

/// `omega_ch = A_ch / c`.
pub fn characteristic_frequency(a_ch: f64) -> Result<f64> {
    require_positive("A_ch", a_ch)?;
    Ok(a_ch / CONSTS.c)
}

/// `tau_ch = c / (A_ch Delta n)`.
pub fn characteristic_time(a_ch: f64) -> Result<f64> {
    require_positive("A_ch", a_ch)?;
    Ok(CONSTS.c / (a_ch * delta_n()))
}

/// `T_ch = hbar A_ch / (2 pi k_B c)`, kelvin.
pub fn characteristic_temperature(a_ch: f64) -> Result<f64> {
    require_positive("A_ch", a_ch)?;
    Ok(CONSTS.kappa_kelvin_seconds() * a_ch / CONSTS.c)
}

/// Thermal de Broglie wavelength `sqrt(2 pi hbar^2 / (m k_B T))`, m.
pub fn thermal_wavelength(temperature: f64, mass: f64) -> Result<f64> {
    require_positive("T", temperature)?;
    require_positive("m", mass)?;
    Ok((2.0 * PI * CONSTS.hbar * CONSTS.hbar / (mass * CONSTS.k_b * temperature)).sqrt())
}

/// `k = 2 pi / lambda`.
pub fn wavenumber_from_wavelength(lambda: f64) -> Result<f64> {
    require_positive("lambda", lambda)?;
    Ok(2.0 * PI / lambda)
}

/// Every scale of one snapshot, derived from its characteristic acceleration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicScales {
    pub a_ch: f64,
    pub t_ch: f64,
    pub lambda_ch: f64,
    pub k_ch: f64,
    pub omega_ch: f64,
    pub tau_ch: f64,
    pub delta_n: f64,
    pub sigma: f64,
    pub g_ch: f64,
}

impl CharacteristicScales {
    pub fn from_acceleration(a_ch: f64, constants: &PhysicalConstants) -> Result<Self> {
        let t_ch = characteristic_temperature(a_ch)?;
        let lambda_ch = thermal_wavelength(t_ch, constants.m_atom)?;
        Ok(Self {
            a_ch,
            t_ch,
            lambda_ch,
            k_ch: wavenumber_from_wavelength(lambda_ch)?,
            omega_ch: characteristic_frequency(a_ch)?,
            tau_ch: characteristic_time(a_ch)?,
            delta_n: delta_n(),
            sigma: sigma(),
            g_ch: coupling_frequency(a_ch)?,
        })
    }

    /// Bath energy scale `eta = hbar g_ch`, J.
    pub fn eta(&self) -> f64 {
        CONSTS.hbar * self.g_ch
    }
}
