//! Simulated Unruh temperature from the critical temperatures of
//! Bose-Einstein thermal baths.
//!
//! Each bath is an `(N_e + 1)`-level pair-creation Hamiltonian in the
//! two-mode squeezed vacuum basis. Its heat-capacity peak gives a critical
//! temperature, the thermal mean excitation number at that peak gives a
//! simulated acceleration, and a line through the origin of `T_c` against
//! `A / c` recovers `hbar / (2 pi k_B)`.
//!
//! The numerical kernels (Hamiltonian, eigensolver, thermodynamics,
//! Bogoliubov algebra) are generic over [`Real`]; the physical layer works
//! in SI `f64` because the constants underflow single precision.

pub mod cli;
pub mod config;
pub mod coupling;
pub mod eigensolve;
pub mod error;
pub mod hamiltonian;
pub mod optimize;
pub mod output;
pub mod phys;
pub mod rindler;
pub mod scalar;
pub mod thermo;
pub mod unruh;

pub use config::{ScanConfig, SimulationConfig};
pub use error::{Error, Result};
pub use hamiltonian::{BathSpec, NumberConvention};
pub use phys::{PhysicalConstants, ReducedScale};
pub use scalar::Real;
pub use unruh::{BathResult, KappaFit, PipelineOutput};

/// Double-precision Hamiltonian, the type the pipeline runs on.
pub type Hamiltonian = hamiltonian::GaugeReducedHamiltonian<f64>;
/// Double-precision eigendecomposition.
pub type Decomposition = eigensolve::EigenDecomposition<f64>;
/// Double-precision number operator.
pub type NumberOperator = hamiltonian::NumberOperatorDiagonal<f64>;
/// Double-precision thermal observables at one temperature.
pub type Observables = thermo::ThermalObservables<f64>;
/// Double-precision heat-capacity peak in reduced units.
pub type Peak = thermo::HeatCapacityPeak<f64>;
/// Double-precision Bogoliubov transform.
pub type Bogoliubov = rindler::BogoliubovTransform<f64>;
/// Double-precision quadratic form over the pair monomials.
pub type PairForm = rindler::QuadraticForm<f64>;
