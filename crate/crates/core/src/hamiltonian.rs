//! Bath Hamiltonian in the two-mode squeezed vacuum basis `|n, n>`,
//! `n = 0..=N_e`.
//!
//! The pair-creation operator `i hbar g (a+_k a+_{-k} - a_k a_{-k})` acts on
//! `|n, n>` with `a+ a+ |n, n> = (n + 1) |n + 1, n + 1>`, which gives the
//! Hermitian tridiagonal matrix with `H[n-1, n] = -i n eta` and
//! `H[n, n-1] = +i n eta`. Conjugating by `D = diag(i^0, i^1, ..., i^N_e)`
//! turns it into the real symmetric matrix with off-diagonals `n eta`,
//! which is the only form the pipeline stores.

use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Size guard for the dense complex verification matrix.
pub const DENSE_MAX_NE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpec<T> {
    /// Maximum pair index `N_e`.
    pub n_e: usize,
    /// Energy scale `eta = hbar g_ch`, in whatever unit the caller works in.
    pub eta: T,
}

impl<T: Real> BathSpec<T> {
    pub fn new(n_e: usize, eta: T) -> Result<Self> {
        let spec = Self { n_e, eta };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_e == 0 {
            return Err(Error::DegenerateBath);
        }
        if !(self.eta > T::zero() && self.eta.is_finite()) {
            return Err(Error::Domain(format!("eta must be positive, got {}", self.eta)));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n_e + 1
    }
}

/// Real symmetric tridiagonal form with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeReducedHamiltonian<T> {
    offdiag: Vec<T>,
    eta: T,
}

impl<T: Real> GaugeReducedHamiltonian<T> {
    /// Builds from raw off-diagonal couplings. Used by tests and oracles;
    /// bath matrices come from [`build_hamiltonian`].
    pub fn from_offdiag(offdiag: Vec<T>, eta: T) -> Self {
        Self { offdiag, eta }
    }

    pub fn dim(&self) -> usize {
        self.offdiag.len() + 1
    }

    /// `offdiag()[j - 1] = j eta`, coupling `|j-1, j-1>` and `|j, j>`.
    pub fn offdiag(&self) -> &[T] {
        &self.offdiag
    }

    pub fn eta(&self) -> T {
        self.eta
    }

    /// Frobenius norm, the `||H||` that residual tolerances scale with.
    pub fn norm(&self) -> T {
        let sq = self.offdiag.iter().fold(T::zero(), |acc, &b| acc + b * b);
        (T::two() * sq).sqrt()
    }

    /// `y = H x`.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        let n = self.dim();
        assert_eq!(x.len(), n, "vector length must equal matrix dimension");
        let mut y = vec![T::zero(); n];
        for (j, &b) in self.offdiag.iter().enumerate() {
            y[j] = y[j] + b * x[j + 1];
            y[j + 1] = y[j + 1] + b * x[j];
        }
        y
    }
}

pub fn build_hamiltonian<T: Real>(spec: &BathSpec<T>) -> Result<GaugeReducedHamiltonian<T>> {
    spec.validate()?;
    let offdiag = (1..=spec.n_e)
        .map(|j| T::from_usize_exact(j) * spec.eta)
        .collect();
    Ok(GaugeReducedHamiltonian {
        offdiag,
        eta: spec.eta,
    })
}

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseComplex<T> {
    pub dim: usize,
    pub data: Vec<Complex<T>>,
}

impl<T: Real> DenseComplex<T> {
    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim + col]
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| self.get(r, c) == self.get(c, r).conj()))
    }
}

/// The literal complex Hermitian matrix, for checking the gauge reduction.
pub fn build_dense_complex<T: Real>(spec: &BathSpec<T>) -> Result<DenseComplex<T>> {
    spec.validate()?;
    if spec.n_e > DENSE_MAX_NE {
        return Err(Error::Guard(format!(
            "dense complex form limited to N_e <= {DENSE_MAX_NE}, got {}",
            spec.n_e
        )));
    }
    let dim = spec.dim();
    let mut data = vec![Complex::new(T::zero(), T::zero()); dim * dim];
    for n in 1..dim {
        let v = T::from_usize_exact(n) * spec.eta;
        data[(n - 1) * dim + n] = Complex::new(T::zero(), -v);
        data[n * dim + n - 1] = Complex::new(T::zero(), v);
    }
    Ok(DenseComplex { dim, data })
}

/// Diagonal gauge `D[n] = i^n` relating the two forms: `H_complex = D H_real D^*`.
pub fn gauge_phase<T: Real>(n: usize) -> Complex<T> {
    let (z, o) = (T::zero(), T::one());
    match n % 4 {
        0 => Complex::new(o, z),
        1 => Complex::new(z, o),
        2 => Complex::new(-o, z),
        _ => Complex::new(z, -o),
    }
}

/// What `N` counts on `|n, n>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumberConvention {
    /// Pair index `n`.
    #[default]
    Pairs,
    /// Total quanta `2n`.
    Quanta,
}

impl FromStr for NumberConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pairs" => Ok(NumberConvention::Pairs),
            "quanta" => Ok(NumberConvention::Quanta),
            other => Err(Error::Config(format!("unknown number convention `{other}`"))),
        }
    }
}

/// Diagonal of the number operator in the `|n, n>` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberOperatorDiagonal<T> {
    pub entries: Vec<T>,
    pub convention: NumberConvention,
}

impl<T: Real> NumberOperatorDiagonal<T> {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn max_entry(&self) -> T {
        self.entries.last().copied().unwrap_or_else(T::zero)
    }

    /// `<psi|N|psi>` for a real state vector.
    pub fn expectation(&self, psi: &[T]) -> T {
        self.entries
            .iter()
            .zip(psi)
            .fold(T::zero(), |acc, (&n, &c)| acc + n * c * c)
    }
}

pub fn number_operator<T: Real>(
    spec: &BathSpec<T>,
    convention: NumberConvention,
) -> Result<NumberOperatorDiagonal<T>> {
    spec.validate()?;
    let factor = match convention {
        NumberConvention::Pairs => 1,
        NumberConvention::Quanta => 2,
    };
    Ok(NumberOperatorDiagonal {
        entries: (0..spec.dim())
            .map(|n| T::from_usize_exact(factor * n))
            .collect(),
        convention,
    })
}
