//! Eigendecomposition of the zero-diagonal symmetric tridiagonal bath
//! matrices.
//!
//! The fast path is implicit-shift QL with Wilkinson shifts and Givens
//! rotations accumulated into the eigenvector matrix. Sturm counts,
//! bisection and the characteristic-polynomial recurrence are kept as an
//! independent slow path for validation.

use crate::error::{Error, Result};
use crate::hamiltonian::GaugeReducedHamiltonian;
use crate::scalar::Real;

/// QL sweeps allowed per eigenvalue before giving up.
pub const MAX_SWEEPS_PER_EIGENVALUE: usize = 50;

/// Ascending eigenvalues with orthonormal eigenvectors stored column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition<T> {
    pub values: Vec<T>,
    vectors: Vec<T>,
    dim: usize,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Eigenvector of `values[l]`, normalized, largest-magnitude component
    /// positive.
    pub fn vector(&self, l: usize) -> &[T] {
        &self.vectors[l * self.dim..(l + 1) * self.dim]
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[T]> {
        self.vectors.chunks_exact(self.dim)
    }

    /// `max_l ||H psi_l - eps_l psi_l||_2`.
    pub fn max_residual(&self, h: &GaugeReducedHamiltonian<T>) -> T {
        self.values
            .iter()
            .zip(self.vectors())
            .map(|(&e, v)| {
                h.apply(v)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (&hv, &x)| {
                        let r = hv - e * x;
                        acc + r * r
                    })
                    .sqrt()
            })
            .fold(T::zero(), T::max)
    }

    /// `max_ij |psi_i . psi_j - delta_ij|`.
    pub fn orthonormality_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                let dot = self
                    .vector(i)
                    .iter()
                    .zip(self.vector(j))
                    .fold(T::zero(), |acc, (&a, &b)| acc + a * b);
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

pub fn eigendecompose<T: Real>(h: &GaugeReducedHamiltonian<T>) -> Result<EigenDecomposition<T>> {
    let n = h.dim();
    if n < 2 {
        return Err(Error::DegenerateBath);
    }

    let mut d = vec![T::zero(); n];
    // e[i] couples i and i+1; e[n-1] is workspace.
    let mut e = h.offdiag().to_vec();
    e.push(T::zero());
    let mut z = vec![T::zero(); n * n];
    for i in 0..n {
        z[i * n + i] = T::one();
    }

    implicit_ql(&mut d, &mut e, &mut z, n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).expect("eigenvalues are finite"));

    let mut values = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n * n);
    for &l in &order {
        values.push(d[l]);
        let col = &z[l * n..(l + 1) * n];
        let mut pivot = 0;
        for (k, &x) in col.iter().enumerate() {
            if x.abs() > col[pivot].abs() {
                pivot = k;
            }
        }
        let sign = if col[pivot] < T::zero() { -T::one() } else { T::one() };
        vectors.extend(col.iter().map(|&x| sign * x));
    }

    Ok(EigenDecomposition {
        values,
        vectors,
        dim: n,
    })
}

fn implicit_ql<T: Real>(d: &mut [T], e: &mut [T], z: &mut [T], n: usize) -> Result<()> {
    let eps = T::epsilon();
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd || e[m].abs() < T::min_positive_value() {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::NoConvergence { dim: n });
            }

            // Wilkinson shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (T::two() * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut underflow = false;

            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T::two() * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                let (left, right) = z.split_at_mut((i + 1) * n);
                let col_i = &mut left[i * n..];
                let col_next = &mut right[..n];
                for (zi, zn) in col_i.iter_mut().zip(col_next.iter_mut()) {
                    let f = *zn;
                    *zn = s * *zi + c * f;
                    *zi = c * *zi - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}

/// Number of eigenvalues strictly below `x`, from the signs of the `LDL^T`
/// pivots of `H - x I`.
pub fn sturm_count<T: Real>(h: &GaugeReducedHamiltonian<T>, x: T) -> usize {
    let tiny = T::min_positive_value().sqrt();
    // A zero pivot means x is an eigenvalue; nudging it positive counts as
    // evaluating just below x.
    let guard = |q: T| if q == T::zero() { tiny } else { q };
    let mut q = guard(-x);
    let mut count = usize::from(q < T::zero());
    for &b in h.offdiag() {
        q = guard(-x - b * b / q);
        count += usize::from(q < T::zero());
    }
    count
}

/// `det(H - x I)` as `mantissa * 2^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue<T> {
    pub mantissa: T,
    pub exponent: i32,
}

impl<T: Real> ScaledValue<T> {
    /// Collapses to a plain value; may overflow to infinity or underflow to zero.
    pub fn value(&self) -> T {
        self.mantissa * T::two().powi(self.exponent)
    }

    pub fn signum(&self) -> T {
        if self.mantissa == T::zero() {
            T::zero()
        } else {
            self.mantissa.signum()
        }
    }
}

/// `p_k = -x p_{k-1} - b_{k-1}^2 p_{k-2}` with `p_0 = 1`, `p_1 = -x`,
/// rescaled by powers of two whenever `|p_k|` leaves `[2^-64, 2^64]`.
pub fn charpoly_eval<T: Real>(h: &GaugeReducedHamiltonian<T>, x: T) -> ScaledValue<T> {
    let big = T::two().powi(64);
    let small = T::two().powi(-64);
    let mut exponent = 0i32;
    let mut p_prev = T::one();
    let mut p = -x;
    for &b in h.offdiag() {
        let next = -x * p - b * b * p_prev;
        p_prev = p;
        p = next;
        let mag = p.abs().max(p_prev.abs());
        if mag > big {
            p = p * small;
            p_prev = p_prev * small;
            exponent += 64;
        } else if mag != T::zero() && mag < small {
            p = p * big;
            p_prev = p_prev * big;
            exponent -= 64;
        }
    }
    ScaledValue {
        mantissa: p,
        exponent,
    }
}

/// Gershgorin radius: every eigenvalue lies in `[-R, R]`.
pub fn gershgorin_radius<T: Real>(h: &GaugeReducedHamiltonian<T>) -> T {
    let b = h.offdiag();
    (0..h.dim())
        .map(|i| {
            let left = if i > 0 { b[i - 1].abs() } else { T::zero() };
            let right = if i < b.len() { b[i].abs() } else { T::zero() };
            left + right
        })
        .fold(T::zero(), T::max)
}

/// `k`-th smallest eigenvalue (0-based) by Sturm bisection.
pub fn bisect_eigenvalue<T: Real>(h: &GaugeReducedHamiltonian<T>, k: usize) -> T {
    assert!(k < h.dim(), "eigenvalue index out of range");
    let radius = gershgorin_radius(h);
    let mut lo = -radius - T::one();
    let mut hi = radius + T::one();
    // invariant: count(lo) <= k < count(hi)
    for _ in 0..512 {
        let mid = lo + (hi - lo) / T::two();
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(h, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo + (hi - lo) / T::two()
}

/// All eigenvalues by bisection, ascending.
pub fn bisect_spectrum<T: Real>(h: &GaugeReducedHamiltonian<T>) -> Vec<T> {
    (0..h.dim()).map(|k| bisect_eigenvalue(h, k)).collect()
}
