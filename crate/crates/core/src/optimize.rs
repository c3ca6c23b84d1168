//! Bracketed one-dimensional maximization and grid helpers.

use crate::scalar::Real;

/// `points` log-spaced values from `lo` to `hi` inclusive.
pub fn log_space<T: Real>(lo: T, hi: T, points: usize) -> Vec<T> {
    assert!(lo > T::zero() && hi > lo && points >= 2);
    let (a, b) = (lo.ln(), hi.ln());
    let last = T::from_usize_exact(points - 1);
    (0..points)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == points - 1 {
                hi
            } else {
                (a + (b - a) * T::from_usize_exact(i) / last).exp()
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum<T> {
    pub x: T,
    pub value: T,
    pub iterations: usize,
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// stopping once the bracket is narrower than `rel_tol * |x|`.
pub fn golden_section_max<T: Real, F: FnMut(T) -> T>(
    mut f: F,
    lo: T,
    hi: T,
    rel_tol: T,
    max_iter: usize,
) -> Maximum<T> {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::two();
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iterations = 0;
    while iterations < max_iter {
        let mid = (a + b) / T::two();
        if (b - a).abs() <= rel_tol * mid.abs() {
            break;
        }
        iterations += 1;
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    let (x, value) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    Maximum {
        x,
        value,
        iterations,
    }
}

/// Number of strict interior local maxima of a sampled curve.
pub fn count_local_maxima<T: Real>(samples: &[T]) -> usize {
    samples
        .windows(3)
        .filter(|w| w[1] > w[0] && w[1] > w[2])
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_space_endpoints_and_ratio() {
        let g = log_space(1e-2_f64, 10.0, 4);
        assert_eq!(g[0], 1e-2);
        assert_eq!(g[3], 10.0);
        assert!((g[1] - 0.1).abs() < 1e-15 && (g[2] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let m = golden_section_max(|x: f64| -(x - 1.3).powi(2) + 2.0, 0.0, 4.0, 1e-10, 200);
        assert!((m.x - 1.3).abs() < 1e-7);
        assert!((m.value - 2.0).abs() < 1e-15);
    }

    #[test]
    fn golden_section_schottky_peak() {
        // C(t) = sech^2(1/t) / t^2
        let schottky = |t: f64| {
            let x = 1.0 / t;
            (x / x.cosh()).powi(2)
        };
        let m = golden_section_max(schottky, 0.5, 1.5, 1e-10, 200);
        let x = 1.0 / m.x;
        assert!((x * x.tanh() - 1.0).abs() < 1e-7);
    }

    #[test]
    fn local_maxima_counting() {
        assert_eq!(count_local_maxima(&[0.0, 1.0, 2.0, 1.0, 0.5]), 1);
        assert_eq!(count_local_maxima(&[0.0, 1.0, 0.0, 1.0, 0.0]), 2);
        assert_eq!(count_local_maxima(&[3.0_f64, 2.0, 1.0]), 0);
    }
}
