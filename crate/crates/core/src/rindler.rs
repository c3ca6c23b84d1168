//! Invariance of the pair-creation form `a+_k a+_{-k} - a_k a_{-k}` under
//! the hyperbolic Bogoliubov mixing
//!
//! ```text
//! a_k(tau)     = cosh(g tau) a_k + sinh(g tau) a+_{-k}
//! a+_{-k}(tau) = sinh(g tau) a_k + cosh(g tau) a+_{-k}
//! ```
//!
//! checked at the level of monomial coefficients and, independently, on
//! truncated two-mode Fock matrices.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest `|g tau|` accepted; a little beyond it `cosh^2` overflows f64.
pub const MAX_GTAU: f64 = 350.0;

/// The 2x2 hyperbolic rotation `exp(g tau sigma_x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovTransform<T> {
    pub gtau: T,
    pub matrix: [[T; 2]; 2],
}

impl<T: Real> BogoliubovTransform<T> {
    pub fn cosh(&self) -> T {
        self.matrix[0][0]
    }

    pub fn sinh(&self) -> T {
        self.matrix[0][1]
    }

    pub fn det(&self) -> T {
        let m = &self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> [[T; 2]; 2] {
        let (a, b) = (&self.matrix, &other.matrix);
        let mut out = [[T::zero(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    }
}

pub fn rindler_transform<T: Real>(gtau: T) -> Result<BogoliubovTransform<T>> {
    if !gtau.is_finite() {
        return Err(Error::Domain(format!("g tau must be finite, got {gtau}")));
    }
    if gtau.abs() > T::lit(MAX_GTAU) {
        return Err(Error::Guard(format!(
            "|g tau| = {gtau} exceeds the overflow guard {MAX_GTAU}"
        )));
    }
    let (c, s) = (gtau.cosh(), gtau.sinh());
    Ok(BogoliubovTransform {
        gtau,
        matrix: [[c, s], [s, c]],
    })
}

/// Ladder operators of the `+k` and `-k` modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ladder {
    /// `a_k`
    A,
    /// `a+_k`
    Ad,
    /// `a_{-k}`
    B,
    /// `a+_{-k}`
    Bd,
}

const LADDERS: [Ladder; 4] = [Ladder::A, Ladder::Ad, Ladder::B, Ladder::Bd];

/// Linear combination over `[a_k, a+_k, a_{-k}, a+_{-k}]`.
type LinearOp<T> = [T; 4];

/// Monomial indices of [`QuadraticForm::coefficients`].
pub const CREATE_PAIR: usize = 0;
pub const ANNIHILATE_PAIR: usize = 1;
pub const NUMBER_PLUS: usize = 2;
pub const ANTI_NUMBER_MINUS: usize = 3;
pub const IDENTITY: usize = 4;

/// Real combination of `a+_k a+_{-k}`, `a_k a_{-k}`, `a+_k a_k`,
/// `a_{-k} a+_{-k}` and `1`, in that order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticForm<T> {
    pub coefficients: [T; 5],
}

impl<T: Real> QuadraticForm<T> {
    /// `a+_k a+_{-k} - a_k a_{-k}`.
    pub fn pair_creation() -> Self {
        let (z, o) = (T::zero(), T::one());
        Self {
            coefficients: [o, -o, z, z, z],
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }
}

/// Images of the four ladder operators under the transform.
fn transformed_ladders<T: Real>(m: &BogoliubovTransform<T>) -> [LinearOp<T>; 4] {
    let (c, s, z) = (m.cosh(), m.sinh(), T::zero());
    [
        [c, z, z, s], // a_k(tau)
        [z, c, s, z], // a+_k(tau)
        [z, s, c, z], // a_{-k}(tau)
        [s, z, z, c], // a+_{-k}(tau)
    ]
}

fn monomial_factors(index: usize) -> Option<(Ladder, Ladder)> {
    match index {
        CREATE_PAIR => Some((Ladder::Ad, Ladder::Bd)),
        ANNIHILATE_PAIR => Some((Ladder::A, Ladder::B)),
        NUMBER_PLUS => Some((Ladder::Ad, Ladder::A)),
        ANTI_NUMBER_MINUS => Some((Ladder::B, Ladder::Bd)),
        _ => None,
    }
}

/// Writes the ordered product `x y` in the monomial basis: opposite modes
/// commute, `a a+ = a+ a + 1` and `b+ b = b b+ - 1`. Products outside the
/// basis (`a a`, `a b+`, ...) return `None`.
fn reduce_pair<T: Real>(x: Ladder, y: Ladder) -> Option<(usize, T)> {
    use Ladder::*;
    match (x, y) {
        (Ad, Bd) | (Bd, Ad) => Some((CREATE_PAIR, T::zero())),
        (A, B) | (B, A) => Some((ANNIHILATE_PAIR, T::zero())),
        (Ad, A) => Some((NUMBER_PLUS, T::zero())),
        (A, Ad) => Some((NUMBER_PLUS, T::one())),
        (B, Bd) => Some((ANTI_NUMBER_MINUS, T::zero())),
        (Bd, B) => Some((ANTI_NUMBER_MINUS, -T::one())),
        _ => None,
    }
}

/// Coefficients of a form after substituting the transformed operators.
///
/// Each monomial `x y` becomes `x(tau) y(tau)`, expanded into the sixteen
/// ordered products and normal-ordered with the bosonic commutator.
pub fn transform_quadratic<T: Real>(
    form: &QuadraticForm<T>,
    m: &BogoliubovTransform<T>,
) -> QuadraticForm<T> {
    let images = transformed_ladders(m);
    let image = |l: Ladder| images[l as usize];
    let mut out = [T::zero(); 5];
    out[IDENTITY] = form.coefficients[IDENTITY];
    for (index, &k) in form.coefficients.iter().enumerate() {
        let Some((x, y)) = monomial_factors(index) else {
            continue;
        };
        if k == T::zero() {
            continue;
        }
        let (lx, ly) = (image(x), image(y));
        for &p in &LADDERS {
            for &q in &LADDERS {
                let w = lx[p as usize] * ly[q as usize];
                if w == T::zero() {
                    continue;
                }
                // Mixing a_k with a+_{-k} only ever pairs basis monomials.
                let (target, constant) =
                    reduce_pair::<T>(p, q).expect("Bogoliubov image stays in the pair basis");
                out[target] = out[target] + k * w;
                out[IDENTITY] = out[IDENTITY] + k * w * constant;
            }
        }
    }
    QuadraticForm { coefficients: out }
}

/// `max_i |K(tau)_i - K_i|` for the pair-creation form.
pub fn invariance_residual<T: Real>(gtau: T) -> Result<T> {
    let m = rindler_transform(gtau)?;
    let k = QuadraticForm::pair_creation();
    Ok(transform_quadratic(&k, &m).max_abs_diff(&k))
}

/// `|cosh^2 - sinh^2 - 1|` evaluated as `|(cosh + sinh)(cosh - sinh) - 1|`
/// with `cosh + sinh = e^{g tau}` and `cosh - sinh = e^{-g tau}`, so no
/// cancellation between large numbers occurs.
pub fn symplectic_residual<T: Real>(m: &BogoliubovTransform<T>) -> T {
    let plus = m.gtau.exp();
    let minus = (-m.gtau).exp();
    (plus * minus - T::one()).abs()
}

/// The same residual from the stored matrix entries directly. Loses all
/// accuracy once `cosh^2` exceeds `1 / epsilon`.
pub fn symplectic_residual_naive<T: Real>(m: &BogoliubovTransform<T>) -> T {
    (m.cosh() * m.cosh() - m.sinh() * m.sinh() - T::one()).abs()
}

/// Row-major square matrix of one truncated mode.
#[derive(Debug, Clone)]
struct ModeMatrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Real> ModeMatrix<T> {
    fn identity(dim: usize) -> Self {
        let mut data = vec![T::zero(); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = T::one();
        }
        Self { dim, data }
    }

    /// `a |n> = sqrt(n) |n - 1>`.
    fn annihilation(dim: usize) -> Self {
        let mut data = vec![T::zero(); dim * dim];
        for n in 1..dim {
            data[(n - 1) * dim + n] = T::from_usize_exact(n).sqrt();
        }
        Self { dim, data }
    }

    fn transpose(&self) -> Self {
        let d = self.dim;
        let mut data = vec![T::zero(); d * d];
        for r in 0..d {
            for c in 0..d {
                data[c * d + r] = self.data[r * d + c];
            }
        }
        Self { dim: d, data }
    }

    fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut data = vec![T::zero(); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.data[r * d + k];
                if a == T::zero() {
                    continue;
                }
                for c in 0..d {
                    data[r * d + c] = data[r * d + c] + a * other.data[k * d + c];
                }
            }
        }
        Self { dim: d, data }
    }

    fn at(&self, r: usize, c: usize) -> T {
        self.data[r * self.dim + c]
    }
}

/// `coef * (left (x) right)` on the two-mode space.
struct KronTerm<T> {
    coef: T,
    left: ModeMatrix<T>,
    right: ModeMatrix<T>,
}

struct TruncatedModes<T> {
    a: ModeMatrix<T>,
    ad: ModeMatrix<T>,
    id: ModeMatrix<T>,
}

impl<T: Real> TruncatedModes<T> {
    fn new(dim: usize) -> Self {
        let a = ModeMatrix::annihilation(dim);
        let ad = a.transpose();
        Self {
            a,
            ad,
            id: ModeMatrix::identity(dim),
        }
    }

    fn factors(&self, l: Ladder) -> (&ModeMatrix<T>, &ModeMatrix<T>) {
        match l {
            Ladder::A => (&self.a, &self.id),
            Ladder::Ad => (&self.ad, &self.id),
            Ladder::B => (&self.id, &self.a),
            Ladder::Bd => (&self.id, &self.ad),
        }
    }

    /// Expands `coef * x y` with `x`, `y` linear in the ladder matrices;
    /// products are truncated matrix products, no commutator is used.
    fn product_terms(&self, coef: T, x: &LinearOp<T>, y: &LinearOp<T>, out: &mut Vec<KronTerm<T>>) {
        for &p in &LADDERS {
            for &q in &LADDERS {
                let w = x[p as usize] * y[q as usize];
                if w == T::zero() {
                    continue;
                }
                let (pl, pr) = self.factors(p);
                let (ql, qr) = self.factors(q);
                out.push(KronTerm {
                    coef: coef * w,
                    left: pl.mul(ql),
                    right: pr.mul(qr),
                });
            }
        }
    }
}

fn unit_op<T: Real>(l: Ladder) -> LinearOp<T> {
    let mut op = [T::zero(); 4];
    op[l as usize] = T::one();
    op
}

/// `K(tau) - K(0)` on the truncated two-mode space, row-major over `(n1, n2)`.
fn truncated_difference<T: Real>(dim: usize, gtau: T) -> Result<(Vec<T>, Vec<T>)> {
    if !(2..=32).contains(&dim) {
        return Err(Error::Guard(format!("Fock cutoff must lie in 2..=32, got {dim}")));
    }
    let m = rindler_transform(gtau)?;
    let modes = TruncatedModes::new(dim);
    let images = transformed_ladders(&m);
    let img = |l: Ladder| images[l as usize];

    let mut evolved = Vec::new();
    modes.product_terms(T::one(), &img(Ladder::Ad), &img(Ladder::Bd), &mut evolved);
    modes.product_terms(-T::one(), &img(Ladder::A), &img(Ladder::B), &mut evolved);
    let mut initial = Vec::new();
    modes.product_terms(T::one(), &unit_op(Ladder::Ad), &unit_op(Ladder::Bd), &mut initial);
    modes.product_terms(-T::one(), &unit_op(Ladder::A), &unit_op(Ladder::B), &mut initial);

    let n = dim * dim;
    let assemble = |terms: &[KronTerm<T>]| {
        let mut out = vec![T::zero(); n * n];
        for t in terms {
            for i1 in 0..dim {
                for j1 in 0..dim {
                    let l = t.left.at(i1, j1);
                    if l == T::zero() {
                        continue;
                    }
                    for i2 in 0..dim {
                        for j2 in 0..dim {
                            let r = t.right.at(i2, j2);
                            if r == T::zero() {
                                continue;
                            }
                            let idx = (i1 * dim + i2) * n + (j1 * dim + j2);
                            out[idx] = out[idx] + t.coef * l * r;
                        }
                    }
                }
            }
        }
        out
    };
    let k_tau = assemble(&evolved);
    let k_zero = assemble(&initial);
    let diff = k_tau.iter().zip(&k_zero).map(|(&a, &b)| a - b).collect();
    Ok((diff, k_zero))
}

/// Max-norm of `K(tau) - K(0)` on truncated `dim x dim` two-mode Fock
/// matrices, restricted to states with both occupations `<= dim - 2`,
/// where the truncated ladder matrices still satisfy `[a, a+] = 1`.
pub fn fock_truncated_check<T: Real>(dim: usize, gtau: T) -> Result<T> {
    let (diff, _) = truncated_difference(dim, gtau)?;
    let n = dim * dim;
    let safe = |idx: usize| idx / dim <= dim - 2 && idx % dim <= dim - 2;
    let mut worst = T::zero();
    for row in (0..n).filter(|&r| safe(r)) {
        for col in (0..n).filter(|&c| safe(c)) {
            worst = worst.max(diff[row * n + col].abs());
        }
    }
    Ok(worst)
}

/// `||K(tau) - K(0)||_F / ||K(0)||_F` over the whole truncated space.
/// Nonzero because of the cutoff; shrinks like `dim^{-1/2}`.
pub fn fock_truncated_full_residual<T: Real>(dim: usize, gtau: T) -> Result<T> {
    let (diff, k_zero) = truncated_difference(dim, gtau)?;
    let frob = |v: &[T]| v.iter().fold(T::zero(), |a, &x| a + x * x).sqrt();
    Ok(frob(&diff) / frob(&k_zero))
}
