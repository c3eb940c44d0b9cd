//! Quasi-exactly-solvable sectors: finite polynomial blocks, their exact
//! characteristic polynomials, float eigenpairs with residual certificates,
//! and the particular integral d^(n+1).
//!
//! When 2 nu = n is a non-negative integer root of the spin condition the
//! operator maps polynomials of degree <= n into themselves; the certificate
//! is L(n) = 0 exactly. The block is tridiagonal and generally non-symmetric,
//! so eigenvalues may come in complex pairs; they are reported rather than
//! rejected, sorted by real then imaginary part.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat_int, rational_to_f64, DiffOp, Poly, Rational};
use crate::eigen;
use crate::heun::{band_action, block_matrix, HeunError, HeunParams};

/// Result of a QES block solve.
///
/// `eigenvalues` are on the scale of the original block; `residual_norms`
/// are measured after normalizing the block to unit max-magnitude entry.
/// `char_poly` is the exact characteristic polynomial det(M - eps I) of the
/// unnormalized block, degree n+1.
#[derive(Clone, Debug)]
pub struct QesResult {
    pub n: u32,
    pub eigenvalues: Vec<Complex64>,
    pub eigenvectors: Vec<Vec<Complex64>>,
    pub residual_norms: Vec<f64>,
    pub char_poly: Poly,
}

/// Exact characteristic polynomial of the (n+1) x (n+1) block via the
/// three-term determinant recurrence
/// p_{k+1}(eps) = (D(k) - eps) p_k(eps) - U(k) L(k-1) p_{k-1}(eps).
pub fn char_poly(h: &HeunParams, n: u32) -> Poly {
    let band = band_action(h);
    let minus_eps = Poly::from_coeffs(vec![Rational::zero(), rat_int(-1)]);
    let mut p_prev = Poly::one();
    let mut p_cur = &Poly::constant(band.d(0)) + &minus_eps;
    for k in 1..=n as i64 {
        let diag = &Poly::constant(band.d(k)) + &minus_eps;
        let off = band.u(k) * band.l(k - 1);
        let next = &(&diag * &p_cur) - &p_prev.scale(&off);
        p_prev = p_cur;
        p_cur = next;
    }
    p_cur
}

/// Certifies the invariant subspace and solves the finite block.
pub fn qes_solve(h: &HeunParams, n: u32) -> Result<QesResult, HeunError> {
    let band = band_action(h);
    let l_n = band.l(n as i64);
    if !l_n.is_zero() {
        return Err(HeunError::NotInvariant {
            n,
            value: l_n.to_string(),
        });
    }
    let block = block_matrix(h, n);
    let raw = eigen::to_f64_matrix(&block);
    let scale = raw.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let normalized = if scale > 0.0 { raw.clone() / scale } else { raw };
    let (mut ev, vecs, residuals) = eigen::complex_eigenpairs(&normalized);
    for e in ev.iter_mut() {
        *e *= scale.max(f64::MIN_POSITIVE);
    }
    if scale == 0.0 {
        for e in ev.iter_mut() {
            *e = Complex64::new(0.0, 0.0);
        }
    }
    Ok(QesResult {
        n,
        eigenvalues: ev,
        eigenvectors: vecs,
        residual_norms: residuals,
        char_poly: char_poly(h, n),
    })
}

impl QesResult {
    /// |p(eps)| / s^(n+1) for each float eigenvalue, where s is the block's
    /// max entry magnitude: the exact-polynomial certificate of the float
    /// spectrum on the normalized scale.
    pub fn char_poly_certificates(&self, h: &HeunParams) -> Vec<f64> {
        let block = block_matrix(h, self.n);
        let scale = block
            .iter()
            .flatten()
            .map(rational_to_f64)
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
            .max(f64::MIN_POSITIVE);
        let denom = scale.powi(self.n as i32 + 1);
        self.eigenvalues
            .iter()
            .map(|&eps| self.char_poly.eval_complex(eps).norm() / denom)
            .collect()
    }
}

/// Checks that d^(n+1) is a particular integral: [H, d^(n+1)] annihilates
/// every monomial of degree <= n and `trials` random rational polynomials,
/// all exactly. Requires the invariance certificate L(n) = 0.
pub fn particular_integral_check(h: &HeunParams, n: u32, trials: u32) -> Result<bool, HeunError> {
    let band = band_action(h);
    let l_n = band.l(n as i64);
    if !l_n.is_zero() {
        return Err(HeunError::NotInvariant {
            n,
            value: l_n.to_string(),
        });
    }
    let commutator = h.to_diffop().commutator(&DiffOp::derivative_op(n as usize + 1));
    for k in 0..=n as usize {
        if !commutator.apply(&Poly::monomial(Rational::one(), k)).is_zero() {
            return Ok(false);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b9u64 ^ u64::from(n));
    for _ in 0..trials {
        let coeffs = (0..=n as usize)
            .map(|_| {
                Rational::new(
                    rng.gen_range(-50i64..=50).into(),
                    rng.gen_range(1i64..=12).into(),
                )
            })
            .collect();
        let p = Poly::from_coeffs(coeffs);
        if !commutator.apply(&p).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
