//! Small dense eigensolver for the QES blocks.
//!
//! Eigenvalues come from nalgebra's real Schur decomposition; eigenvectors
//! are recovered by inverse iteration with a complex LU solve. Blocks here
//! are tiny (rarely beyond 25 x 25) and generally non-symmetric, so complex
//! pairs are expected and reported as such.

use nalgebra::{Complex, DMatrix, DVector};
use num_complex::Complex64;

use crate::algebra::{rational_to_f64, Rational};

pub(crate) fn to_f64_matrix(m: &[Vec<Rational>]) -> DMatrix<f64> {
    let n = m.len();
    DMatrix::from_fn(n, n, |i, j| rational_to_f64(&m[i][j]))
}

/// Eigenpairs of a real matrix, sorted by (re, im), with residuals
/// ||M v - lambda v||_inf measured on the scale of the given matrix.
/// Eigenvectors are normalized to unit max-magnitude entry.
pub(crate) fn complex_eigenpairs(
    m: &DMatrix<f64>,
) -> (Vec<Complex64>, Vec<Vec<Complex64>>, Vec<f64>) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), Vec::new(), Vec::new());
    }
    if n == 1 {
        let ev = Complex64::new(m[(0, 0)], 0.0);
        return (vec![ev], vec![vec![Complex64::new(1.0, 0.0)]], vec![0.0]);
    }
    let mut eigenvalues: Vec<Complex64> = m.complex_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let mc = m.map(Complex::from);
    let scale = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs())).max(1e-300);
    let mut vectors = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    for (idx, lambda) in eigenvalues.iter().enumerate() {
        let v = inverse_iteration(&mc, *lambda, scale, idx);
        let mv = &mc * &v;
        let resid = (0..n)
            .map(|i| (mv[i] - lambda * v[i]).norm())
            .fold(0.0f64, f64::max);
        vectors.push(v.iter().copied().collect());
        residuals.push(resid);
    }
    (eigenvalues, vectors, residuals)
}

fn inverse_iteration(
    mc: &DMatrix<Complex64>,
    lambda: Complex64,
    scale: f64,
    index: usize,
) -> DVector<Complex64> {
    let n = mc.nrows();
    // Deterministic start vector, varied per eigenvalue index so clustered
    // eigenvalues do not all collapse onto the same iterate.
    let mut v = DVector::from_fn(n, |i, _| {
        let phase = 0.7 + (i as f64 + 1.0) * 0.37 + index as f64 * 0.11;
        Complex64::new(phase.cos(), phase.sin())
    });
    normalize_max(&mut v);
    let mut shift = 1e-12 * scale;
    for _attempt in 0..6 {
        let shifted = {
            let mut a = mc.clone();
            let s = lambda + Complex64::new(shift, 0.5 * shift);
            for i in 0..n {
                a[(i, i)] -= s;
            }
            a
        };
        if let Some(lu) = shifted.lu().try_inverse() {
            for _ in 0..3 {
                v = &lu * &v;
                normalize_max(&mut v);
            }
            return v;
        }
        shift *= 64.0;
    }
    v
}

fn normalize_max(v: &mut DVector<Complex64>) {
    let (mut best, mut best_norm) = (Complex64::new(1.0, 0.0), 0.0f64);
    for &c in v.iter() {
        if c.norm() > best_norm {
            best_norm = c.norm();
            best = c;
        }
    }
    if best_norm > 0.0 {
        let inv = 1.0 / best;
        for c in v.iter_mut() {
            *c *= inv;
        }
    }
}
