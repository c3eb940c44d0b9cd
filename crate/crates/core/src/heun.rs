//! The Heun operator as data: parameters, tridiagonal band action, the spin
//! condition, exact conversion to and from the top, gauge covariance and the
//! exactly-solvable reduction.
//!
//! The operator is
//!
//! ```text
//! H = -(a0 x^3 + a1 x^2 + a2 x) d^2 + (b0 x^2 + b1 x + b2) d + c0 x + c1
//! ```
//!
//! and on the monomial x^k it acts tridiagonally,
//!
//! ```text
//! H x^k = L(k) x^(k+1) + D(k) x^k + U(k) x^(k-1)
//! L(k) = c0 + b0 k - a0 k(k-1)
//! D(k) = b1 k - a1 k(k-1) + c1
//! U(k) = b2 k - a2 k(k-1)
//! ```
//!
//! The additive constant c1 fixes the spectral reference point (the accessory
//! parameter); every structural statement below holds modulo c1.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{rat_int, rational_sqrt_exact, rational_to_f64, DiffOp, Poly, Rational};
use crate::sl2::TopParams;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeunError {
    #[error("degenerate spin condition: a0 = b0 = c0 = 0 makes every spin admissible")]
    DegenerateCondition,
    #[error("spin violates condition: nu = {nu} does not satisfy the spin constraint")]
    SpinViolatesCondition { nu: String },
    #[error("not invariant: L({n}) = {value} is nonzero, no polynomial block of size {n}+1")]
    NotInvariant { n: u32, value: String },
    #[error("not ES: exactly-solvable reduction requires a0 = b0 = c0 = 0")]
    NotExactlySolvable,
    #[error("not a root: P3({root}) != 0")]
    NotARoot { root: String },
    #[error("a2 zero at origin-root: gauge exponent 1 + b2/a2 undefined")]
    A2ZeroAtOrigin,
}

/// The seven Heun coefficients plus the accessory constant c1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeunParams {
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
    pub b0: Rational,
    pub b1: Rational,
    pub b2: Rational,
    pub c0: Rational,
    pub c1: Rational,
}

impl HeunParams {
    /// Builds with c1 = 0.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a0: Rational,
        a1: Rational,
        a2: Rational,
        b0: Rational,
        b1: Rational,
        b2: Rational,
        c0: Rational,
    ) -> Self {
        HeunParams {
            a0,
            a1,
            a2,
            b0,
            b1,
            b2,
            c0,
            c1: Rational::zero(),
        }
    }

    pub fn from_ints(a: [i64; 3], b: [i64; 3], c0: i64) -> Self {
        HeunParams::new(
            rat_int(a[0]),
            rat_int(a[1]),
            rat_int(a[2]),
            rat_int(b[0]),
            rat_int(b[1]),
            rat_int(b[2]),
            rat_int(c0),
        )
    }

    pub fn with_c1(mut self, c1: Rational) -> Self {
        self.c1 = c1;
        self
    }

    /// P3 = a0 x^3 + a1 x^2 + a2 x (the operator carries -P3 d^2).
    pub fn p3(&self) -> Poly {
        Poly::from_coeffs(vec![
            Rational::zero(),
            self.a2.clone(),
            self.a1.clone(),
            self.a0.clone(),
        ])
    }

    /// P2 = b0 x^2 + b1 x + b2.
    pub fn p2(&self) -> Poly {
        Poly::from_coeffs(vec![self.b2.clone(), self.b1.clone(), self.b0.clone()])
    }

    /// P1 = c0 x + c1.
    pub fn p1(&self) -> Poly {
        Poly::from_coeffs(vec![self.c1.clone(), self.c0.clone()])
    }

    /// The operator -P3 d^2 + P2 d + P1 in normal-ordered form.
    pub fn to_diffop(&self) -> DiffOp {
        DiffOp::from_terms(vec![(2, -&self.p3()), (1, self.p2()), (0, self.p1())])
    }

    /// Left side of the spin condition, -2nu(2nu-1) a0 + 2nu b0 + c0.
    /// This equals L(2nu), so its vanishing at an integer 2nu = n certifies
    /// the (n+1)-dimensional polynomial block.
    pub fn spin_condition_residual(&self, nu: &Rational) -> Rational {
        let two_nu = rat_int(2) * nu;
        -(&two_nu * (&two_nu - Rational::one())) * &self.a0 + &two_nu * &self.b0 + &self.c0
    }
}

/// The three band functions of the tridiagonal action, each a quadratic in
/// the degree k kept as an exact polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandAction {
    lower: Poly,
    diag: Poly,
    upper: Poly,
}

/// Band functions of H on monomials; exact for all k.
pub fn band_action(h: &HeunParams) -> BandAction {
    // L(k) = -a0 k^2 + (a0 + b0) k + c0
    let lower = Poly::from_coeffs(vec![
        h.c0.clone(),
        &h.a0 + &h.b0,
        -h.a0.clone(),
    ]);
    // D(k) = -a1 k^2 + (a1 + b1) k + c1
    let diag = Poly::from_coeffs(vec![
        h.c1.clone(),
        &h.a1 + &h.b1,
        -h.a1.clone(),
    ]);
    // U(k) = -a2 k^2 + (a2 + b2) k
    let upper = Poly::from_coeffs(vec![
        Rational::zero(),
        &h.a2 + &h.b2,
        -h.a2.clone(),
    ]);
    BandAction { lower, diag, upper }
}

impl BandAction {
    pub fn l(&self, k: i64) -> Rational {
        self.lower.eval(&rat_int(k))
    }

    pub fn d(&self, k: i64) -> Rational {
        self.diag.eval(&rat_int(k))
    }

    pub fn u(&self, k: i64) -> Rational {
        self.upper.eval(&rat_int(k))
    }

    pub fn l_at(&self, k: &Rational) -> Rational {
        self.lower.eval(k)
    }

    pub fn d_at(&self, k: &Rational) -> Rational {
        self.diag.eval(k)
    }

    pub fn u_at(&self, k: &Rational) -> Rational {
        self.upper.eval(k)
    }

    /// Band quadratics as coefficient triples (constant, linear, quadratic).
    pub fn coefficient_triples(&self) -> [[Rational; 3]; 3] {
        let tri = |p: &Poly| [p.coeff(0), p.coeff(1), p.coeff(2)];
        [tri(&self.lower), tri(&self.diag), tri(&self.upper)]
    }
}

/// The (n+1) x (n+1) leading block of H in the monomial basis; row index is
/// the output degree, so the subdiagonal holds L and the superdiagonal U.
pub fn block_matrix(h: &HeunParams, n: u32) -> Vec<Vec<Rational>> {
    let band = band_action(h);
    let size = (n + 1) as usize;
    let mut m = vec![vec![Rational::zero(); size]; size];
    for k in 0..=n as i64 {
        let col = k as usize;
        m[col][col] = band.d(k);
        if col + 1 < size {
            m[col + 1][col] = band.l(k);
        }
        if col >= 1 {
            m[col - 1][col] = band.u(k);
        }
    }
    m
}

/// One root of the spin condition; irrational roots are reported as float
/// approximations and flagged as non-exact.
#[derive(Clone, Debug, PartialEq)]
pub enum SpinRoot {
    Exact(Rational),
    Approx(f64),
}

/// Solves the spin condition -2nu(2nu-1) a0 + 2nu b0 + c0 = 0, i.e.
/// 4 a0 nu^2 - 2(a0 + b0) nu - c0 = 0, for nu.
///
/// Returns 0, 1 or 2 roots; errors when a0 = b0 = c0 = 0 (every nu works).
pub fn spin_from_condition(h: &HeunParams) -> Result<Vec<SpinRoot>, HeunError> {
    if h.a0.is_zero() && h.b0.is_zero() && h.c0.is_zero() {
        return Err(HeunError::DegenerateCondition);
    }
    if h.a0.is_zero() {
        if h.b0.is_zero() {
            // c0 != 0 here: no solution
            return Ok(Vec::new());
        }
        return Ok(vec![SpinRoot::Exact(-&h.c0 / (rat_int(2) * &h.b0))]);
    }
    // quadratic: 4 a0 nu^2 - 2(a0+b0) nu - c0 = 0
    let half_sum = &h.a0 + &h.b0;
    let disc = &half_sum * &half_sum + rat_int(4) * &h.a0 * &h.c0;
    if disc.is_negative() {
        return Ok(Vec::new());
    }
    let four_a0 = rat_int(4) * &h.a0;
    if let Some(s) = rational_sqrt_exact(&disc) {
        let r1 = (&half_sum + &s) / &four_a0;
        let r2 = (&half_sum - &s) / &four_a0;
        let mut roots = vec![SpinRoot::Exact(r1.clone())];
        if r1 != r2 {
            roots.push(SpinRoot::Exact(r2));
        }
        Ok(roots)
    } else {
        let s = rational_to_f64(&disc).sqrt();
        let hs = rational_to_f64(&half_sum);
        let fa = rational_to_f64(&four_a0);
        Ok(vec![
            SpinRoot::Approx((hs + s) / fa),
            SpinRoot::Approx((hs - s) / fa),
        ])
    }
}

/// Exact rational spin roots only.
pub fn rational_spins(h: &HeunParams) -> Vec<Rational> {
    spin_from_condition(h)
        .map(|roots| {
            roots
                .into_iter()
                .filter_map(|r| match r {
                    SpinRoot::Exact(nu) => Some(nu),
                    SpinRoot::Approx(_) => None,
                })
                .collect()
        })
        .unwrap_or_default()
}

/// Expands the top Hamiltonian into Heun coefficients. The result always
/// satisfies the spin condition with the top's own nu, and its accessory
/// constant is c1 = nu^2 t00 - nu B0.
pub fn top_to_heun(top: &TopParams) -> HeunParams {
    let nu = &top.nu;
    let one = Rational::one();
    let a0 = -top.t_p0.clone();
    let a1 = -(&top.t_pm + &top.t_00);
    let a2 = -top.t_0m.clone();
    let b0 = &top.t_p0 * (&one - rat_int(3) * nu) + &top.b_p;
    let b1 = rat_int(-2) * nu * &top.t_pm + (&one - rat_int(2) * nu) * &top.t_00 + &top.b_0;
    let b2 = -nu * &top.t_0m + &top.b_m;
    let c0 = rat_int(2) * nu * (nu * &top.t_p0 - &top.b_p);
    let c1 = nu * nu * &top.t_00 - nu * &top.b_0;
    HeunParams {
        a0,
        a1,
        a2,
        b0,
        b1,
        b2,
        c0,
        c1,
    }
}

/// Inverts `top_to_heun` under the gauge convention t00 = 0.
///
/// The split of a1 and b1 between t+-, t00 and B0 is not determined by the
/// operator (the leftover is an additive constant), so t00 = 0 is fixed to
/// make the inverse a function. Requires nu to satisfy the spin condition.
pub fn heun_to_top(h: &HeunParams, nu: &Rational) -> Result<TopParams, HeunError> {
    if !h.spin_condition_residual(nu).is_zero() {
        return Err(HeunError::SpinViolatesCondition { nu: nu.to_string() });
    }
    let one = Rational::one();
    let t_p0 = -h.a0.clone();
    let t_pm = -h.a1.clone();
    let t_0m = -h.a2.clone();
    let b_p = &h.b0 - &t_p0 * (&one - rat_int(3) * nu);
    let b_0 = &h.b1 + rat_int(2) * nu * &t_pm;
    let b_m = &h.b2 + nu * &t_0m;
    Ok(TopParams {
        t_p0,
        t_pm,
        t_00: Rational::zero(),
        t_0m,
        b_p,
        b_0,
        b_m,
        nu: nu.clone(),
    })
}

/// Spectrum of the exactly-solvable reduction a0 = b0 = c0 = 0 on the block
/// of degree <= k_max: the band matrix is triangular, so the eigenvalues are
/// exactly the diagonal D(k) = b1 k - a1 k(k-1) + c1.
pub fn es_spectrum(h: &HeunParams, k_max: u32) -> Result<Vec<Rational>, HeunError> {
    if !(h.a0.is_zero() && h.b0.is_zero() && h.c0.is_zero()) {
        return Err(HeunError::NotExactlySolvable);
    }
    let band = band_action(h);
    Ok((0..=k_max as i64).map(|k| band.d(k)).collect())
}

/// Re-expresses the operator in the translated coordinate y = x - r.
/// Valid as a Heun operator only when P3(r) = 0 (the cubic keeps a zero
/// constant term); the caller checks that.
fn translate(h: &HeunParams, r: &Rational) -> HeunParams {
    let p3 = h.p3().shift(r);
    let p2 = h.p2().shift(r);
    let p1 = h.p1().shift(r);
    debug_assert!(p3.coeff(0).is_zero());
    HeunParams {
        a0: p3.coeff(3),
        a1: p3.coeff(2),
        a2: p3.coeff(1),
        b0: p2.coeff(2),
        b1: p2.coeff(1),
        b2: p2.coeff(0),
        c0: p1.coeff(1),
        c1: p1.coeff(0),
    }
}

/// Gauge rotation by (x - root)^mu where root is a rational zero of P3.
///
/// Returns the exponent mu and the rotated operator, again a Heun operator
/// with the same cubic. For an origin root, mu = 1 + b2/a2 and the new bands
/// are the old ones shifted by mu in the degree, with the constant D(mu)
/// absorbed into the new c1; U(mu) = 0 holds exactly by the choice of mu.
/// Nonzero roots are handled by translating to the origin and back.
pub fn covariance_map(h: &HeunParams, root: &Rational) -> Result<(Rational, HeunParams), HeunError> {
    if !h.p3().eval(root).is_zero() {
        return Err(HeunError::NotARoot {
            root: root.to_string(),
        });
    }
    if root.is_zero() {
        if h.a2.is_zero() {
            return Err(HeunError::A2ZeroAtOrigin);
        }
        let mu = Rational::one() + &h.b2 / &h.a2;
        let band = band_action(h);
        debug_assert!(band.u_at(&mu).is_zero());
        // b_i -> b_i - 2 mu a_i, c0 -> L(mu), c1 -> D(mu)
        let two_mu = rat_int(2) * &mu;
        let h_new = HeunParams {
            a0: h.a0.clone(),
            a1: h.a1.clone(),
            a2: h.a2.clone(),
            b0: &h.b0 - &two_mu * &h.a0,
            b1: &h.b1 - &two_mu * &h.a1,
            b2: &h.b2 - &two_mu * &h.a2,
            c0: band.l_at(&mu),
            c1: band.d_at(&mu),
        };
        return Ok((mu, h_new));
    }
    let shifted = translate(h, root);
    if shifted.a2.is_zero() {
        // root is a multiple zero of P3
        return Err(HeunError::A2ZeroAtOrigin);
    }
    let (mu, mapped) = covariance_map(&shifted, &Rational::zero())?;
    Ok((mu, translate(&mapped, &(-root))))
}
