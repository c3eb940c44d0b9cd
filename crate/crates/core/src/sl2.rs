//! The three sl(2,R) realizations and the Euler-Arnold top Hamiltonian.
//!
//! Generators are represented by their exact action on a graded basis:
//! monomials x^k for the differential and dilation realizations,
//! quasi-monomials x^(k) = x(x-d)...(x-(k-1)d) for the shift realization.
//! In every case J0 is diagonal, J- lowers the degree by one and J+ raises
//! it by one, so any top polynomial in the generators acts tridiagonally.
//!
//! The dilation operators x_q and D_q are pseudodifferential, so the basis
//! action is the common exact representation across all three realizations;
//! for the differential and shift cases the operators are additionally
//! available at the polynomial level for cross-checks.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{rat_int, DiffOp, Poly, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("dilation parameter q must not be 0 or 1")]
    InvalidQ,
}

/// Tensor of inertia, magnetic field and spin of the sl(2,R) top.
///
/// All seven structure parameters are free; the spin enters through the
/// realization of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopParams {
    pub t_p0: Rational,
    pub t_pm: Rational,
    pub t_00: Rational,
    pub t_0m: Rational,
    pub b_p: Rational,
    pub b_0: Rational,
    pub b_m: Rational,
    pub nu: Rational,
}

impl TopParams {
    pub fn zero_with_nu(nu: Rational) -> Self {
        TopParams {
            t_p0: Rational::zero(),
            t_pm: Rational::zero(),
            t_00: Rational::zero(),
            t_0m: Rational::zero(),
            b_p: Rational::zero(),
            b_0: Rational::zero(),
            b_m: Rational::zero(),
            nu,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizationKind {
    Differential,
    /// Uniform lattice of spacing delta; delta = 0 degenerates to the
    /// differential realization on the same structure constants.
    Shift { delta: Rational },
    /// Exponential lattice with ratio q, q not in {0, 1}.
    Dilation { q: Rational },
}

/// One concrete realization of (J-, J0, J+) through its graded basis action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTriple {
    nu: Rational,
    kind: RealizationKind,
}

/// J- = d/dx, J0 = x d/dx - nu, J+ = x (x d/dx - 2 nu).
pub fn make_differential(nu: Rational) -> GeneratorTriple {
    GeneratorTriple {
        nu,
        kind: RealizationKind::Differential,
    }
}

/// Shift realization built on the Norlund derivative D_delta and x_delta.
pub fn make_shift(nu: Rational, delta: Rational) -> GeneratorTriple {
    GeneratorTriple {
        nu,
        kind: RealizationKind::Shift { delta },
    }
}

/// Dilation realization built on the Jackson derivative D_q and x_q.
pub fn make_dilation(nu: Rational, q: Rational) -> Result<GeneratorTriple, Sl2Error> {
    if q.is_zero() || q.is_one() {
        return Err(Sl2Error::InvalidQ);
    }
    Ok(GeneratorTriple {
        nu,
        kind: RealizationKind::Dilation { q },
    })
}

/// q-number {n}_q = 1 + q + ... + q^(n-1) = (1 - q^n)/(1 - q).
pub fn q_number(n: u32, q: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut pow = Rational::one();
    for _ in 0..n {
        acc += &pow;
        pow *= q;
    }
    acc
}

impl GeneratorTriple {
    pub fn nu(&self) -> &Rational {
        &self.nu
    }

    pub fn kind(&self) -> &RealizationKind {
        &self.kind
    }

    /// Coefficient of J- on basis element k: J- e_k = lower(k) e_{k-1}.
    pub fn lower_coeff(&self, k: u32) -> Rational {
        match &self.kind {
            RealizationKind::Differential | RealizationKind::Shift { .. } => rat_int(k as i64),
            RealizationKind::Dilation { q } => q_number(k, q),
        }
    }

    /// Coefficient of J0 on basis element k: J0 e_k = diag(k) e_k.
    pub fn diag_coeff(&self, k: u32) -> Rational {
        rat_int(k as i64) - &self.nu
    }

    /// Coefficient of J+ on basis element k: J+ e_k = raise(k) e_{k+1}.
    pub fn raise_coeff(&self, k: u32) -> Rational {
        let base = rat_int(k as i64) - rat_int(2) * &self.nu;
        match &self.kind {
            RealizationKind::Differential | RealizationKind::Shift { .. } => base,
            RealizationKind::Dilation { q } => {
                base * rat_int(k as i64 + 1) / q_number(k + 1, q)
            }
        }
    }

    /// Residuals of the three commutation relations on basis degree k:
    /// [J0,J+] - J+, [J0,J-] + J-, [J+,J-] + 2 J0 (each as the coefficient
    /// on the single basis element the relation produces).
    pub fn commutator_residuals(&self, k: u32) -> [Rational; 3] {
        let raise = self.raise_coeff(k);
        let lower = self.lower_coeff(k);
        let r1 = (self.diag_coeff(k + 1) - self.diag_coeff(k) - Rational::one()) * &raise;
        let r2 = if k == 0 {
            Rational::zero()
        } else {
            (self.diag_coeff(k - 1) - self.diag_coeff(k) + Rational::one()) * &lower
        };
        let jp_jm = if k == 0 {
            Rational::zero()
        } else {
            self.raise_coeff(k - 1) * &lower
        };
        let jm_jp = self.lower_coeff(k + 1) * &raise;
        let r3 = jp_jm - jm_jp + rat_int(2) * self.diag_coeff(k);
        [r1, r2, r3]
    }
}

/// The top Hamiltonian as a tridiagonal basis action.
///
/// H = t+0 J+J0 + t+- J+J- + t00 J0J0 + t0- J0J- + B+ J+ + B0 J0 + B- J-.
#[derive(Clone, Debug)]
pub struct TopAction {
    gen: GeneratorTriple,
    top: TopParams,
}

pub fn top_hamiltonian(gen: GeneratorTriple, top: TopParams) -> TopAction {
    TopAction { gen, top }
}

impl TopAction {
    /// Raising coefficient: H e_k has this weight on e_{k+1}.
    pub fn raise(&self, k: u32) -> Rational {
        (&self.top.t_p0 * self.gen.diag_coeff(k) + &self.top.b_p) * self.gen.raise_coeff(k)
    }

    /// Diagonal coefficient of H on e_k.
    pub fn diag(&self, k: u32) -> Rational {
        let d = self.gen.diag_coeff(k);
        let jp_jm = if k == 0 {
            Rational::zero()
        } else {
            self.gen.lower_coeff(k) * self.gen.raise_coeff(k - 1)
        };
        &self.top.t_pm * jp_jm + &self.top.t_00 * &d * &d + &self.top.b_0 * &d
    }

    /// Lowering coefficient: H e_k has this weight on e_{k-1} (zero at k=0).
    pub fn lower(&self, k: u32) -> Rational {
        if k == 0 {
            return Rational::zero();
        }
        let l = self.gen.lower_coeff(k);
        (&self.top.t_0m * self.gen.diag_coeff(k - 1) + &self.top.b_m) * l
    }

    /// Image of basis element k as (degree, coefficient) pairs.
    pub fn apply_basis(&self, k: u32) -> Vec<(u32, Rational)> {
        let mut out = Vec::with_capacity(3);
        if k > 0 {
            let c = self.lower(k);
            if !c.is_zero() {
                out.push((k - 1, c));
            }
        }
        let d = self.diag(k);
        if !d.is_zero() {
            out.push((k, d));
        }
        let r = self.raise(k);
        if !r.is_zero() {
            out.push((k + 1, r));
        }
        out
    }

    /// Leading (n+1) x (n+1) block in the graded basis, row = output degree.
    pub fn block(&self, n: u32) -> Vec<Vec<Rational>> {
        let size = (n + 1) as usize;
        let mut m = vec![vec![Rational::zero(); size]; size];
        for k in 0..=n {
            for (deg, c) in self.apply_basis(k) {
                if (deg as usize) < size {
                    m[deg as usize][k as usize] = c;
                }
            }
        }
        m
    }
}

/// Coefficient residuals of (C2 + nu(nu+1)) e_k for k = 0..=max_degree,
/// with C2 = (J+J- + J-J+)/2 - J0 J0. All residuals must be exactly zero;
/// they do not depend on delta or q.
pub fn casimir_residual(gen: &GeneratorTriple, nu: &Rational, max_degree: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max_degree as usize + 1);
    let half = Rational::new(1.into(), 2.into());
    for k in 0..=max_degree {
        let jp_jm = if k == 0 {
            Rational::zero()
        } else {
            gen.lower_coeff(k) * gen.raise_coeff(k - 1)
        };
        let jm_jp = gen.raise_coeff(k) * gen.lower_coeff(k + 1);
        let d = gen.diag_coeff(k);
        let c2 = &half * (jp_jm + jm_jp) - &d * &d;
        out.push(c2 + nu * (nu + Rational::one()));
    }
    out
}

// --- symbolic (differential) route -----------------------------------------

/// The differential realization as explicit operators (J-, J0, J+).
pub fn differential_generator_ops(nu: &Rational) -> [DiffOp; 3] {
    let j_minus = DiffOp::derivative_op(1);
    let j_zero = DiffOp::from_terms(vec![(1, Poly::x()), (0, Poly::constant(-nu.clone()))]);
    let j_plus = DiffOp::from_terms(vec![
        (1, Poly::monomial(Rational::one(), 2)),
        (0, Poly::monomial(rat_int(-2) * nu, 1)),
    ]);
    [j_minus, j_zero, j_plus]
}

/// Expands the top Hamiltonian in the differential realization through
/// operator composition. This is the symbolic oracle for the basis action
/// and for the top <-> Heun parameter maps.
pub fn top_diffop(top: &TopParams) -> DiffOp {
    let [jm, j0, jp] = differential_generator_ops(&top.nu);
    let mut h = jp.compose(&j0).scale(&top.t_p0);
    h = &h + &jp.compose(&jm).scale(&top.t_pm);
    h = &h + &j0.compose(&j0).scale(&top.t_00);
    h = &h + &j0.compose(&jm).scale(&top.t_0m);
    h = &h + &jp.scale(&top.b_p);
    h = &h + &j0.scale(&top.b_0);
    h = &h + &jm.scale(&top.b_m);
    h
}

// --- polynomial-level shift operators ---------------------------------------

/// Norlund derivative D_delta p = (p(x + delta) - p(x)) / delta.
/// delta = 0 falls back to the ordinary derivative.
pub fn norlund_derivative(p: &Poly, delta: &Rational) -> Poly {
    if delta.is_zero() {
        return p.derivative();
    }
    let inv = Rational::one() / delta;
    (&p.shift(delta) - p).scale(&inv)
}

/// x_delta p = x * p(x - delta).
pub fn shift_x_mul(p: &Poly, delta: &Rational) -> Poly {
    &Poly::x() * &p.shift(&(-delta))
}

/// Which generator of the triple to apply at the polynomial level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Lower,
    Diag,
    Raise,
}

/// Applies a shift-realization generator to a polynomial, exactly.
pub fn shift_generator_apply(which: Generator, nu: &Rational, delta: &Rational, p: &Poly) -> Poly {
    match which {
        Generator::Lower => norlund_derivative(p, delta),
        Generator::Diag => {
            let xd = shift_x_mul(&norlund_derivative(p, delta), delta);
            &xd - &p.scale(nu)
        }
        Generator::Raise => {
            let xd = shift_x_mul(&norlund_derivative(p, delta), delta);
            let inner = &xd - &p.scale(&(rat_int(2) * nu));
            shift_x_mul(&inner, delta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::lattice::quasi_monomial;

    #[test]
    fn lowest_weight_annihilation_at_nu_zero() {
        let gen = make_differential(rat_int(0));
        assert!(gen.raise_coeff(0).is_zero()); // J+ . 1 = 0
    }

    #[test]
    fn top_of_two_dimensional_module_at_half_spin() {
        let gen = make_differential(rat(1, 2));
        assert!(gen.raise_coeff(1).is_zero()); // J+ x = 0 when nu = 1/2
    }

    #[test]
    fn diagonal_weight_k_minus_nu() {
        let gen = make_differential(rat_int(1));
        assert_eq!(gen.diag_coeff(3), rat_int(2)); // J0 x^3 = 2 x^3 at nu = 1
    }

    #[test]
    fn norlund_derivative_on_quasi_monomial() {
        // D_delta x(x - delta) = 2x
        let delta = rat(3, 7);
        let p = quasi_monomial(2, &delta);
        assert_eq!(
            norlund_derivative(&p, &delta),
            Poly::monomial(rat_int(2), 1)
        );
    }

    #[test]
    fn shift_x_raises_quasi_monomial() {
        let delta = rat(1, 3);
        let got = shift_x_mul(&quasi_monomial(1, &delta), &delta);
        assert_eq!(got, quasi_monomial(2, &delta)); // x_d x = x(x - d)
    }

    #[test]
    fn shift_generators_have_differential_structure_constants() {
        // J- x^(k) = k x^(k-1), J0 x^(k) = (k - nu) x^(k), J+ x^(k) = (k - 2nu) x^(k+1)
        let nu = rat(5, 2);
        let delta = rat(3, 7);
        for k in 0..=12u32 {
            let basis = quasi_monomial(k, &delta);
            let lowered = shift_generator_apply(Generator::Lower, &nu, &delta, &basis);
            let want_low = if k == 0 {
                Poly::zero()
            } else {
                quasi_monomial(k - 1, &delta).scale(&rat_int(k as i64))
            };
            assert_eq!(lowered, want_low, "J- at k={k}");

            let diag = shift_generator_apply(Generator::Diag, &nu, &delta, &basis);
            assert_eq!(diag, basis.scale(&(rat_int(k as i64) - &nu)), "J0 at k={k}");

            let raised = shift_generator_apply(Generator::Raise, &nu, &delta, &basis);
            let want_raise =
                quasi_monomial(k + 1, &delta).scale(&(rat_int(k as i64) - rat_int(2) * &nu));
            assert_eq!(raised, want_raise, "J+ at k={k}");
        }
    }

    #[test]
    fn shift_delta_zero_degenerates_to_differential() {
        let nu = rat(1, 3);
        let p = Poly::from_ints(&[2, 0, -1, 4]);
        let zero = rat_int(0);
        let [jm, j0, jp] = differential_generator_ops(&nu);
        assert_eq!(shift_generator_apply(Generator::Lower, &nu, &zero, &p), jm.apply(&p));
        assert_eq!(shift_generator_apply(Generator::Diag, &nu, &zero, &p), j0.apply(&p));
        assert_eq!(shift_generator_apply(Generator::Raise, &nu, &zero, &p), jp.apply(&p));
    }

    #[test]
    fn jackson_q_number_and_actions() {
        let q = rat_int(2);
        assert_eq!(q_number(3, &q), rat_int(7)); // 1 + 2 + 4
        let gen = make_dilation(rat_int(0), q).unwrap();
        // J- x^3 = {3}_2 x^2 = 7 x^2
        assert_eq!(gen.lower_coeff(3), rat_int(7));
        // x_q x^1 = (2/{2}_2) x^2 = (2/3) x^2; at nu = 0 raise(k) = k * (k+1)/{k+1}_q
        // so probe x_q directly through raise at 2nu = k: use nu=1/2, k=1 -> 0
        let gen_half = make_dilation(rat(1, 2), rat_int(2)).unwrap();
        assert!(gen_half.raise_coeff(1).is_zero());
    }

    #[test]
    fn jackson_canonical_pair_on_monomials() {
        // D_q x_q - x_q D_q = 1 on x^k.
        let q = rat(3, 2);
        for k in 0..10u32 {
            // x_q D_q x^k = {k}_q * (k/{k}_q) x^k = k x^k (zero at k = 0)
            let xq_dq = if k == 0 {
                Rational::zero()
            } else {
                q_number(k, &q) * (rat_int(k as i64) / q_number(k, &q))
            };
            // D_q x_q x^k = ((k+1)/{k+1}_q) * {k+1}_q x^k = (k+1) x^k
            let dq_xq = (rat_int(k as i64 + 1) / q_number(k + 1, &q)) * q_number(k + 1, &q);
            assert_eq!(dq_xq - xq_dq, Rational::one());
        }
    }

    #[test]
    fn dilation_rejects_degenerate_q() {
        assert_eq!(make_dilation(rat_int(1), rat_int(0)).unwrap_err(), Sl2Error::InvalidQ);
        assert_eq!(make_dilation(rat_int(1), rat_int(1)).unwrap_err(), Sl2Error::InvalidQ);
    }

    #[test]
    fn commutators_hold_for_all_realizations() {
        let cases: Vec<GeneratorTriple> = vec![
            make_differential(rat(2, 3)),
            make_shift(rat(5, 2), rat(3, 7)),
            make_dilation(rat_int(1), rat_int(2)).unwrap(),
            make_dilation(rat(-4, 3), rat(2, 5)).unwrap(),
        ];
        for gen in cases {
            for k in 0..=25 {
                for r in gen.commutator_residuals(k) {
                    assert!(r.is_zero(), "nonzero commutator residual at k={k} for {gen:?}");
                }
            }
        }
    }

    #[test]
    fn casimir_constant_for_all_realizations() {
        let cases: Vec<(GeneratorTriple, Rational)> = vec![
            (make_differential(rat(7, 5)), rat(7, 5)),
            (make_shift(rat(5, 2), rat(3, 7)), rat(5, 2)),
            (make_dilation(rat_int(1), rat_int(2)).unwrap(), rat_int(1)),
        ];
        for (gen, nu) in cases {
            for r in casimir_residual(&gen, &nu, 25) {
                assert!(r.is_zero());
            }
        }
    }

    #[test]
    fn top_reduces_to_single_generator() {
        let mut top = TopParams::zero_with_nu(rat(1, 2));
        top.b_m = rat_int(1);
        let act = top_hamiltonian(make_differential(rat(1, 2)), top.clone());
        // H = J-: lower(k) = k, others zero
        for k in 0..6u32 {
            assert_eq!(act.lower(k), rat_int(k as i64));
            assert!(act.diag(k).is_zero());
            assert!(act.raise(k).is_zero());
        }
        // symbolic route agrees
        assert_eq!(top_diffop(&top), DiffOp::derivative_op(1));
    }

    #[test]
    fn t00_only_expands_to_euler_square() {
        let mut top = TopParams::zero_with_nu(rat_int(0));
        top.t_00 = rat_int(1);
        // J0 J0 at nu=0 is x^2 d^2 + x d
        let want = DiffOp::from_terms(vec![
            (2, Poly::monomial(rat_int(1), 2)),
            (1, Poly::x()),
        ]);
        assert_eq!(top_diffop(&top), want);
    }

    #[test]
    fn tp0_only_matches_hand_expansion() {
        // t+0 J+ J0 = x^3 d^2 + (1 - 3nu) x^2 d + 2 nu^2 x
        let nu = rat(2, 3);
        let mut top = TopParams::zero_with_nu(nu.clone());
        top.t_p0 = rat_int(1);
        let want = DiffOp::from_terms(vec![
            (2, Poly::monomial(rat_int(1), 3)),
            (1, Poly::monomial(Rational::one() - rat_int(3) * &nu, 2)),
            (0, Poly::monomial(rat_int(2) * &nu * &nu, 1)),
        ]);
        assert_eq!(top_diffop(&top), want);
    }

    #[test]
    fn basis_action_matches_symbolic_route() {
        let top = TopParams {
            t_p0: rat(2, 3),
            t_pm: rat(-1, 2),
            t_00: rat_int(3),
            t_0m: rat(5, 4),
            b_p: rat(1, 7),
            b_0: rat_int(-2),
            b_m: rat(4, 5),
            nu: rat(3, 2),
        };
        let act = top_hamiltonian(make_differential(top.nu.clone()), top.clone());
        let op = top_diffop(&top);
        for k in 0..=25u32 {
            let img = op.apply(&Poly::monomial(Rational::one(), k as usize));
            let mut want = Poly::zero();
            for (deg, c) in act.apply_basis(k) {
                want = &want + &Poly::monomial(c, deg as usize);
            }
            assert_eq!(img, want, "mismatch at k={k}");
        }
    }
}
