//! Normal-ordered linear differential operators with polynomial coefficients.
//!
//! An operator is a finite sum sum_j p_j(x) d^j with all multiplication
//! operators to the left of all derivatives. Composition re-orders products
//! through the Leibniz rule d^j . q(x) = sum_i C(j,i) q^(i)(x) d^(j-i), which
//! keeps every result in normal form.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::{binomial, Poly, Rational};

/// Normal-ordered operator; `terms[j]` is the coefficient polynomial of d^j.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    terms: Vec<Poly>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp { terms: Vec::new() }
    }

    /// The multiplication operator p(x).
    pub fn mul_op(p: Poly) -> Self {
        DiffOp::from_terms(vec![(0, p)])
    }

    pub fn identity_scaled(c: Rational) -> Self {
        DiffOp::mul_op(Poly::constant(c))
    }

    /// The pure derivative d^order.
    pub fn derivative_op(order: usize) -> Self {
        DiffOp::from_terms(vec![(order, Poly::one())])
    }

    pub fn from_terms(terms: Vec<(usize, Poly)>) -> Self {
        let mut op = DiffOp { terms: Vec::new() };
        for (order, p) in terms {
            op.add_term(order, p);
        }
        op.normalize();
        op
    }

    fn add_term(&mut self, order: usize, p: Poly) {
        if p.is_zero() {
            return;
        }
        if self.terms.len() <= order {
            self.terms.resize(order + 1, Poly::zero());
        }
        self.terms[order] = &self.terms[order] + &p;
    }

    fn normalize(&mut self) {
        while self.terms.last().is_some_and(Poly::is_zero) {
            self.terms.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Poly::is_zero)
    }

    /// Highest derivative order present, `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.terms.iter().rposition(|p| !p.is_zero())
    }

    /// Coefficient polynomial of d^j.
    pub fn coeff(&self, order: usize) -> Poly {
        self.terms.get(order).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero();
        }
        DiffOp {
            terms: self.terms.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Normal-ordered product self . other.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (j, p) in self.terms.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (k, q) in other.terms.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                // p d^j q d^k = p sum_i C(j,i) q^(i) d^(j-i+k)
                let mut q_deriv = q.clone();
                for i in 0..=j {
                    if i > 0 {
                        q_deriv = q_deriv.derivative();
                        if q_deriv.is_zero() {
                            break;
                        }
                    }
                    let coeff = &(p * &q_deriv).scale(&binomial(j, i));
                    out.add_term(j - i + k, coeff.clone());
                }
            }
        }
        out.normalize();
        out
    }

    /// Applies the operator to a polynomial, exactly.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero();
        let mut deriv = f.clone();
        for (j, p) in self.terms.iter().enumerate() {
            if j > 0 {
                deriv = deriv.derivative();
            }
            if p.is_zero() || deriv.is_zero() {
                continue;
            }
            out = &out + &(p * &deriv);
        }
        out
    }

    /// ab - ba, normal-ordered.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        &self.compose(other) - &other.compose(self)
    }
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        let n = self.terms.len().max(rhs.terms.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        let mut op = DiffOp { terms: out };
        op.normalize();
        op
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self + &(-rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp {
            terms: self.terms.iter().map(|p| -p).collect(),
        }
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, p) in self.terms.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "[{}]", p)?,
                1 => write!(f, "[{}]*D", p)?,
                _ => write!(f, "[{}]*D^{}", p, j)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
