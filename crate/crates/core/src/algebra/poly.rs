//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored by ascending degree with no trailing zeros, so the
//! empty list is the canonical zero polynomial. Degrees in this crate stay
//! small (below ~60), which keeps the dense representation the simple and
//! fast choice.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{rational_to_f64, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    /// c * x^k
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * super::rat_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    /// Taylor shift: returns p(x + t).
    pub fn shift(&self, t: &Rational) -> Poly {
        if t.is_zero() || self.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        // Horner in (x + t): fold from the top coefficient down.
        for c in self.coeffs.iter().rev() {
            let mut carry = Rational::zero();
            for slot in out.iter_mut().take(n) {
                let new = carry + &*slot * t;
                carry = std::mem::replace(slot, new);
            }
            // carry now holds the former top coefficient shifted out; discard
            // (it is always zero because we sized `out` to the full degree).
            out[0] += c;
            debug_assert!(carry.is_zero());
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let d = divisor.coeffs.len();
        if self.coeffs.len() < d {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len() - d + 1];
        let lead = divisor.leading_coeff();
        for i in (0..quot.len()).rev() {
            let q = &rem[i + d - 1] / &lead;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = dc * &q;
                    rem[i + j] -= t;
                }
            }
            quot[i] = q;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd over the rationals.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Rescales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = Rational::one() / self.leading_coeff();
        self.scale(&inv)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn schoolbook_product() {
        // (x^2 + 1)(x - 1) = x^3 - x^2 + x - 1
        let a = Poly::from_ints(&[1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[-1, 1, -1, 1]));
    }

    #[test]
    fn derivative_of_cube() {
        let p = Poly::monomial(rat_int(1), 3);
        assert_eq!(p.derivative(), Poly::monomial(rat_int(3), 2));
    }

    #[test]
    fn cancellation_yields_canonical_zero() {
        let x = Poly::x();
        let sum = &x + &(-&x);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
        assert_eq!(sum.degree(), None);
    }

    #[test]
    fn taylor_shift_matches_direct_expansion() {
        // p(x) = x^2 - 3x, p(x + 2) = x^2 + x - 2
        let p = Poly::from_ints(&[0, -3, 1]);
        assert_eq!(p.shift(&rat_int(2)), Poly::from_ints(&[-2, 1, 1]));
        // shift back is the inverse
        assert_eq!(p.shift(&rat_int(2)).shift(&rat_int(-2)), p);
    }

    #[test]
    fn division_with_remainder() {
        let n = Poly::from_ints(&[1, 0, 0, 1]); // x^3 + 1
        let d = Poly::from_ints(&[1, 1]); // x + 1
        let (q, r) = n.div_rem(&d);
        assert_eq!(q, Poly::from_ints(&[1, -1, 1]));
        assert!(r.is_zero());
        let d2 = Poly::from_ints(&[1, 0, 1]); // x^2 + 1
        let (q2, r2) = n.div_rem(&d2);
        assert_eq!(q2, Poly::x());
        assert_eq!(r2, Poly::from_ints(&[1, -1]));
        assert_eq!(&(&q2 * &d2) + &r2, n);
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = Poly::from_ints(&[0, -1, 0, 1]); // x^3 - x = x(x-1)(x+1)
        let b = Poly::from_ints(&[0, 2, 2]); // 2x(x+1)
        let g = a.gcd(&b);
        assert_eq!(g, Poly::from_ints(&[0, 1, 1])); // x^2 + x, monic
    }

    #[test]
    fn eval_rational_and_float_agree() {
        let p = Poly::from_coeffs(vec![rat(1, 2), rat(-1, 3), rat_int(1)]);
        let exact = p.eval(&rat(3, 2));
        assert_eq!(exact, rat(9, 4) - rat(1, 2) + rat(1, 2));
        assert!((p.eval_f64(1.5) - rational_to_f64(&exact)).abs() < 1e-14);
    }

    use super::super::rational_to_f64;
}
