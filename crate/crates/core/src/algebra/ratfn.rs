//! Rational functions: quotients of [`Poly`] kept in reduced form with a
//! monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    /// Builds num/den and reduces: common factors removed, denominator monic.
    /// Panics when the denominator is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "RationalFn with zero denominator");
        let mut r = RationalFn { num, den };
        r.reduce();
        r
    }

    pub fn zero() -> Self {
        RationalFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let lead = self.den.leading_coeff();
        if !lead.is_one() {
            let inv = Rational::from_integer(1.into()) / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the polynomial when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den == Poly::one()).then_some(&self.num)
    }

    pub fn derivative(&self) -> RationalFn {
        // (n/d)' = (n'd - nd')/d^2
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFn::new(n, &self.den * &self.den)
    }

    /// Exact evaluation; `None` on a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn scale(&self, c: &Rational) -> RationalFn {
        RationalFn::new(self.num.scale(c), self.den.clone())
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
