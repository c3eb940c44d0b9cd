//! Exact arithmetic substrate: big-rational scalars, dense polynomials,
//! reduced rational functions and normal-ordered differential operators.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

mod diffop;
mod poly;
mod ratfn;

pub use diffop::DiffOp;
pub use poly::Poly;
pub use ratfn::RationalFn;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Converts to f64, falling back to a scaled division when the parts
/// overflow a double on their own.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Scale both parts down by a common power of two.
    let numer = r.numer();
    let denom = r.denom();
    let shift = (numer.bits().max(denom.bits()) as i64 - 900).max(0) as u64;
    let n = (numer >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (denom >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Binomial coefficient as a rational, exact for any n, k.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_detects_perfect_squares() {
        assert_eq!(rational_sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt_exact(&rat(2, 1)), None);
        assert_eq!(rational_sqrt_exact(&rat(-1, 1)), None);
        assert_eq!(rational_sqrt_exact(&rat(0, 5)), Some(Rational::zero()));
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), rat_int(6));
        assert_eq!(binomial(5, 0), rat_int(1));
        assert_eq!(binomial(3, 5), rat_int(0));
    }

    #[test]
    fn to_f64_handles_huge_ratios() {
        let big = Rational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399));
        let v = rational_to_f64(&big);
        assert!((v - 10.0).abs() < 1e-9);
    }
}
