//! Univariate rational functions, kept reduced with a monic denominator.
//!
//! Internal machinery for the recurrence-coefficient formulas: evaluated as
//! reduced rational functions of the degree index, the formulas stay exact
//! at indices where a literal transcription would meet a removable 0/0.

use crate::poly::Polynomial;
use crate::scalar::Scalar;
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RatFn {
    num: Polynomial,
    den: Polynomial,
}

impl RatFn {
    pub(crate) fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let g = num.gcd(&den);
        let (num, den) = if g.degree().is_some_and(|d| d > 0) {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        // monic denominator
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFn { num, den }
        } else {
            let inv = lc.recip();
            RatFn {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub(crate) fn from_poly(p: Polynomial) -> Self {
        RatFn {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub(crate) fn constant(c: Scalar) -> Self {
        RatFn::from_poly(Polynomial::constant(c))
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub(crate) fn add(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub(crate) fn sub(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub(crate) fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub(crate) fn div(&self, rhs: &RatFn) -> RatFn {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Value at `x`, or `None` at a (non-removable) pole.
    pub(crate) fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn poly(cs: &[Scalar]) -> Polynomial {
        Polynomial::from_coeffs(cs.to_vec())
    }

    #[test]
    fn removable_singularity_cancels() {
        // (x^2 - 1)/(x - 1) -> x + 1, defined at x = 1
        let f = RatFn::new(poly(&[int(-1), int(0), int(1)]), poly(&[int(-1), int(1)]));
        assert_eq!(f.eval(&int(1)), Some(int(2)));
        assert_eq!(f.eval(&int(3)), Some(int(4)));
    }

    #[test]
    fn pole_is_none() {
        // 1/(x - 2)
        let f = RatFn::new(Polynomial::one(), poly(&[int(-2), int(1)]));
        assert_eq!(f.eval(&int(2)), None);
        assert_eq!(f.eval(&int(3)), Some(int(1)));
    }

    #[test]
    fn arithmetic_reduces() {
        // x/(x+1) + 1/(x+1) = 1
        let a = RatFn::new(poly(&[int(0), int(1)]), poly(&[int(1), int(1)]));
        let b = RatFn::new(Polynomial::one(), poly(&[int(1), int(1)]));
        let s = a.add(&b);
        assert_eq!(s.eval(&rat(7, 3)), Some(int(1)));
        assert_eq!(s.eval(&int(-1)), Some(int(1)));
    }
}
