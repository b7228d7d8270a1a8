//! Dense univariate polynomials over [`Scalar`].
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! representation is canonical and `==` is structural equality. The zero
//! polynomial has an empty coefficient vector and `degree() == None` (the
//! "minus infinity" degree), which keeps contracts like
//! `deg(Dp) = deg p - 1` well-typed at the bottom.

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = Scalar::one();
        Polynomial { coeffs }
    }

    /// Builds from `coeffs[k]` = coefficient of `z^k`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Horner evaluation; exact.
    pub fn eval(&self, z: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Formal derivative, used for the constant-lattice divided difference.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Scalar::from_integer(k.into()))
                .collect(),
        )
    }

    /// Euclidean division by a nonzero divisor: `self = q * div + r`,
    /// `deg r < deg div`.
    pub(crate) fn div_rem(&self, div: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dlen = div.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dlen + 1];
        let lead = div.coeffs.last().unwrap();
        while rem.len() >= dlen {
            let k = rem.len() - dlen;
            let c = rem.last().unwrap() / lead;
            for (i, dc) in div.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[i + k] -= t;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            quot[k] = c;
        }
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub(crate) fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut p, mut q) = (self.clone(), other.clone());
        while !q.is_zero() {
            let (_, r) = p.div_rem(&q);
            p = q;
            q = r;
        }
        match p.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                p.scale(&inv)
            }
            _ => p,
        }
    }
}

impl fmt::Debug for Polynomial {
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
                0 => write!(f, "{}", format_scalar(c))?,
                1 => write!(f, "{}*z", format_scalar(c))?,
                _ => write!(f, "{}*z^{}", format_scalar(c), k)?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Lagrange interpolation: the unique polynomial of degree `< points.len()`
/// through all points. Abscissae must be pairwise distinct.
pub fn interpolate(points: &[(Scalar, Scalar)]) -> Result<Polynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::DuplicateAbscissa(format_scalar(xi)));
            }
        }
    }
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = Polynomial::one();
        let mut den = Scalar::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            num = &num * &Polynomial::from_coeffs(vec![-xj.clone(), Scalar::one()]);
            den *= xi - xj;
        }
        acc = &acc + &num.scale(&(yi / den));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn p(cs: &[Scalar]) -> Polynomial {
        Polynomial::from_coeffs(cs.to_vec())
    }

    #[test]
    fn eval_examples() {
        // z^2 + 1 at 2
        assert_eq!(p(&[int(1), int(0), int(1)]).eval(&int(2)), int(5));
        // zero polynomial anywhere
        assert_eq!(Polynomial::zero().eval(&int(7)), int(0));
        // 3z - 1/2 at 1/3
        assert_eq!(p(&[rat(-1, 2), int(3)]).eval(&rat(1, 3)), rat(1, 2));
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[int(0)]).degree(), None);
        assert_eq!(p(&[int(1), int(2), int(0)]).degree(), Some(1));
    }

    #[test]
    fn interpolate_examples() {
        // constant data
        let c = interpolate(&[(int(0), int(1)), (int(1), int(1))]).unwrap();
        assert_eq!(c, Polynomial::one());
        // exact square data
        let sq = interpolate(&[(int(0), int(0)), (int(1), int(1)), (int(2), int(4))]).unwrap();
        assert_eq!(sq, Polynomial::monomial(2));
        // affine data
        let aff = interpolate(&[(int(1), int(2)), (int(2), int(3))]).unwrap();
        assert_eq!(aff, p(&[int(1), int(1)]));
        // duplicate abscissa rejected
        assert!(matches!(
            interpolate(&[(int(1), int(0)), (int(1), int(5))]),
            Err(Error::DuplicateAbscissa(_))
        ));
    }

    #[test]
    fn div_rem_and_gcd() {
        // (z - 2)(z + 3) divided by (z - 2)
        let a = &p(&[int(-2), int(1)]) * &p(&[int(3), int(1)]);
        let (q, r) = a.div_rem(&p(&[int(-2), int(1)]));
        assert_eq!(q, p(&[int(3), int(1)]));
        assert!(r.is_zero());

        let g = a.gcd(&p(&[int(-4), int(2)])); // gcd with 2(z - 2)
        assert_eq!(g, p(&[int(-2), int(1)])); // monic z - 2
    }
}
