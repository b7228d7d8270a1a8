//! Lattices x(s) and the divided-difference operators D and S.
//!
//! A lattice is either q-linear, `x(s) = c1 q^{-s} + c2 q^s + c3` with
//! `q = r^2`, or quadratic, `x(s) = c4 s^2 + c5 s + c6`. Supplying q through
//! its square root `r` keeps every structural constant rational: `q^{n/2}`
//! is `r^n`.
//!
//! D (the x-derivative) and S (the x-average) act on polynomials in the
//! lattice variable `z = x(s)`:
//!
//! ```text
//! Dp(x(s)) = [p(x(s+1/2)) - p(x(s-1/2))] / [x(s+1/2) - x(s-1/2)]
//! Sp(x(s)) = [p(x(s+1/2)) + p(x(s-1/2))] / 2
//! ```
//!
//! D lowers degree by one, S preserves it. On the constant lattice
//! (`c4 = c5 = 0`) they degenerate to the ordinary derivative and the
//! identity, which is how the continuous families enter the picture.

use crate::error::{Error, Result};
use crate::poly::{interpolate, Polynomial};
use crate::scalar::{format_scalar, int, is_half_integer, pow_i, rat, twice_as_int, Scalar};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// `x(s) = c1 q^{-s} + c2 q^s + c3`, with `q = r^2`, `r > 0`, `r != 1`.
    QLinear {
        r: Scalar,
        c1: Scalar,
        c2: Scalar,
        c3: Scalar,
    },
    /// `x(s) = c4 s^2 + c5 s + c6`.
    Quadratic { c4: Scalar, c5: Scalar, c6: Scalar },
}

impl Lattice {
    /// Validated q-linear lattice: `r > 0`, `r != 1`, `(c1, c2) != (0, 0)`.
    pub fn q_linear(r: Scalar, c1: Scalar, c2: Scalar, c3: Scalar) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::InvalidLattice("r must be positive"));
        }
        if r.is_one() {
            return Err(Error::InvalidLattice("r must differ from 1"));
        }
        if c1.is_zero() && c2.is_zero() {
            return Err(Error::InvalidLattice("(c1, c2) must not both vanish"));
        }
        Ok(Lattice::QLinear { r, c1, c2, c3 })
    }

    /// Validated quadratic lattice: `(c4, c5, c6) != (0, 0, 0)`. The constant
    /// lattice `c4 = c5 = 0, c6 != 0` is admitted and flags the continuous
    /// case.
    pub fn quadratic(c4: Scalar, c5: Scalar, c6: Scalar) -> Result<Self> {
        if c4.is_zero() && c5.is_zero() && c6.is_zero() {
            return Err(Error::InvalidLattice("(c4, c5, c6) must not all vanish"));
        }
        Ok(Lattice::Quadratic { c4, c5, c6 })
    }

    /// True for the constant lattice (continuous case).
    pub fn is_constant(&self) -> bool {
        matches!(self, Lattice::Quadratic { c4, c5, .. } if c4.is_zero() && c5.is_zero())
    }

    /// Exact lattice value. Q-linear lattices are only evaluated at
    /// half-integer `s` (so that `q^s = r^{2s}` is rational).
    pub fn x_eval(&self, s: &Scalar) -> Result<Scalar> {
        match self {
            Lattice::QLinear { r, c1, c2, c3 } => {
                if !is_half_integer(s) {
                    return Err(Error::NonHalfIntegerArgument(format_scalar(s)));
                }
                let qs = pow_i(r, twice_as_int(s));
                Ok(c1 * qs.recip() + c2 * qs + c3)
            }
            Lattice::Quadratic { c4, c5, c6 } => Ok(c4 * s * s + c5 * s + c6),
        }
    }

    /// The constants in `x(s+1/2) + x(s-1/2) = 2 alpha x(s) + 2 beta`.
    pub fn alpha_beta(&self) -> (Scalar, Scalar) {
        match self {
            Lattice::QLinear { r, c3, .. } => {
                let alpha = (r + r.recip()) / int(2);
                let beta = (Scalar::one() - &alpha) * c3;
                (alpha, beta)
            }
            Lattice::Quadratic { c4, .. } => (Scalar::one(), c4 / int(4)),
        }
    }

    /// `alpha_n = (q^{n/2} + q^{-n/2}) / 2`; its q -> 1 limit is 1.
    pub fn alpha_n(&self, n: i64) -> Scalar {
        match self {
            Lattice::QLinear { r, .. } => (pow_i(r, n) + pow_i(r, -n)) / int(2),
            Lattice::Quadratic { .. } => Scalar::one(),
        }
    }

    /// `gamma_n = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})`; its q -> 1
    /// limit is n.
    pub fn gamma_n(&self, n: i64) -> Scalar {
        match self {
            Lattice::QLinear { r, .. } => (pow_i(r, n) - pow_i(r, -n)) / (r - r.recip()),
            Lattice::Quadratic { .. } => int(n),
        }
    }

    /// Sampling abscissae with pairwise-distinct lattice values and a
    /// nonzero half-step difference, for realizing D and S by interpolation.
    fn sample_points(&self, need: usize) -> Result<Vec<SamplePoint>> {
        let mut out: Vec<SamplePoint> = Vec::with_capacity(need);
        // Plenty of slack: only finitely many arguments are ever skipped on
        // a valid lattice.
        let budget = 4 * need + 16;
        for k in 0..budget {
            if out.len() == need {
                break;
            }
            let s = match self {
                // q-linear: s = 0, 1, 2, ...
                Lattice::QLinear { .. } => int(k as i64),
                // quadratic: s = 0, 1, -1, 2, -2, ...
                Lattice::Quadratic { .. } => {
                    let k = k as i64;
                    if k % 2 == 1 {
                        int(k / 2 + 1)
                    } else {
                        int(-(k / 2))
                    }
                }
            };
            let x = self.x_eval(&s)?;
            let x_plus = self.x_eval(&(&s + rat(1, 2)))?;
            let x_minus = self.x_eval(&(&s - rat(1, 2)))?;
            if x_plus == x_minus || out.iter().any(|p| p.x == x) {
                continue;
            }
            out.push(SamplePoint { x, x_plus, x_minus });
        }
        if out.len() == need {
            Ok(out)
        } else {
            Err(Error::DegenerateSampling)
        }
    }

    /// x-derivative of `p`: the unique polynomial with
    /// `Dp(x(s)) = [p(x(s+1/2)) - p(x(s-1/2))] / [x(s+1/2) - x(s-1/2)]`.
    /// `deg(Dp) = deg p - 1`.
    pub fn d_op(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.degree().is_none_or(|d| d == 0) {
            return Ok(Polynomial::zero());
        }
        if self.is_constant() {
            return Ok(p.derivative());
        }
        let samples = self.sample_points(p.degree().unwrap() + 1)?;
        let pts: Vec<(Scalar, Scalar)> = samples
            .into_iter()
            .map(|sp| {
                let num = p.eval(&sp.x_plus) - p.eval(&sp.x_minus);
                let den = sp.x_plus - sp.x_minus;
                (sp.x, num / den)
            })
            .collect();
        interpolate(&pts)
    }

    /// The square of the half-step difference, `((x(s+1/2) - x(s-1/2))/2)^2`,
    /// as a polynomial in `z = x(s)`: `c4 z + c5^2/4 - c4 c6` on quadratic
    /// lattices, `(alpha^2 - 1)((z - c3)^2 - 4 c1 c2)` on q-linear ones.
    fn half_step_square(&self) -> Polynomial {
        match self {
            Lattice::Quadratic { c4, c5, c6 } => {
                Polynomial::from_coeffs(vec![c5 * c5 / int(4) - c4 * c6, c4.clone()])
            }
            Lattice::QLinear { c1, c2, c3, .. } => {
                let (alpha, _) = self.alpha_beta();
                let asq1 = &alpha * &alpha - Scalar::one();
                Polynomial::from_coeffs(vec![
                    (c3 * c3 - int(4) * c1 * c2) * &asq1,
                    int(-2) * c3 * &asq1,
                    asq1,
                ])
            }
        }
    }

    /// `(D z^k, S z^k)` for `k = 0..=upto`, via the product rules
    /// `D(fg) = Df Sg + Sf Dg` and `S(fg) = Sf Sg + U Df Dg` with
    /// `U = ((x(s+1/2) - x(s-1/2))/2)^2`. Equal to applying [`Lattice::d_op`]
    /// and [`Lattice::s_op`] to each monomial, at quadratic rather than cubic
    /// cost in the degree.
    pub fn monomial_images(&self, upto: usize) -> Vec<(Polynomial, Polynomial)> {
        let (alpha, beta) = self.alpha_beta();
        let sz = Polynomial::from_coeffs(vec![beta, alpha]);
        let u = self.half_step_square();
        let mut out = Vec::with_capacity(upto + 1);
        out.push((Polynomial::zero(), Polynomial::one()));
        for k in 0..upto {
            let (dk, sk) = &out[k];
            let d_next = &(dk * &sz) + sk;
            let s_next = &(sk * &sz) + &(&u * dk);
            out.push((d_next, s_next));
        }
        out
    }

    /// x-average of `p`: the unique polynomial with
    /// `Sp(x(s)) = [p(x(s+1/2)) + p(x(s-1/2))] / 2`. `deg(Sp) = deg p`.
    pub fn s_op(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.is_zero() {
            return Ok(Polynomial::zero());
        }
        if self.is_constant() {
            return Ok(p.clone());
        }
        let samples = self.sample_points(p.degree().unwrap() + 1)?;
        let pts: Vec<(Scalar, Scalar)> = samples
            .into_iter()
            .map(|sp| {
                let val = (p.eval(&sp.x_plus) + p.eval(&sp.x_minus)) / int(2);
                (sp.x, val)
            })
            .collect();
        interpolate(&pts)
    }
}

struct SamplePoint {
    x: Scalar,
    x_plus: Scalar,
    x_minus: Scalar,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn qlin(r: (i64, i64), c1: (i64, i64), c2: (i64, i64), c3: (i64, i64)) -> Lattice {
        Lattice::q_linear(
            rat(r.0, r.1),
            rat(c1.0, c1.1),
            rat(c2.0, c2.1),
            rat(c3.0, c3.1),
        )
        .unwrap()
    }

    fn quad(c4: i64, c5: i64, c6: i64) -> Lattice {
        Lattice::quadratic(int(c4), int(c5), int(c6)).unwrap()
    }

    #[test]
    fn invariants_enforced() {
        assert!(Lattice::q_linear(int(1), int(1), int(1), int(0)).is_err());
        assert!(Lattice::q_linear(int(-2), int(1), int(1), int(0)).is_err());
        assert!(Lattice::q_linear(int(2), int(0), int(0), int(5)).is_err());
        assert!(Lattice::quadratic(int(0), int(0), int(0)).is_err());
        assert!(Lattice::quadratic(int(0), int(0), int(1)).is_ok());
    }

    #[test]
    fn x_eval_examples() {
        assert_eq!(quad(0, 2, 1).x_eval(&int(3)).unwrap(), int(7));
        // r = 2 means q = 4: x(1) = (1/2)/4 + (1/2)*4 = 17/8
        let l = qlin((2, 1), (1, 2), (1, 2), (0, 1));
        assert_eq!(l.x_eval(&int(1)).unwrap(), rat(17, 8));
        assert_eq!(quad(1, 0, 0).x_eval(&rat(1, 2)).unwrap(), rat(1, 4));
        assert!(matches!(
            l.x_eval(&rat(1, 3)),
            Err(Error::NonHalfIntegerArgument(_))
        ));
    }

    #[test]
    fn alpha_beta_examples() {
        let (a, b) = quad(3, 7, -2).alpha_beta();
        assert_eq!((a, b), (int(1), rat(3, 4)));
        let (a, b) = qlin((2, 1), (1, 1), (1, 1), (3, 1)).alpha_beta();
        assert_eq!(a, rat(5, 4));
        assert_eq!(b, rat(-3, 4));
    }

    #[test]
    fn alpha_gamma_sequences() {
        let l = qlin((2, 1), (1, 2), (1, 2), (0, 1));
        assert_eq!(l.alpha_n(0), int(1));
        assert_eq!(l.gamma_n(0), int(0));
        assert_eq!(l.alpha_n(2), rat(17, 8));
        assert_eq!(l.gamma_n(2), rat(5, 2));
        // negative indices extend the formulas
        assert_eq!(l.alpha_n(-2), rat(17, 8));
        assert_eq!(l.gamma_n(-2), rat(-5, 2));

        let q = quad(1, 0, 0);
        assert_eq!(q.alpha_n(5), int(1));
        assert_eq!(q.gamma_n(5), int(5));
    }

    #[test]
    fn d_and_s_on_low_degrees() {
        for l in [
            quad(0, 2, 1),
            quad(1, 0, 0),
            quad(2, -3, 1),
            qlin((2, 1), (1, 2), (1, 2), (0, 1)),
            qlin((1, 3), (1, 1), (-2, 1), (1, 1)),
        ] {
            let z = Polynomial::monomial(1);
            let z2 = Polynomial::monomial(2);
            let (alpha, beta) = l.alpha_beta();
            // D z = 1
            assert_eq!(l.d_op(&z).unwrap(), Polynomial::one());
            // S z = alpha z + beta
            assert_eq!(
                l.s_op(&z).unwrap(),
                Polynomial::from_coeffs(vec![beta.clone(), alpha.clone()])
            );
            // D z^2 = 2 alpha z + 2 beta
            assert_eq!(
                l.d_op(&z2).unwrap(),
                Polynomial::from_coeffs(vec![int(2) * &beta, int(2) * &alpha])
            );
        }
    }

    #[test]
    fn frozen_operator_values() {
        // independently computed: on x(s) = s^2 + s/2 + 3,
        // D z^3 = 3 z^2 + (5/2) z - 11/4 and S z^2 = z^2 + (3/2) z - 23/8
        let l = Lattice::quadratic(int(1), rat(1, 2), int(3)).unwrap();
        assert_eq!(
            l.d_op(&Polynomial::monomial(3)).unwrap(),
            Polynomial::from_coeffs(vec![rat(-11, 4), rat(5, 2), int(3)])
        );
        assert_eq!(
            l.s_op(&Polynomial::monomial(2)).unwrap(),
            Polynomial::from_coeffs(vec![rat(-23, 8), rat(3, 2), int(1)])
        );
        // on the symmetric q-lattice with r = 2: S z^2 = (17/8) z^2 - 9/16
        let l = qlin((2, 1), (1, 2), (1, 2), (0, 1));
        assert_eq!(
            l.s_op(&Polynomial::monomial(2)).unwrap(),
            Polynomial::from_coeffs(vec![rat(-9, 16), int(0), rat(17, 8)])
        );
    }

    #[test]
    fn monomial_images_match_the_operators() {
        for l in [
            quad(0, 2, 1),
            quad(1, 0, 0),
            quad(2, -3, 1),
            quad(0, 0, 5),
            qlin((2, 1), (1, 2), (1, 2), (0, 1)),
            qlin((1, 3), (1, 1), (-2, 1), (1, 1)),
        ] {
            let images = l.monomial_images(10);
            for (k, (dk, sk)) in images.iter().enumerate() {
                let zk = Polynomial::monomial(k);
                assert_eq!(dk, &l.d_op(&zk).unwrap(), "D z^{k} on {l:?}");
                assert_eq!(sk, &l.s_op(&zk).unwrap(), "S z^{k} on {l:?}");
            }
        }
    }

    #[test]
    fn constant_lattice_degenerates() {
        let l = quad(0, 0, 1);
        assert!(l.is_constant());
        let p = Polynomial::from_coeffs(vec![int(1), int(2), int(3)]); // 3z^2+2z+1
        assert_eq!(l.d_op(&p).unwrap(), p.derivative());
        assert_eq!(l.s_op(&p).unwrap(), p);
    }

    #[test]
    fn pointwise_divided_difference_identity() {
        let p = Polynomial::from_coeffs(vec![int(1), rat(-1, 2), int(0), int(2), rat(5, 3)]);
        for l in [quad(2, -3, 1), qlin((3, 1), (1, 4), (-2, 1), (1, 1))] {
            let dp = l.d_op(&p).unwrap();
            let sp = l.s_op(&p).unwrap();
            for k in -6..=6 {
                let s = rat(k, 2); // half-integer window
                let xp = l.x_eval(&(&s + rat(1, 2))).unwrap();
                let xm = l.x_eval(&(&s - rat(1, 2))).unwrap();
                let x = l.x_eval(&s).unwrap();
                assert_eq!(
                    dp.eval(&x) * (&xp - &xm),
                    p.eval(&xp) - p.eval(&xm),
                    "D identity fails at s = {k}/2 on {l:?}"
                );
                assert_eq!(
                    int(2) * sp.eval(&x),
                    p.eval(&xp) + p.eval(&xm),
                    "S identity fails at s = {k}/2 on {l:?}"
                );
            }
        }
    }
}
