//! Forward direction: from Pearson data to regularity and recurrence
//! coefficients.
//!
//! A functional `u` with `D(phi u) = S(psi u)` on a lattice, with
//! `phi(z) = a z^2 + b z + c` and `psi(z) = d z + e`, is regular exactly
//! when `d_n != 0` and `phi^[n]` is nonzero at a distinguished point, for
//! every n. Under regularity the monic orthogonal sequence satisfies
//! `P_{n+1} = (z - B_n) P_n - C_n P_{n-1}` with explicit `B_n`, `C_{n+1}`.
//!
//! `B_n` and `C_{n+1}` are evaluated here as *reduced* rational functions of
//! the degree index (in `n` itself on quadratic lattices, in `t = r^n` on
//! q-linear ones). Wherever the literal formulas are defined the two
//! evaluations agree; at indices where the literal form meets a removable
//! 0/0 (which happens for perfectly good finite families), the reduced form
//! still produces the exact coefficient. A non-removable pole surfaces as
//! [`Error::DivisionByZeroInFormula`]. The n = 0 coefficients use their own
//! closed forms: the `e_{n-1}/d_{2n-2}` term of `B_0` vanishes with its
//! prefactor, and the `d_{-1}` factor of `C_1` cancels between numerator and
//! denominator.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poly::Polynomial;
use crate::ratfn::RatFn;
use crate::scalar::{int, pow_i, rat, Scalar};
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Coefficients of `phi(z) = a z^2 + b z + c` and `psi(z) = d z + e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PearsonData {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    pub e: Scalar,
}

impl PearsonData {
    /// Requires that phi and psi are not both identically zero.
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar, e: Scalar) -> Result<Self> {
        let pd = PearsonData { a, b, c, d, e };
        if pd.a.is_zero() && pd.b.is_zero() && pd.c.is_zero() && pd.d.is_zero() && pd.e.is_zero() {
            return Err(Error::InvalidPearsonData(
                "phi and psi must not both be identically zero",
            ));
        }
        Ok(pd)
    }

    pub fn phi(&self) -> Polynomial {
        Polynomial::from_coeffs(vec![self.c.clone(), self.b.clone(), self.a.clone()])
    }

    pub fn psi(&self) -> Polynomial {
        Polynomial::from_coeffs(vec![self.e.clone(), self.d.clone()])
    }

    /// Same data scaled to `d = 1`, or `None` when `d = 0`.
    pub fn normalized(&self) -> Option<PearsonData> {
        if self.d.is_zero() {
            return None;
        }
        let inv = self.d.recip();
        Some(PearsonData {
            a: &self.a * &inv,
            b: &self.b * &inv,
            c: &self.c * &inv,
            d: Scalar::one(),
            e: &self.e * &inv,
        })
    }
}

/// `d_n`: `a gamma_n + d alpha_n` (q-linear), `a n + d` (quadratic).
pub fn dn(pd: &PearsonData, lattice: &Lattice, n: i64) -> Scalar {
    match lattice {
        Lattice::QLinear { .. } => &pd.a * lattice.gamma_n(n) + &pd.d * lattice.alpha_n(n),
        Lattice::Quadratic { .. } => &pd.a * int(n) + &pd.d,
    }
}

/// `e_n`: `(2a c3 + b) gamma_n + (d c3 + e) alpha_n` (q-linear),
/// `b n + e + (1/2) c4 d n^2` (quadratic).
pub fn en(pd: &PearsonData, lattice: &Lattice, n: i64) -> Scalar {
    match lattice {
        Lattice::QLinear { c3, .. } => {
            (int(2) * &pd.a * c3 + &pd.b) * lattice.gamma_n(n)
                + (&pd.d * c3 + &pd.e) * lattice.alpha_n(n)
        }
        Lattice::Quadratic { c4, .. } => {
            &pd.b * int(n) + &pd.e + rat(1, 2) * c4 * &pd.d * int(n) * int(n)
        }
    }
}

/// The degree-two polynomial `phi^[n]` of the relevant theorem.
pub fn phi_n(pd: &PearsonData, lattice: &Lattice, n: i64) -> Polynomial {
    match lattice {
        Lattice::QLinear { c1, c2, c3, .. } => {
            let (alpha, _) = lattice.alpha_beta();
            let asq1 = &alpha * &alpha - Scalar::one();
            let lead = &pd.d * &asq1 * lattice.gamma_n(2 * n) + &pd.a * lattice.alpha_n(2 * n);
            let phi_prime_c3 = int(2) * &pd.a * c3 + &pd.b;
            let psi_c3 = &pd.d * c3 + &pd.e;
            let mid = phi_prime_c3 * lattice.alpha_n(n) + psi_c3 * asq1 * lattice.gamma_n(n);
            let phi_c3 = pd.phi().eval(c3);
            let z_minus_c3 = Polynomial::from_coeffs(vec![-c3.clone(), Scalar::one()]);
            let sq = &(&z_minus_c3 * &z_minus_c3) - &Polynomial::constant(int(2) * c1 * c2);
            let tail = phi_c3 + int(2) * &pd.a * c1 * c2;
            &(&sq.scale(&lead) + &z_minus_c3.scale(&mid)) + &Polynomial::constant(tail)
        }
        Lattice::Quadratic { c4, c5, c6 } => {
            let nn = int(n);
            let d_n = dn(pd, lattice, n);
            let lin = &pd.b + rat(3, 2) * c4 * &nn * &d_n;
            let q = c4 / int(4) * &nn * &nn;
            let disc = int(4) * c4 * c6 - c5 * c5;
            let tail = pd.phi().eval(&q) + rat(1, 2) * c4 * &nn * pd.psi().eval(&q)
                - &nn / int(4) * disc * &d_n;
            Polynomial::from_coeffs(vec![tail, lin, pd.a.clone()])
        }
    }
}

/// Which of the two regularity conditions failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// `d_n = 0`.
    DnZero,
    /// `phi^[n]` vanishes at (or cannot be evaluated at) the theorem's point.
    PhinZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityFailure {
    pub n: usize,
    pub reason: FailureReason,
}

/// Outcome of checking the regularity conditions for `n = 0..=limit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub limit: usize,
    pub first_failure: Option<RegularityFailure>,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.first_failure.is_none()
    }

    /// Largest prefix `0..=k` on which both conditions hold; `None` when the
    /// very first index already fails.
    pub fn regular_to(&self) -> Option<usize> {
        match &self.first_failure {
            None => Some(self.limit),
            Some(f) => f.n.checked_sub(1),
        }
    }
}

/// Checks `d_n != 0` and `phi^[n](point_n) != 0` for `n = 0..=limit` and
/// reports the first failure. Failure is data, not an error.
pub fn regularity(pd: &PearsonData, lattice: &Lattice, limit: usize) -> RegularityReport {
    RecurrenceEngine::new(pd, lattice).regularity(limit)
}

/// Precomputed recurrence-coefficient evaluator for one `(pd, lattice)` pair.
///
/// Building the rational functions once and evaluating per index keeps
/// sweeps over many indices cheap.
pub struct RecurrenceEngine {
    pd: PearsonData,
    lattice: Lattice,
    /// Coefficient formulas, built on first use; the inner `Option` is
    /// `None` when `a = d = 0` (every `d_n` vanishes identically and no
    /// coefficient is defined at any index).
    bc_rfs: OnceLock<Option<(RatFn, RatFn)>>,
    /// Evaluation point of `phi^[n]`, built on first use (regularity scans
    /// need only this, not the full coefficient formulas).
    pt_rf: OnceLock<Option<RatFn>>,
}

impl RecurrenceEngine {
    pub fn new(pd: &PearsonData, lattice: &Lattice) -> Self {
        RecurrenceEngine {
            pd: pd.clone(),
            lattice: lattice.clone(),
            bc_rfs: OnceLock::new(),
            pt_rf: OnceLock::new(),
        }
    }

    fn degenerate(&self) -> bool {
        self.pd.a.is_zero() && self.pd.d.is_zero()
    }

    fn bc(&self) -> Option<&(RatFn, RatFn)> {
        self.bc_rfs
            .get_or_init(|| {
                if self.degenerate() {
                    return None;
                }
                Some(match &self.lattice {
                    Lattice::Quadratic { .. } => Self::build_quadratic(&self.pd, &self.lattice),
                    Lattice::QLinear { .. } => Self::build_q_linear(&self.pd, &self.lattice),
                })
            })
            .as_ref()
    }

    fn pt(&self) -> Option<&RatFn> {
        self.pt_rf
            .get_or_init(|| {
                if self.degenerate() {
                    return None;
                }
                Some(match &self.lattice {
                    Lattice::Quadratic { .. } => {
                        Self::build_point_quadratic(&self.pd, &self.lattice)
                    }
                    Lattice::QLinear { .. } => Self::build_point_q_linear(&self.pd, &self.lattice),
                })
            })
            .as_ref()
    }

    /// Checks the regularity conditions for `n = 0..=limit`, reusing this
    /// engine's precomputed evaluation point.
    pub fn regularity(&self, limit: usize) -> RegularityReport {
        let mut first_failure = None;
        for n in 0..=limit {
            if dn(&self.pd, &self.lattice, n as i64).is_zero() {
                first_failure = Some(RegularityFailure {
                    n,
                    reason: FailureReason::DnZero,
                });
                break;
            }
            let ok = match self.point(n) {
                Some(pt) => !phi_n(&self.pd, &self.lattice, n as i64).eval(&pt).is_zero(),
                None => false,
            };
            if !ok {
                first_failure = Some(RegularityFailure {
                    n,
                    reason: FailureReason::PhinZero,
                });
                break;
            }
        }
        RegularityReport {
            limit,
            first_failure,
        }
    }

    /// `B_n`.
    pub fn b(&self, n: usize) -> Result<Scalar> {
        if n == 0 {
            let d0 = dn(&self.pd, &self.lattice, 0);
            if d0.is_zero() {
                return Err(Error::DivisionByZeroInFormula { n: 0 });
            }
            let e0 = en(&self.pd, &self.lattice, 0);
            let c3 = match &self.lattice {
                Lattice::QLinear { c3, .. } => c3.clone(),
                Lattice::Quadratic { .. } => Scalar::zero(),
            };
            return Ok(c3 - e0 / d0);
        }
        self.bc()
            .and_then(|(b_rf, _)| b_rf.eval(&self.arg(n)))
            .ok_or(Error::DivisionByZeroInFormula { n })
    }

    /// `C_{n+1}`.
    pub fn c_next(&self, n: usize) -> Result<Scalar> {
        if n == 0 {
            let d0 = dn(&self.pd, &self.lattice, 0);
            let d1 = dn(&self.pd, &self.lattice, 1);
            if d0.is_zero() || d1.is_zero() {
                return Err(Error::DivisionByZeroInFormula { n: 0 });
            }
            let pt = self.point(0).expect("d_0 checked nonzero");
            let phi0 = phi_n(&self.pd, &self.lattice, 0);
            return Ok(-self.lattice.gamma_n(1) * phi0.eval(&pt) / d1);
        }
        self.bc()
            .and_then(|(_, c_rf)| c_rf.eval(&self.arg(n)))
            .ok_or(Error::DivisionByZeroInFormula { n })
    }

    /// `(B_n, C_{n+1})`.
    pub fn pair(&self, n: usize) -> Result<(Scalar, Scalar)> {
        Ok((self.b(n)?, self.c_next(n)?))
    }

    /// The evaluation point of `phi^[n]` in the regularity condition,
    /// as a reduced rational function of the index. `None` at a pole.
    pub(crate) fn point(&self, n: usize) -> Option<Scalar> {
        if n == 0 {
            let d0 = dn(&self.pd, &self.lattice, 0);
            if d0.is_zero() {
                return None;
            }
            let e0 = en(&self.pd, &self.lattice, 0);
            let c3 = match &self.lattice {
                Lattice::QLinear { c3, .. } => c3.clone(),
                Lattice::Quadratic { .. } => Scalar::zero(),
            };
            return Some(c3 - e0 / d0);
        }
        self.pt().and_then(|pt_rf| pt_rf.eval(&self.arg(n)))
    }

    fn arg(&self, n: usize) -> Scalar {
        match &self.lattice {
            Lattice::Quadratic { .. } => int(n as i64),
            Lattice::QLinear { r, .. } => pow_i(r, n as i64),
        }
    }

    fn build_point_quadratic(pd: &PearsonData, lattice: &Lattice) -> RatFn {
        let Lattice::Quadratic { c4, .. } = lattice else {
            unreachable!()
        };
        let rho = RatFn::from_poly(Self::e_shift_quadratic(pd, lattice, 1, 0))
            .div(&RatFn::from_poly(Self::d_shift_quadratic(pd, 2, 0)));
        RatFn::from_poly(Polynomial::from_coeffs(vec![
            Scalar::zero(),
            Scalar::zero(),
            -c4 / int(4),
        ]))
        .sub(&rho)
    }

    fn d_shift_quadratic(pd: &PearsonData, m: i64, k: i64) -> Polynomial {
        Polynomial::from_coeffs(vec![&pd.a * int(k) + &pd.d, &pd.a * int(m)])
    }

    fn e_shift_quadratic(pd: &PearsonData, lattice: &Lattice, m: i64, k: i64) -> Polynomial {
        let Lattice::Quadratic { c4, .. } = lattice else {
            unreachable!()
        };
        Polynomial::from_coeffs(vec![
            &pd.b * int(k) + &pd.e + rat(1, 2) * c4 * &pd.d * int(k) * int(k),
            &pd.b * int(m) + c4 * &pd.d * int(m) * int(k),
            rat(1, 2) * c4 * &pd.d * int(m) * int(m),
        ])
    }

    /// Theorem-2 shapes, in the formal variable `nu`:
    /// `d_nu = a nu + d`, `e_nu = b nu + e + (1/2) c4 d nu^2`,
    /// `B_nu = nu e_{nu-1}/d_{2nu-2} - (nu+1) e_nu/d_{2nu} - (1/2) c4 nu (nu-1)`,
    /// `C_{nu+1} = -(nu+1) d_{nu-1} / (d_{2nu-1} d_{2nu+1})
    ///            * phi^[nu](-(1/4) c4 nu^2 - e_nu/d_{2nu})`.
    fn build_quadratic(pd: &PearsonData, lattice: &Lattice) -> (RatFn, RatFn) {
        let Lattice::Quadratic { c4, c5, c6 } = lattice else {
            unreachable!()
        };
        let (a, b, c, d, e) = (&pd.a, &pd.b, &pd.c, &pd.d, &pd.e);

        let d_shift = |m: i64, k: i64| Self::d_shift_quadratic(pd, m, k);
        let e_shift = |m: i64, k: i64| Self::e_shift_quadratic(pd, lattice, m, k);
        let nu = RatFn::from_poly(Polynomial::monomial(1));
        let one = RatFn::constant(Scalar::one());

        let rho = RatFn::from_poly(e_shift(1, 0)).div(&RatFn::from_poly(d_shift(2, 0)));
        let rho_prev = RatFn::from_poly(e_shift(1, -1)).div(&RatFn::from_poly(d_shift(2, -2)));

        let b_rf = nu
            .mul(&rho_prev)
            .sub(&nu.add(&one).mul(&rho))
            .sub(&RatFn::constant(rat(1, 2) * c4).mul(&nu).mul(&nu.sub(&one)));

        // phi^[nu] coefficients as polynomials in nu
        let q = Polynomial::from_coeffs(vec![Scalar::zero(), Scalar::zero(), c4 / int(4)]);
        let phi_of_q = &(&(&q * &q).scale(a) + &q.scale(b)) + &Polynomial::constant(c.clone());
        let psi_of_q = &q.scale(d) + &Polynomial::constant(e.clone());
        let nu_poly = Polynomial::monomial(1);
        let disc = int(4) * c4 * c6 - c5 * c5;
        let k0 = &(&phi_of_q + &(&nu_poly * &psi_of_q).scale(&(rat(1, 2) * c4)))
            - &(&nu_poly * &d_shift(1, 0)).scale(&(disc / int(4)));
        let k1 = &Polynomial::constant(b.clone())
            + &(&nu_poly * &d_shift(1, 0)).scale(&(rat(3, 2) * c4));
        let k2 = RatFn::constant(a.clone());

        let pt_rf = Self::build_point_quadratic(pd, lattice);

        let phi_at_pt = k2
            .mul(&pt_rf)
            .mul(&pt_rf)
            .add(&RatFn::from_poly(k1).mul(&pt_rf))
            .add(&RatFn::from_poly(k0));
        let c_rf = RatFn::constant(-Scalar::one())
            .mul(&nu.add(&one))
            .mul(&RatFn::from_poly(d_shift(1, -1)))
            .div(&RatFn::from_poly(d_shift(2, -1)))
            .div(&RatFn::from_poly(d_shift(2, 1)))
            .mul(&phi_at_pt);

        (b_rf, c_rf)
    }

    /// `gamma_{m nu + k}` in the variable `t = r^nu`:
    /// `(r^k t^{2m} - r^{-k}) / ((r - 1/r) t^m)`.
    fn gamma_shift(r: &Scalar, m: usize, k: i64) -> RatFn {
        let mut num = vec![Scalar::zero(); 2 * m + 1];
        num[2 * m] = pow_i(r, k);
        num[0] = -pow_i(r, -k);
        let mut den = vec![Scalar::zero(); m + 1];
        den[m] = r - r.recip();
        RatFn::new(Polynomial::from_coeffs(num), Polynomial::from_coeffs(den))
    }

    /// `alpha_{m nu + k}` in the variable `t = r^nu`:
    /// `(r^k t^{2m} + r^{-k}) / (2 t^m)`.
    fn alpha_shift(r: &Scalar, m: usize, k: i64) -> RatFn {
        let mut num = vec![Scalar::zero(); 2 * m + 1];
        num[2 * m] = pow_i(r, k);
        num[0] = pow_i(r, -k);
        let mut den = vec![Scalar::zero(); m + 1];
        den[m] = int(2);
        RatFn::new(Polynomial::from_coeffs(num), Polynomial::from_coeffs(den))
    }

    fn d_shift_q_linear(pd: &PearsonData, r: &Scalar, m: usize, k: i64) -> RatFn {
        RatFn::constant(pd.a.clone())
            .mul(&Self::gamma_shift(r, m, k))
            .add(&RatFn::constant(pd.d.clone()).mul(&Self::alpha_shift(r, m, k)))
    }

    fn e_shift_q_linear(pd: &PearsonData, r: &Scalar, c3: &Scalar, m: usize, k: i64) -> RatFn {
        RatFn::constant(int(2) * &pd.a * c3 + &pd.b)
            .mul(&Self::gamma_shift(r, m, k))
            .add(&RatFn::constant(&pd.d * c3 + &pd.e).mul(&Self::alpha_shift(r, m, k)))
    }

    fn build_point_q_linear(pd: &PearsonData, lattice: &Lattice) -> RatFn {
        let Lattice::QLinear { r, c3, .. } = lattice else {
            unreachable!()
        };
        let rho = Self::e_shift_q_linear(pd, r, c3, 1, 0).div(&Self::d_shift_q_linear(pd, r, 2, 0));
        RatFn::constant(c3.clone()).sub(&rho)
    }

    /// Theorem-1 shapes, in the formal variable `t = r^nu`:
    /// `B_nu = c3 + gamma_nu e_{nu-1}/d_{2nu-2} - gamma_{nu+1} e_nu/d_{2nu}`,
    /// `C_{nu+1} = -gamma_{nu+1} d_{nu-1} / (d_{2nu-1} d_{2nu+1})
    ///            * phi^[nu](c3 - e_nu/d_{2nu})`.
    fn build_q_linear(pd: &PearsonData, lattice: &Lattice) -> (RatFn, RatFn) {
        let Lattice::QLinear { r, c1, c2, c3 } = lattice else {
            unreachable!()
        };
        let (a, d, e) = (&pd.a, &pd.d, &pd.e);

        let gamma = |m: usize, k: i64| Self::gamma_shift(r, m, k);
        let d_shift = |m: usize, k: i64| Self::d_shift_q_linear(pd, r, m, k);

        let rho = Self::e_shift_q_linear(pd, r, c3, 1, 0).div(&d_shift(2, 0));
        let rho_prev = Self::e_shift_q_linear(pd, r, c3, 1, -1).div(&d_shift(2, -2));
        let b_rf = RatFn::constant(c3.clone())
            .add(&gamma(1, 0).mul(&rho_prev))
            .sub(&gamma(1, 1).mul(&rho));

        let pt_rf = RatFn::constant(c3.clone()).sub(&rho);

        let (al, _) = lattice.alpha_beta();
        let asq1 = &al * &al - Scalar::one();
        let lead = RatFn::constant(d * &asq1)
            .mul(&gamma(2, 0))
            .add(&RatFn::constant(a.clone()).mul(&Self::alpha_shift(r, 2, 0)));
        let mid = RatFn::constant(int(2) * a * c3 + &pd.b)
            .mul(&Self::alpha_shift(r, 1, 0))
            .add(&RatFn::constant((d * c3 + e) * &asq1).mul(&gamma(1, 0)));
        let tail = RatFn::constant(pd.phi().eval(c3) + int(2) * a * c1 * c2);

        let shifted = pt_rf.sub(&RatFn::constant(c3.clone()));
        let phi_at_pt = lead
            .mul(
                &shifted
                    .mul(&shifted)
                    .sub(&RatFn::constant(int(2) * c1 * c2)),
            )
            .add(&mid.mul(&shifted))
            .add(&tail);

        let c_rf = RatFn::constant(-Scalar::one())
            .mul(&gamma(1, 1))
            .mul(&d_shift(1, -1))
            .div(&d_shift(2, -1))
            .div(&d_shift(2, 1))
            .mul(&phi_at_pt);

        (b_rf, c_rf)
    }
}

/// One-off `(B_n, C_{n+1})`. For many indices, build a [`RecurrenceEngine`].
pub fn recurrence(pd: &PearsonData, lattice: &Lattice, n: usize) -> Result<(Scalar, Scalar)> {
    RecurrenceEngine::new(pd, lattice).pair(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn hermite() -> PearsonData {
        PearsonData::new(int(0), int(0), rat(-1, 2), int(1), int(0)).unwrap()
    }

    fn constant_lattice() -> Lattice {
        Lattice::quadratic(int(0), int(0), int(1)).unwrap()
    }

    fn pk_lattice() -> Lattice {
        Lattice::quadratic(int(0), int(2), int(1)).unwrap()
    }

    /// Section-4 data at N = 5, gamma = 1/2.
    fn pk_pd() -> PearsonData {
        PearsonData::new(rat(-1, 4), rat(9, 8), rat(-9, 4), int(1), rat(-9, 4)).unwrap()
    }

    #[test]
    fn dn_en_examples() {
        let l = constant_lattice();
        let pd = hermite();
        assert_eq!(dn(&pd, &l, 7), int(1));
        assert_eq!(en(&pd, &l, 7), int(0));

        assert_eq!(dn(&pk_pd(), &pk_lattice(), 2), rat(1, 2));

        let lq = Lattice::q_linear(int(2), rat(1, 2), rat(1, 2), int(0)).unwrap();
        let pd = PearsonData::new(int(1), int(0), int(0), int(1), int(0)).unwrap();
        assert_eq!(dn(&pd, &lq, 1), rat(9, 4)); // gamma_1 + alpha_1 = 1 + 5/4
    }

    #[test]
    fn phi_0_equals_phi() {
        let cases = [
            (pk_pd(), pk_lattice()),
            (hermite(), constant_lattice()),
            (
                PearsonData::new(rat(1, 7), rat(1, 3), int(5), int(1), rat(-2, 3)).unwrap(),
                Lattice::q_linear(int(2), rat(1, 2), rat(1, 2), int(0)).unwrap(),
            ),
            (
                PearsonData::new(rat(1, 7), rat(1, 3), int(5), int(1), rat(-2, 3)).unwrap(),
                Lattice::quadratic(int(1), rat(1, 2), int(3)).unwrap(),
            ),
        ];
        for (pd, l) in cases {
            assert_eq!(phi_n(&pd, &l, 0), pd.phi());
        }
    }

    #[test]
    fn phi_n_constant_lattice_is_phi_for_hermite() {
        let l = constant_lattice();
        let pd = hermite();
        for n in 0..12 {
            assert_eq!(phi_n(&pd, &l, n), Polynomial::constant(rat(-1, 2)));
        }
    }

    #[test]
    fn phi_n_quadratic_example() {
        // x(s) = s^2, pd = (0, 1, 0, 1, 0), n = 0: phi^[0] = z
        let l = Lattice::quadratic(int(1), int(0), int(0)).unwrap();
        let pd = PearsonData::new(int(0), int(1), int(0), int(1), int(0)).unwrap();
        assert_eq!(phi_n(&pd, &l, 0), Polynomial::monomial(1));
    }

    #[test]
    fn hermite_recurrence() {
        let l = constant_lattice();
        let pd = hermite();
        let engine = RecurrenceEngine::new(&pd, &l);
        for n in 0..=20 {
            let (b, c) = engine.pair(n).unwrap();
            assert_eq!(b, int(0));
            assert_eq!(c, rat(n as i64 + 1, 2));
        }
        let report = regularity(&pd, &l, 20);
        assert!(report.is_regular());
        assert_eq!(report.regular_to(), Some(20));
    }

    #[test]
    fn pk_recurrence_reaches_through_removable_singularities() {
        // e_2/d_4 is literally 0/0 here, the reduced forms stay exact
        let engine = RecurrenceEngine::new(&pk_pd(), &pk_lattice());
        let expect_c = [rat(21, 16), rat(5, 2), rat(9, 16), rat(5, 2), rat(21, 16)];
        for (n, expected) in expect_c.into_iter().enumerate() {
            let (b, c) = engine.pair(n).unwrap();
            assert_eq!(b, rat(9, 4), "B_{n}");
            assert_eq!(c, expected, "C_{}", n + 1);
        }
    }

    #[test]
    fn pk_regularity_first_failure() {
        // d_n = 1 - n/4 vanishes at n = 4; that is the first failing index.
        let report = regularity(&pk_pd(), &pk_lattice(), 10);
        assert_eq!(
            report.first_failure,
            Some(RegularityFailure {
                n: 4,
                reason: FailureReason::DnZero
            })
        );
        assert_eq!(report.regular_to(), Some(3));
    }

    #[test]
    fn d_zero_fails_immediately() {
        let l = pk_lattice();
        let pd = PearsonData::new(int(0), int(1), int(1), int(0), int(1)).unwrap();
        let report = regularity(&pd, &l, 5);
        assert_eq!(
            report.first_failure,
            Some(RegularityFailure {
                n: 0,
                reason: FailureReason::DnZero
            })
        );
        assert_eq!(report.regular_to(), None);
        assert!(matches!(
            recurrence(&pd, &l, 0),
            Err(Error::DivisionByZeroInFormula { n: 0 })
        ));
    }

    #[test]
    fn b0_is_minus_e_over_d() {
        // with d = 1 on a quadratic lattice, B_0 = -e
        let l = Lattice::quadratic(int(2), int(1), rat(-1, 3)).unwrap();
        let pd = PearsonData::new(rat(1, 3), int(2), int(1), int(1), rat(7, 5)).unwrap();
        assert_eq!(recurrence(&pd, &l, 0).unwrap().0, rat(-7, 5));

        // and B_0 = c3 - gamma_1 e_0/d_0 on a q-lattice
        let l = Lattice::q_linear(int(2), int(1), rat(1, 3), rat(5, 2)).unwrap();
        let pd = PearsonData::new(rat(1, 3), int(2), int(1), int(1), rat(7, 5)).unwrap();
        let expect = rat(5, 2) - en(&pd, &l, 0) / dn(&pd, &l, 0);
        assert_eq!(recurrence(&pd, &l, 0).unwrap().0, expect);
    }

    #[test]
    fn c1_cancellation_when_d_minus_one_vanishes() {
        // a = d makes d_{-1} = 0; the cancelled form gives
        // C_1 = -phi^[0](-e_0/d_0)/d_1, independently verified via moments.
        let l = Lattice::quadratic(int(0), int(1), int(0)).unwrap();
        let pd = PearsonData::new(int(1), rat(1, 3), int(-2), int(1), rat(1, 5)).unwrap();
        assert_eq!(recurrence(&pd, &l, 0).unwrap().1, rat(76, 75));
    }

    #[test]
    fn frozen_moment_route_values_quadratic() {
        // independently computed via Pearson moment recursion + Gram-Schmidt
        // on x(s) = s^2 + s/2 + 3 with pd = (1/7, 1/3, 5, 1, -2/3)
        let l = Lattice::quadratic(int(1), rat(1, 2), int(3)).unwrap();
        let pd = PearsonData::new(rat(1, 7), rat(1, 3), int(5), int(1), rat(-2, 3)).unwrap();
        let engine = RecurrenceEngine::new(&pd, &l);
        let expect_b = [
            rat(2, 3),
            rat(-25, 27),
            rat(-1354, 297),
            rat(-4115, 429),
            rat(-1850, 117),
        ];
        let expect_c = [
            rat(-37, 8),
            rat(-55013, 58320),
            rat(71351, 4840),
            rat(942323, 18928),
            rat(4108649, 36288),
        ];
        for n in 0..5 {
            let (b, c) = engine.pair(n).unwrap();
            assert_eq!(b, expect_b[n]);
            assert_eq!(c, expect_c[n]);
        }
    }

    #[test]
    fn frozen_moment_route_values_q_linear() {
        // same oracle on the symmetric q-lattice with r = 2
        let l = Lattice::q_linear(int(2), rat(1, 2), rat(1, 2), int(0)).unwrap();
        let pd = PearsonData::new(rat(1, 7), rat(1, 3), int(5), int(1), rat(-2, 3)).unwrap();
        let engine = RecurrenceEngine::new(&pd, &l);
        let expect_b = [
            rat(2, 3),
            rat(-68, 417),
            rat(-54376, 297321),
            rat(-557792, 10431903),
        ];
        let expect_c = [
            rat(-148, 39),
            rat(-557558455, 348125778),
            rat(-1460093012989, 12033149133852),
            rat(55652555555305715, 332774844047114508),
        ];
        for n in 0..4 {
            let (b, c) = engine.pair(n).unwrap();
            assert_eq!(b, expect_b[n]);
            assert_eq!(c, expect_c[n]);
        }
    }

    #[test]
    fn scaling_invariance() {
        // (phi, psi) -> (lambda phi, lambda psi) leaves B_n, C_{n+1} unchanged
        let l = Lattice::quadratic(int(1), rat(1, 2), int(3)).unwrap();
        let pd = PearsonData::new(rat(1, 7), rat(1, 3), int(5), int(1), rat(-2, 3)).unwrap();
        let lam = rat(-7, 3);
        let scaled = PearsonData::new(
            &pd.a * &lam,
            &pd.b * &lam,
            &pd.c * &lam,
            &pd.d * &lam,
            &pd.e * &lam,
        )
        .unwrap();
        let e1 = RecurrenceEngine::new(&pd, &l);
        let e2 = RecurrenceEngine::new(&scaled, &l);
        for n in 0..=10 {
            assert_eq!(e1.pair(n).unwrap(), e2.pair(n).unwrap());
        }
    }
}
