//! Classical orthogonal polynomials on q-linear and quadratic lattices,
//! in exact rational arithmetic.
//!
//! The crate works both directions of the classical correspondence:
//!
//! * **forward** ([`pearson`]): from Pearson data `(phi, psi)` on a lattice
//!   to regularity verdicts and the three-term recurrence coefficients
//!   `B_n`, `C_{n+1}`;
//! * **inverse** ([`detector`]): from recurrence coefficients alone, decide
//!   whether the sequence is classical on a given lattice and recover
//!   `(phi, psi)` when it is.
//!
//! Everything is computed over arbitrary-precision rationals — no floating
//! point, no tolerances; every reported equality is exact. The
//! [`para_krawtchouk`] module carries a complete worked example: a finite
//! family on a bi-lattice, its weights and orthogonality, and its
//! reclassification as a classical family on `x(s) = 2s + 1`.
//!
//! A narrative guide with runnable examples lives in the `book/` directory
//! of the repository; its code blocks are compiled as doc-tests of the
//! [`guide`] module.

pub mod detector;
pub mod error;
pub mod guide;
pub mod lattice;
pub mod linalg;
pub mod para_krawtchouk;
pub mod pearson;
pub mod poly;
pub mod recurrence;
pub mod scalar;

mod ratfn;

pub use detector::{
    classify, invert_quadratic, pearson_solve_from_moments, CoefficientKind, Verdict, Witness,
};
pub use error::{Error, Result};
pub use lattice::Lattice;
pub use linalg::{nullspace, Matrix};
pub use para_krawtchouk::{
    bilattice_y, pk_casestudy, pk_casestudy_on, pk_functional, pk_recurrence, pk_table, pk_weight,
    pochhammer, CaseStudyReport, ParaKrawtchoukParams,
};
pub use pearson::{
    dn, en, phi_n, recurrence, regularity, FailureReason, PearsonData, RecurrenceEngine,
    RegularityReport,
};
pub use poly::{interpolate, Polynomial};
pub use recurrence::{
    generate, gram_check, moments_from_recurrence, pearson_weak_check, DiscreteFunctional,
    MonicOps, RecurrenceTable,
};
pub use scalar::Scalar;
