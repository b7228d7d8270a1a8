//! Three-term recurrence machinery: monic polynomial generation, moments,
//! Gram checks, and the weak form of the Pearson equation.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::Matrix;
use crate::pearson::PearsonData;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use num_traits::{One, Zero};

/// Recurrence coefficients `(B_n, C_{n+1})` for `n = 0..len`, i.e. `B_0..`
/// and `C_1..`. Quasi-definiteness (`C_k != 0`) is enforced on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceTable {
    b: Vec<Scalar>,
    c: Vec<Scalar>,
}

impl RecurrenceTable {
    /// `b[n] = B_n`, `c[n] = C_{n+1}`; the lists must have equal length and
    /// every `C_k` must be nonzero.
    pub fn new(b: Vec<Scalar>, c: Vec<Scalar>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidTable("B and C must have the same length"));
        }
        if c.iter().any(Zero::is_zero) {
            return Err(Error::InvalidTable("C_k = 0 violates quasi-definiteness"));
        }
        Ok(RecurrenceTable { b, c })
    }

    /// Number of stored pairs; `B_n` exists for `n < len` and `C_k` for
    /// `1 <= k <= len`.
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// `B_n`.
    pub fn b(&self, n: usize) -> &Scalar {
        &self.b[n]
    }

    /// `C_k`, 1-indexed.
    pub fn c(&self, k: usize) -> &Scalar {
        &self.c[k - 1]
    }

    pub fn b_slice(&self) -> &[Scalar] {
        &self.b
    }

    /// `[C_1, C_2, ...]`.
    pub fn c_slice(&self) -> &[Scalar] {
        &self.c
    }
}

/// Monic orthogonal polynomial sequence `P_0..P_m`, `deg P_n = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicOps {
    polys: Vec<Polynomial>,
}

impl MonicOps {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `P_n`.
    pub fn poly(&self, n: usize) -> &Polynomial {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }
}

/// `P_0..P_upto` from `P_{n+1} = (z - B_n) P_n - C_n P_{n-1}`,
/// `P_{-1} = 0`, `P_0 = 1`.
pub fn generate(table: &RecurrenceTable, upto: usize) -> Result<MonicOps> {
    if upto > table.len() {
        return Err(Error::TableTooShort {
            len: table.len(),
            needed: upto,
        });
    }
    let mut polys = Vec::with_capacity(upto + 1);
    polys.push(Polynomial::one());
    for n in 0..upto {
        let z_minus_b = Polynomial::from_coeffs(vec![-table.b(n).clone(), Scalar::one()]);
        let mut next = &z_minus_b * &polys[n];
        if n >= 1 {
            next = &next - &polys[n - 1].scale(table.c(n));
        }
        polys.push(next);
    }
    Ok(MonicOps { polys })
}

/// Moments `m_0..m_K` (with `m_0 = 1`) of the unique functional
/// orthogonalizing the table, via powers of the truncated monic Jacobi
/// matrix: `m_k = (J^k)_{00}`.
///
/// `K` must not exceed `2 * table.len()`: `m_k` depends on `B_j` only for
/// `2j + 1 <= k` and on `C_j` only for `2j <= k`, so the table determines
/// exactly that range (absent trailing entries of the truncation are padded
/// with zeros, which that dependence structure never reads).
pub fn moments_from_recurrence(table: &RecurrenceTable, k_max: usize) -> Result<Vec<Scalar>> {
    if k_max > 2 * table.len() {
        return Err(Error::TableTooShort {
            len: table.len(),
            needed: k_max.div_ceil(2),
        });
    }
    let size = k_max / 2 + 2;
    let b_at = |i: usize| {
        if i < table.len() {
            table.b(i).clone()
        } else {
            Scalar::zero()
        }
    };
    let c_at = |k: usize| {
        if k <= table.len() {
            table.c(k).clone()
        } else {
            Scalar::zero()
        }
    };

    // Row vector v = e_0 J^k, updated in place; v[0] is m_k.
    let mut moments = Vec::with_capacity(k_max + 1);
    moments.push(Scalar::one());
    let mut v = vec![Scalar::zero(); size];
    v[0] = Scalar::one();
    for _ in 0..k_max {
        let mut w = vec![Scalar::zero(); size];
        for (j, w_j) in w.iter_mut().enumerate() {
            // column j of J: superdiagonal 1 at (j-1, j), diagonal B_j,
            // subdiagonal C_{j+1} at (j+1, j)
            let mut acc = Scalar::zero();
            if j > 0 {
                acc += &v[j - 1];
            }
            acc += &v[j] * b_at(j);
            if j + 1 < size {
                acc += &v[j + 1] * c_at(j + 1);
            }
            *w_j = acc;
        }
        v = w;
        moments.push(v[0].clone());
    }
    Ok(moments)
}

/// Finite discrete functional `<u, p> = sum_s weights[s] * p(nodes[s])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteFunctional {
    nodes: Vec<Scalar>,
    weights: Vec<Scalar>,
}

impl DiscreteFunctional {
    /// Nodes must be pairwise distinct and match the weights in number.
    pub fn new(nodes: Vec<Scalar>, weights: Vec<Scalar>) -> Result<Self> {
        if nodes.len() != weights.len() {
            return Err(Error::InvalidTable(
                "nodes and weights must have the same length",
            ));
        }
        for (i, x) in nodes.iter().enumerate() {
            if nodes[..i].contains(x) {
                return Err(Error::InvalidTable("functional nodes must be distinct"));
            }
        }
        Ok(DiscreteFunctional { nodes, weights })
    }

    pub fn nodes(&self) -> &[Scalar] {
        &self.nodes
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    /// `<u, p>`.
    pub fn pair(&self, p: &Polynomial) -> Scalar {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * p.eval(x))
            .sum()
    }

    pub fn total_mass(&self) -> Scalar {
        self.weights.iter().sum()
    }
}

/// Exact Gram matrix `G_{nm} = <u, P_n P_m>`.
pub fn gram_check(u: &DiscreteFunctional, ops: &MonicOps) -> Matrix {
    let n = ops.len();
    let values: Vec<Vec<Scalar>> = ops
        .polys()
        .iter()
        .map(|p| u.nodes().iter().map(|x| p.eval(x)).collect())
        .collect();
    Matrix::from_fn(n, n, |i, j| {
        values[i]
            .iter()
            .zip(&values[j])
            .zip(u.weights())
            .map(|((a, b), w)| w * a * b)
            .sum()
    })
}

/// `<u, p>` from a moment list; needs `deg p < moments.len()`.
pub(crate) fn moment_pair(moments: &[Scalar], p: &Polynomial) -> Result<Scalar> {
    let needed = p.degree().map_or(0, |d| d + 1);
    if moments.len() < needed {
        return Err(Error::InsufficientMoments {
            needed,
            got: moments.len(),
        });
    }
    Ok(p.coeffs().iter().zip(moments).map(|(c, m)| c * m).sum())
}

/// Coefficient rows of `<u, phi D(z^k) + psi S(z^k)> = 0`, `k = 0..=k_max`,
/// in the unknowns `(a, b, c, d, e)`: the weak form of `D(phi u) = S(psi u)`
/// under the dualities `<Du, p> = -<u, Dp>` and `<Su, p> = <u, Sp>`.
pub(crate) fn weak_rows(
    moments: &[Scalar],
    lattice: &Lattice,
    k_max: usize,
) -> Result<Vec<Vec<Scalar>>> {
    let z = Polynomial::monomial(1);
    lattice
        .monomial_images(k_max)
        .iter()
        .map(|(dk, sk)| {
            Ok(vec![
                moment_pair(moments, &(&(&z * &z) * dk))?,
                moment_pair(moments, &(&z * dk))?,
                moment_pair(moments, dk)?,
                moment_pair(moments, &(&z * sk))?,
                moment_pair(moments, sk)?,
            ])
        })
        .collect()
}

/// True iff `<u, phi D(z^k) + psi S(z^k)> = 0` exactly for `k = 0..=k_max`,
/// where `u` is given by its moments. Needs moments through degree
/// `k_max + 1` (i.e. at least `k_max + 2` of them).
pub fn pearson_weak_check(
    moments: &[Scalar],
    pd: &PearsonData,
    lattice: &Lattice,
    k_max: usize,
) -> Result<bool> {
    if moments.len() < k_max + 2 {
        return Err(Error::InsufficientMoments {
            needed: k_max + 2,
            got: moments.len(),
        });
    }
    let coeffs = [&pd.a, &pd.b, &pd.c, &pd.d, &pd.e];
    for row in weak_rows(moments, lattice, k_max)? {
        let residual: Scalar = row.iter().zip(coeffs).map(|(r, c)| r * c).sum();
        if !residual.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn hermite_table(len: usize) -> RecurrenceTable {
        let b = vec![int(0); len];
        let c = (0..len).map(|n| rat(n as i64 + 1, 2)).collect();
        RecurrenceTable::new(b, c).unwrap()
    }

    #[test]
    fn table_invariants() {
        assert!(RecurrenceTable::new(vec![int(0)], vec![]).is_err());
        assert!(RecurrenceTable::new(vec![int(0)], vec![int(0)]).is_err());
    }

    #[test]
    fn generate_examples() {
        // B = 0, C = 1: P_2 = z^2 - 1
        let t = RecurrenceTable::new(vec![int(0), int(0)], vec![int(1), int(1)]).unwrap();
        let ops = generate(&t, 2).unwrap();
        assert_eq!(
            ops.poly(2),
            &Polynomial::from_coeffs(vec![int(-1), int(0), int(1)])
        );

        // B_0 = 1: P_1 = z - 1
        let t = RecurrenceTable::new(vec![int(1)], vec![int(1)]).unwrap();
        assert_eq!(
            generate(&t, 1).unwrap().poly(1),
            &Polynomial::from_coeffs(vec![int(-1), int(1)])
        );

        // Hermite: P_3 = z^3 - (3/2) z
        let ops = generate(&hermite_table(3), 3).unwrap();
        assert_eq!(
            ops.poly(3),
            &Polynomial::from_coeffs(vec![int(0), rat(-3, 2), int(0), int(1)])
        );

        assert!(matches!(
            generate(&hermite_table(2), 3),
            Err(Error::TableTooShort { .. })
        ));
    }

    #[test]
    fn moments_basics() {
        let t = RecurrenceTable::new(vec![rat(2, 3), rat(-1, 5)], vec![rat(7, 2), int(4)]).unwrap();
        let ms = moments_from_recurrence(&t, 2).unwrap();
        assert_eq!(ms[0], int(1));
        assert_eq!(ms[1], rat(2, 3)); // m_1 = B_0
        assert_eq!(ms[2], rat(2, 3) * rat(2, 3) + rat(7, 2)); // m_2 = B_0^2 + C_1
    }

    #[test]
    fn hermite_moments() {
        let ms = moments_from_recurrence(&hermite_table(4), 8).unwrap();
        // Gaussian moments (2k-1)!!/2^k
        assert_eq!(
            ms,
            vec![
                int(1),
                int(0),
                rat(1, 2),
                int(0),
                rat(3, 4),
                int(0),
                rat(15, 8),
                int(0),
                rat(105, 16)
            ]
        );
    }

    #[test]
    fn moments_truncation_stable() {
        // the padded truncation never reads beyond what the table pins down
        let t = hermite_table(5);
        let base = moments_from_recurrence(&t, 8).unwrap();
        for extra in [6usize, 7, 8] {
            let tt = hermite_table(extra);
            assert_eq!(moments_from_recurrence(&tt, 8).unwrap(), base);
        }
        assert!(matches!(
            moments_from_recurrence(&hermite_table(3), 8),
            Err(Error::TableTooShort { .. })
        ));
    }

    #[test]
    fn gram_of_generated_is_diagonal() {
        // 3-point Chebyshev-like functional: nodes -1, 0, 1 weights 1/4, 1/2, 1/4
        let u = DiscreteFunctional::new(
            vec![int(-1), int(0), int(1)],
            vec![rat(1, 4), rat(1, 2), rat(1, 4)],
        )
        .unwrap();
        // its monic table: B = 0; C_1 = m_2 = 1/2, C_2 = 1/4... derive via moments:
        // m = (1, 0, 1/2, 0, 1/2): P_1 = z, P_2 = z^2 - 1/2, <P_2,P_2> = 1/4 - ... keep it simple
        let t = RecurrenceTable::new(vec![int(0), int(0)], vec![rat(1, 2), rat(1, 2)]).unwrap();
        let ops = generate(&t, 2).unwrap();
        let g = gram_check(&u, &ops);
        assert_eq!(g.get(0, 0), &int(1)); // G_00 = sum of weights
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(g.get(i, j), &int(0), "G[{i}][{j}]");
                }
            }
        }
        // diagonal ratio G_nn/G_00 = C_1 ... C_n
        assert_eq!(g.get(1, 1), &rat(1, 2));
        assert_eq!(g.get(2, 2), &rat(1, 4));
    }

    #[test]
    fn weak_check_hermite() {
        let l = Lattice::quadratic(int(0), int(0), int(1)).unwrap();
        let pd = PearsonData::new(int(0), int(0), rat(-1, 2), int(1), int(0)).unwrap();
        let ms = moments_from_recurrence(&hermite_table(5), 8).unwrap();
        assert!(pearson_weak_check(&ms, &pd, &l, 6).unwrap());

        // perturbing e breaks it
        let bad = PearsonData::new(int(0), int(0), rat(-1, 2), int(1), int(1)).unwrap();
        assert!(!pearson_weak_check(&ms, &bad, &l, 6).unwrap());

        // k = 0 row is d m_1 + e m_0
        assert!(pearson_weak_check(&ms, &pd, &l, 0).unwrap());
        assert!(matches!(
            pearson_weak_check(&ms[..1], &pd, &l, 0),
            Err(Error::InsufficientMoments { .. })
        ));
    }
}
