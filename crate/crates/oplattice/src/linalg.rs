//! Exact rectangular matrices and nullspace computation.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Row-major rectangular matrix of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

/// Clears denominators row-wise, giving an integer matrix with the same
/// row space, and divides out each row's content.
fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let mut lcm = BigInt::one();
            for v in m.row(i) {
                lcm = lcm.lcm(v.denom());
            }
            let mut row: Vec<BigInt> = m
                .row(i)
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect();
            reduce_row(&mut row);
            row
        })
        .collect()
}

fn reduce_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v /= &g;
    }
}

/// Fraction-free forward elimination. Returns the echelon rows and the
/// pivot column of each.
fn echelon(mut rows: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let g = rows[r][c].gcd(&rows[i][c]);
            let (pm, cm) = (&rows[i][c] / &g, &rows[r][c] / &g);
            let pivot_row = rows[r].clone();
            for (x, pv) in rows[i].iter_mut().zip(&pivot_row) {
                *x = &*x * &cm - pv * &pm;
            }
            reduce_row(&mut rows[i]);
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Rank over the rationals.
pub fn rank(m: &Matrix) -> usize {
    echelon(integer_rows(m), m.cols()).1.len()
}

/// Basis of the exact right nullspace, via fraction-free elimination.
///
/// Each basis vector is scaled so its first nonzero entry is 1, making the
/// output deterministic. The list is empty iff the nullspace is trivial;
/// its length is always `cols - rank`.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Scalar>> {
    let cols = m.cols();
    if cols == 0 {
        return Vec::new();
    }
    let (rows, pivots) = echelon(integer_rows(m), cols);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };

    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        // Back-substitute pivot rows in reverse.
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Scalar::zero();
            for j in pc + 1..cols {
                if !rows[ri][j].is_zero() && !v[j].is_zero() {
                    acc += Scalar::from_integer(rows[ri][j].clone()) * &v[j];
                }
            }
            v[pc] = -acc / Scalar::from_integer(rows[ri][pc].clone());
        }
        // First nonzero entry scaled to one.
        let lead = v
            .iter()
            .find(|x| !x.is_zero())
            .expect("free column gives nonzero vector")
            .clone();
        for x in v.iter_mut() {
            *x /= &lead;
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn identity_has_trivial_nullspace() {
        assert!(nullspace(&Matrix::identity(3)).is_empty());
        assert_eq!(rank(&Matrix::identity(3)), 3);
    }

    #[test]
    fn zero_matrix_nullspace_is_full() {
        let ns = nullspace(&Matrix::zeros(2, 2));
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], vec![int(1), int(0)]);
        assert_eq!(ns[1], vec![int(0), int(1)]);
    }

    #[test]
    fn rank_one_example() {
        let m = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(2), int(2)]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        // span{(1, -1)} normalized to leading one
        assert_eq!(ns[0], vec![int(1), int(-1)]);
    }

    #[test]
    fn rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3), int(1)],
            vec![rat(3, 2), int(1), int(3)],
        ]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for i in 0..m.rows() {
                let dot: Scalar = m.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot == int(0));
            }
        }
        assert_eq!(ns.len(), m.cols() - rank(&m));
    }
}
