//! Dense exact linear algebra over the rationals.
//!
//! Rank and determinants go through fraction-free (Bareiss) elimination on
//! denominator-cleared integer matrices, which controls coefficient growth;
//! solving, inversion and nullspaces use rational Gauss-Jordan, whose reduced
//! echelon form doubles as a canonical representative of a row space.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let c = rows.first().map_or(0, |row| row.len());
        QMat::from_rows_with_cols(rows, c)
    }

    /// Like `from_rows` but keeps the column count meaningful for zero rows.
    pub fn from_rows_with_cols(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let r = rows.len();
        assert!(rows.iter().all(|row| row.len() == cols), "ragged rows");
        QMat {
            rows: r,
            cols,
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
        QMat { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        QMat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                acc += &(&self[(i, k)] * &rhs[(k, j)]);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc += &(&self[(i, k)] * &v[k]);
                }
                acc
            })
            .collect()
    }

    /// Exact rank via fraction-free elimination on a denominator-cleared copy.
    pub fn rank(&self) -> usize {
        bareiss_int(&mut self.cleared_int()).rank
    }

    /// Exact determinant (square matrices).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return Scalar::one();
        }
        let (mut m, row_scale) = self.cleared_int_with_scale();
        let out = bareiss_int(&mut m);
        if out.rank < self.rows {
            return Scalar::zero();
        }
        let int_det = if out.sign < 0 { -out.last_pivot } else { out.last_pivot };
        Scalar::from_bigints(int_det, row_scale)
    }

    fn cleared_int(&self) -> Vec<Vec<BigInt>> {
        self.cleared_int_with_scale().0
    }

    /// Multiplies each row by the lcm of its denominators; returns the integer
    /// matrix and the product of the row factors.
    fn cleared_int_with_scale(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut l = BigInt::one();
            for j in 0..self.cols {
                l = l.lcm(self[(i, j)].denom());
            }
            scale *= &l;
            out.push(
                (0..self.cols)
                    .map(|j| {
                        let e = &self[(i, j)];
                        e.numer() * (&l / e.denom())
                    })
                    .collect(),
            );
        }
        (out, scale)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(i, j)] - &(&f * &self[(r, j)]);
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solves `self * x = rhs`. `None` if inconsistent; with free variables a
    /// particular solution (free variables zero) is returned.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, rhs.len(), "dimension mismatch");
        let sols = self.solve_multi(&QMat::from_fn(self.rows, 1, |i, _| rhs[i].clone()))?;
        Some(sols.col(0))
    }

    /// Solves `self * X = rhs` column by column via one shared elimination.
    pub fn solve_multi(&self, rhs: &QMat) -> Option<QMat> {
        assert_eq!(self.rows, rhs.rows, "dimension mismatch");
        let mut aug = QMat::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        });
        let pivots = aug.rref();
        // Inconsistent iff a pivot lands in the right block.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = QMat::zeros(self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(c, j)] = aug[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let inv = self.solve_multi(&QMat::identity(self.rows))?;
        // solve_multi returns a particular solution; it is the inverse only
        // when the matrix has full rank.
        if self.mul(&inv) == QMat::identity(self.rows) {
            Some(inv)
        } else {
            None
        }
    }

    /// Canonical basis of the right nullspace: the unique reduced echelon
    /// basis, rows ordered by leading coordinate.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[(r, f)];
            }
            basis.push(v);
        }
        canonical_row_basis(basis)
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduces a spanning list of row vectors to the unique reduced-echelon basis
/// of their span (zero rows dropped).
pub fn canonical_row_basis(rows: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return rows;
    }
    let mut m = QMat::from_rows(rows);
    let pivots = m.rref();
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

struct BareissOutcome {
    rank: usize,
    sign: i8,
    last_pivot: BigInt,
}

/// Fraction-free elimination with row pivoting and column skips. All interior
/// divisions are exact.
fn bareiss_int(m: &mut [Vec<BigInt>]) -> BareissOutcome {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut sign = 1i8;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    BareissOutcome {
        rank: r,
        sign,
        last_pivot: prev,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn mat(rows: &[&[i64]]) -> QMat {
        QMat::from_rows(rows.iter().map(|r| r.iter().map(|&v| s(v)).collect()).collect())
    }

    #[test]
    fn rank_and_det() {
        let m = mat(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.det(), s(1));

        let r = mat(&[&[1, 1], &[2, 2], &[3, 3]]);
        assert_eq!(r.rank(), 1);

        let z = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(z.det(), s(0));
    }

    #[test]
    fn det_with_fractions() {
        let m = QMat::from_rows(vec![
            vec![Scalar::from_frac(1, 2), s(1)],
            vec![s(1), Scalar::from_frac(1, 3)],
        ]);
        assert_eq!(m.det(), Scalar::from_frac(-5, 6));
    }

    #[test]
    fn solve_and_inverse() {
        let m = mat(&[&[2, 1], &[1, 3]]);
        let x = m.solve(&[s(3), s(4)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![s(3), s(4)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(2));

        let singular = mat(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[s(1), s(0)]).is_none());
        // Consistent underdetermined system still yields a solution.
        let x = singular.solve(&[s(1), s(2)]).unwrap();
        assert_eq!(singular.mul_vec(&x), vec![s(1), s(2)]);
    }

    #[test]
    fn nullspace_is_canonical() {
        let m = mat(&[&[1, 2, 3]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(m.mul_vec(v), vec![s(0)]);
        }
        // Reduced echelon: leading entries 1 with zeros in other pivot columns.
        assert_eq!(ns[0][0..2], [s(1), s(0)]);
        assert_eq!(ns[1][0..2], [s(0), s(1)]);
    }

    #[test]
    fn canonical_basis_is_presentation_independent() {
        let a = vec![vec![s(1), s(1), s(0)], vec![s(0), s(1), s(1)]];
        let b = vec![vec![s(2), s(3), s(1)], vec![s(1), s(2), s(1)]];
        assert_eq!(canonical_row_basis(a), canonical_row_basis(b));
    }
}
