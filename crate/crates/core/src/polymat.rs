//! Dense matrices with polynomial entries.
//!
//! Rank is taken over the field of rational functions and computed
//! symbolically by fraction-free elimination in the polynomial ring (every
//! interior division is exact), so no probabilistic evaluation is involved.

use crate::matrix::QMat;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMat {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged rows");
        PolyMat {
            rows: rows.len(),
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Copy without column `j`.
    pub fn drop_col(&self, j: usize) -> PolyMat {
        assert!(j < self.cols);
        let rows = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&c| c != j)
                    .map(|c| self[(i, c)].clone())
                    .collect()
            })
            .collect();
        PolyMat::from_rows(rows)
    }

    /// Rank over the field of rational functions.
    pub fn rank(&self) -> usize {
        self.clone().bareiss().0
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return Poly::one();
        }
        let (rank, sign, last_pivot) = self.clone().bareiss();
        if rank < self.rows {
            return Poly::zero();
        }
        if sign < 0 {
            -last_pivot
        } else {
            last_pivot
        }
    }

    /// Fraction-free elimination; returns (rank, permutation sign, last pivot).
    fn bareiss(mut self) -> (usize, i8, Poly) {
        let mut prev = Poly::one();
        let mut r = 0;
        let mut sign = 1i8;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            if p != r {
                sign = -sign;
            }
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let t = &(&self[(r, c)] * &self[(i, j)]) - &(&self[(i, c)] * &self[(r, j)]);
                    self[(i, j)] = t
                        .div_exact(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                self[(i, c)] = Poly::zero();
            }
            prev = self[(r, c)].clone();
            r += 1;
        }
        (r, sign, prev)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `A * self` for a scalar matrix `A`.
    pub fn scalar_mul_left(&self, a: &QMat) -> PolyMat {
        assert_eq!(a.ncols(), self.rows, "dimension mismatch");
        let rows = (0..a.nrows())
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let mut acc = Poly::zero();
                        for k in 0..self.rows {
                            acc += &self[(k, j)].scale(&a[(i, k)]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        PolyMat::from_rows(rows)
    }

    /// `self * B` for a scalar matrix `B`.
    pub fn scalar_mul_right(&self, b: &QMat) -> PolyMat {
        assert_eq!(self.cols, b.nrows(), "dimension mismatch");
        let rows = (0..self.rows)
            .map(|i| {
                (0..b.ncols())
                    .map(|j| {
                        let mut acc = Poly::zero();
                        for k in 0..self.cols {
                            acc += &self[(i, k)].scale(&b[(k, j)]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        PolyMat::from_rows(rows)
    }

    /// Applies the matrix to a vector of polynomials.
    pub fn mul_poly_vec(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Poly::zero();
                for k in 0..self.cols {
                    acc += &(&self[(i, k)] * &v[k]);
                }
                acc
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for PolyMat {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        &mut self.data[i * self.cols + j]
    }
}
