//! Dense row-major matrices over a [`Field`] with Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Fe::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])])
    }

    pub fn mul(&self, field: &Field, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = field.mul(a, rhs[(k, j)]);
                    out[(i, j)] = field.add(out[(i, j)], prod);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix, `v·M`.
    pub fn left_apply(&self, field: &Field, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                actual: v.len(),
            });
        }
        let mut out = vec![Fe::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(i)) {
                *o = field.add(*o, field.mul(a, m));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, field: &Field, c: Fe) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| field.mul(x, c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pivot) = (lead..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pivot);
            let inv = field.inv(self[(lead, col)]).expect("pivot is non-zero");
            for j in col..self.cols {
                self[(lead, j)] = field.mul(self[(lead, j)], inv);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self[(r, col)];
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let t = field.mul(factor, self[(lead, j)]);
                    self[(r, j)] = field.sub(self[(r, j)], t);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.clone().row_reduce(field).len()
    }

    /// A non-zero vector `x` with `M·x = 0`, or `None` when the columns are independent.
    /// The free variable is the first non-pivot column, set to 1.
    pub fn null_vector(&self, field: &Field) -> Option<Vec<Fe>> {
        let mut reduced = self.clone();
        let pivots = reduced.row_reduce(field);
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut x = vec![Fe::ZERO; self.cols];
        x[free] = Fe::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = field.neg(reduced[(r, free)]);
        }
        Some(x)
    }

    /// Solves the square system `M·x = b`; `None` if `M` is singular.
    pub fn solve(&self, field: &Field, b: &[Fe]) -> Option<Vec<Fe>> {
        assert_eq!(self.rows, self.cols, "solve expects a square system");
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, n + 1, |i, j| if j < n { self[(i, j)] } else { b[i] });
        let pivots = aug.row_reduce(field);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some((0..n).map(|i| aug[(i, n)]).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Fe;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Fe {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Fe {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(Fe::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m13(rows: &[&[u64]]) -> (std::sync::Arc<Field>, Matrix) {
        let f = Field::prime(13).unwrap();
        let rows = rows.iter().map(|r| f.elems(r).unwrap()).collect();
        (f, Matrix::from_rows(rows).unwrap())
    }

    #[test]
    fn null_vector_of_hankel_sample() {
        let (f, h) = m13(&[&[2, 9, 12, 10], &[9, 12, 10, 11], &[12, 10, 11, 11]]);
        let x = h.null_vector(&f).unwrap();
        let hx = h.mul(&f, &Matrix::from_rows(x.iter().map(|&v| vec![v]).collect()).unwrap()).unwrap();
        assert!(hx.is_zero());
        assert_eq!(h.rank(&f), 3);
    }

    #[test]
    fn solve_and_identity() {
        let (f, a) = m13(&[&[2, 1], &[1, 1]]);
        let b = f.elems(&[5, 3]).unwrap();
        let x = a.solve(&f, &b).unwrap();
        assert_eq!(x, f.elems(&[2, 1]).unwrap());
        assert_eq!(Matrix::identity(2).mul(&f, &a).unwrap(), a);
        let (_, singular) = m13(&[&[1, 2], &[2, 4]]);
        assert!(singular.solve(&f, &b).is_none());
        assert_eq!(singular.rank(&f), 1);
    }
}
