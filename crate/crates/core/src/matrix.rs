//! Dense matrices over an arbitrary [`Ring`].

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::ring::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}, ", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Clone> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_columns(cols: &[Vec<R>]) -> Self {
        let n = cols.first().map_or(0, |c| c.len());
        Matrix::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Submatrix with the given row and column index lists.
    pub fn minor_matrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(entries: &[R]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { R::zero() })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + other[(i, j)].clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - other[(i, j)].clone())
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(R::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Determinant by cofactor expansion; intended for the small sizes used here.
    pub fn det(&self) -> R {
        assert!(self.is_square());
        let n = self.rows;
        match n {
            0 => R::one(),
            1 => self[(0, 0)].clone(),
            2 => {
                self[(0, 0)].clone() * self[(1, 1)].clone()
                    - self[(0, 1)].clone() * self[(1, 0)].clone()
            }
            _ => {
                let mut acc = R::zero();
                for j in 0..n {
                    let a = &self[(0, j)];
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.clone() * self.cofactor_det(0, j);
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    fn cofactor_det(&self, row: usize, col: usize) -> R {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        self.minor_matrix(&rows, &cols).det()
    }

    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        if n == 1 {
            return Self::identity(1);
        }
        Matrix::from_fn(n, n, |i, j| {
            let c = self.cofactor_det(j, i);
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    /// Characteristic polynomial `det(xI - M)` as coefficients, constant term first.
    /// Expands the determinant over `R[x]`, so no division is needed.
    pub fn char_poly(&self) -> Vec<R> {
        assert!(self.is_square());
        let n = self.rows;
        let poly_entries: Vec<Vec<Vec<R>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = -self[(i, j)].clone();
                        if i == j {
                            vec![c, R::one()]
                        } else {
                            vec![c]
                        }
                    })
                    .collect()
            })
            .collect();
        poly_det(&poly_entries, &(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())
    }
}

fn poly_mul<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_add<R: Ring>(a: &[R], b: &[R], negate_b: bool) -> Vec<R> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(R::zero);
            let y = b.get(i).cloned().unwrap_or_else(R::zero);
            if negate_b {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

fn poly_det<R: Ring>(m: &[Vec<Vec<R>>], rows: &[usize], cols: &[usize]) -> Vec<R> {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc = vec![R::zero()];
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = poly_det(m, &rows[1..], &rest);
        let term = poly_mul(&m[rows[0]][c], &sub);
        acc = poly_add(&acc, &term, k % 2 == 1);
    }
    acc
}

impl<F: Field> Matrix<F> {
    /// Row-reduces a copy and returns the rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m[(rank, col)].inv().expect("nonzero pivot");
            for i in rank + 1..m.rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let f = m[(i, col)].clone() * inv.clone();
                for j in col..m.cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(rank, j)].clone();
                    m[(i, j)] = v;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let pivot_inv = a[(col, col)].inv()?;
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() * pivot_inv.clone();
                inv[(col, j)] = inv[(col, j)].clone() * pivot_inv.clone();
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(col, j)].clone();
                    inv[(i, j)] = inv[(i, j)].clone() - f.clone() * inv[(col, j)].clone();
                }
            }
        }
        Some(inv)
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let inv = self.inverse()?;
        Some(inv.apply(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use num_bigint::BigInt;

    fn im(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_and_adjugate() {
        let m = im(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det(), BigInt::from(18));
        let prod = m.mul(&m.adjugate());
        assert_eq!(prod, Matrix::identity(3).scale(&BigInt::from(18)));
    }

    #[test]
    fn char_poly_of_companion() {
        // companion of x^3 - 2x^2 + 5x - 7
        let m = im(&[&[0, 0, 7], &[1, 0, -5], &[0, 1, 2]]);
        let cp = m.char_poly();
        assert_eq!(cp, vec![-7, 5, -2, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn rational_inverse_and_rank() {
        let m = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 1)], vec![rat(3, 1), rat(4, 1)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.rank(), 2);
        let singular = Matrix::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]]);
        assert_eq!(singular.rank(), 1);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn pow_zero_is_identity() {
        let m = im(&[&[1, 1], &[0, 1]]);
        assert!(m.pow(0).is_identity());
        assert_eq!(m.pow(5), im(&[&[1, 5], &[0, 1]]));
    }
}
