//! Integer lattice algorithms: Smith normal form, saturated kernels and
//! integral solving. All routines work on `Matrix<BigInt>`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::Matrix;

pub type IntMatrix = Matrix<BigInt>;

/// Result of a Smith normal form computation: `u * a * v == s`, with `u`, `v`
/// unimodular and `s` diagonal with `d_1 | d_2 | ... | d_rank`, all positive.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub s: IntMatrix,
    pub rank: usize,
}

impl Snf {
    /// Nonzero invariant factors `d_1, ..., d_rank`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

fn row_op(m: &mut IntMatrix, target: usize, src: usize, factor: &BigInt) {
    // row_target -= factor * row_src
    for j in 0..m.cols() {
        let v = m[(src, j)].clone();
        if !v.is_zero() {
            m[(target, j)] = m[(target, j)].clone() - factor * v;
        }
    }
}

fn col_op(m: &mut IntMatrix, target: usize, src: usize, factor: &BigInt) {
    for i in 0..m.rows() {
        let v = m[(i, src)].clone();
        if !v.is_zero() {
            m[(i, target)] = m[(i, target)].clone() - factor * v;
        }
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut rank = 0;

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &s[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                row_op(&mut s, i, t, &q);
                row_op(&mut u, i, t, &q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                col_op(&mut s, j, t, &q);
                col_op(&mut v, j, t, &q);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // bring the smallest remaining entry in row/column t to the pivot
                let mut best = (t, t);
                for i in t..rows {
                    let x = &s[(i, t)];
                    if !x.is_zero() && x.abs() < s[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    let x = &s[(t, j)];
                    if !x.is_zero() && x.abs() < s[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    s.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else if best.1 != t {
                    s.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // row and column are clear; enforce divisibility of the trailing block
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let minus_one = BigInt::from(-1);
                    row_op(&mut s, t, i, &minus_one);
                    row_op(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
        rank += 1;
    }
    Snf { u, v, s, rank }
}

/// Saturated basis (as column vectors) of `{x in Z^n : a x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (snf.rank..a.cols()).map(|j| snf.v.column(j)).collect()
}

/// Solves `a x = b` over the integers, returning one solution if any exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let ub = snf.u.apply(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, val) in ub.iter().enumerate() {
        if i < snf.rank {
            let d = &snf.s[(i, i)];
            if !val.is_multiple_of(d) {
                return None;
            }
            y[i] = val / d;
        } else if !val.is_zero() {
            return None;
        }
    }
    Some(snf.v.apply(&y))
}

/// Fraction-free determinant (Bareiss).
pub fn det_int(a: &IntMatrix) -> BigInt {
    assert!(a.is_square());
    let n = a.rows();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut m = a.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            m.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[(i, j)].clone() * m[(k, k)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                m[(i, j)] = num / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    let d = m[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Inverse of a unimodular integer matrix, or `None` when `|det| != 1`.
pub fn unimodular_inverse(a: &IntMatrix) -> Option<IntMatrix> {
    let snf = smith_normal_form(a);
    if snf.rank != a.rows() || !snf.invariant_factors().iter().all(|d| *d == BigInt::from(1)) {
        return None;
    }
    // u a v = I  =>  a^{-1} = v u
    Some(snf.v.mul(&snf.u))
}

/// Whether the columns of `basis` span the same lattice as the columns of `other`.
pub fn same_lattice(basis: &[Vec<BigInt>], other: &[Vec<BigInt>]) -> bool {
    if basis.is_empty() || other.is_empty() {
        return basis.len() == other.len();
    }
    let a = IntMatrix::from_columns(basis);
    let b = IntMatrix::from_columns(other);
    other.iter().all(|v| solve_integer(&a, v).is_some())
        && basis.iter().all(|v| solve_integer(&b, v).is_some())
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}
