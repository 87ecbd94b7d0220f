//! Integral 3-forms on a rank-6 lattice and the third exterior power of a
//! linear map.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;

use crate::lattice::IntMatrix;
use crate::matrix::Matrix;
use crate::report::int_json;
use crate::ring::Ring;

/// Names of the dual basis `(e1*, f1*, e2*, f2*, e3*, f3*)`.
pub const COVECTORS: [&str; 6] = ["e1", "f1", "e2", "f2", "e3", "f3"];

pub const DIM: usize = 20;

/// The 20 increasing index triples in lexicographic order.
pub fn triples() -> &'static [[usize; 3]] {
    static T: OnceLock<Vec<[usize; 3]>> = OnceLock::new();
    T.get_or_init(|| {
        let mut v = Vec::with_capacity(DIM);
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    v.push([i, j, k]);
                }
            }
        }
        v
    })
}

pub fn triple_index(t: [usize; 3]) -> Option<usize> {
    triples().iter().position(|&x| x == t)
}

/// Sorts `indices` and returns the sign of the sorting permutation, or
/// `None` when an index repeats (the wedge vanishes).
pub fn sort_with_sign(indices: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut v = indices.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

fn covector_index(name: &str) -> usize {
    COVECTORS
        .iter()
        .position(|&c| c == name)
        .unwrap_or_else(|| panic!("unknown covector {name}"))
}

/// Integer combination of the wedge monomials `x_i ^ x_j ^ x_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntThreeForm {
    coeffs: Vec<BigInt>,
}

impl IntThreeForm {
    pub fn zero() -> Self {
        IntThreeForm {
            coeffs: vec![BigInt::zero(); DIM],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), DIM);
        IntThreeForm { coeffs }
    }

    /// Builds a form from monomials written as `"e1 f2 f3"`; the factors may
    /// come in any order and are sorted with the matching sign.
    pub fn from_monomials(terms: &[(&str, i64)]) -> Self {
        let mut f = Self::zero();
        for (mono, c) in terms {
            let idx: Vec<usize> = mono.split_whitespace().map(covector_index).collect();
            assert_eq!(idx.len(), 3, "monomial {mono} is not of degree 3");
            let (sign, sorted) = sort_with_sign(&idx).expect("distinct factors");
            let pos = triple_index([sorted[0], sorted[1], sorted[2]]).expect("increasing triple");
            f.coeffs[pos] += BigInt::from(sign * c);
        }
        f
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, mono: &str) -> BigInt {
        let probe = Self::from_monomials(&[(mono, 1)]);
        let pos = probe.coeffs.iter().position(|c| !c.is_zero()).expect("one term");
        &self.coeffs[pos] * &probe.coeffs[pos]
    }

    pub fn apply(&self, m: &IntMatrix) -> IntThreeForm {
        IntThreeForm::from_coeffs(m.apply(&self.coeffs))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(int_json).collect())
    }
}

impl fmt::Display for IntThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, t) in self.coeffs.iter().zip(triples()) {
            if !c.is_zero() {
                let mono = t.iter().map(|&i| COVECTORS[i]).collect::<Vec<_>>().join("^");
                parts.push(format!("{c}*{mono}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for IntThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for IntThreeForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl std::ops::Add for IntThreeForm {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        IntThreeForm::from_coeffs(self.coeffs.into_iter().zip(o.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for IntThreeForm {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        IntThreeForm::from_coeffs(self.coeffs.into_iter().zip(o.coeffs).map(|(a, b)| a - b).collect())
    }
}

/// Third compound matrix: entry `(I, J)` is the minor of `m` on rows `I`
/// and columns `J`. It is the matrix of `x ^ y ^ z -> mx ^ my ^ mz`.
pub fn lift3<R: Ring>(m: &Matrix<R>) -> Matrix<R> {
    assert!(m.rows() == 6 && m.cols() == 6);
    let t = triples();
    Matrix::from_fn(DIM, DIM, |i, j| m.minor_matrix(&t[i], &t[j]).det())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_matrix;
    use proptest::prelude::*;

    #[test]
    fn twenty_triples() {
        assert_eq!(triples().len(), 20);
        assert_eq!(triples()[0], [0, 1, 2]);
        assert_eq!(triples()[19], [3, 4, 5]);
    }

    #[test]
    fn reordered_monomials_carry_sign() {
        let a = IntThreeForm::from_monomials(&[("f1 e2 e3", 1)]);
        let b = IntThreeForm::from_monomials(&[("e2 f1 e3", -1)]);
        assert_eq!(a, b);
        assert_eq!(a.coeff("e2 e3 f1"), BigInt::from(1));
    }

    #[test]
    fn top_form_sign_is_parity() {
        // compare against a parity computed from cycle counts
        fn parity_by_cycles(p: &[usize]) -> i64 {
            let mut seen = [false; 6];
            let mut sign = 1;
            for s in 0..6 {
                if seen[s] {
                    continue;
                }
                let mut len = 0;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = p[x];
                    len += 1;
                }
                if len % 2 == 0 {
                    sign = -sign;
                }
            }
            sign
        }
        let mut perm: Vec<usize> = (0..6).collect();
        let mut count = 0;
        loop {
            let (sign, sorted) = sort_with_sign(&perm).unwrap();
            assert_eq!(sorted, (0..6).collect::<Vec<_>>());
            assert_eq!(sign, parity_by_cycles(&perm));
            count += 1;
            // next lexicographic permutation
            let Some(i) = (0..5).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
            let j = (i + 1..6).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        assert_eq!(count, 720);
        assert!(sort_with_sign(&[0, 1, 1]).is_none());
    }

    #[test]
    fn lift_of_identity_and_diagonal() {
        let id: IntMatrix = Matrix::identity(6);
        assert!(lift3(&id).is_identity());
        let d = Matrix::diagonal(&[1, 2, 3, 5, 7, 11].map(BigInt::from));
        let l = lift3(&d);
        let pos = triple_index([1, 3, 5]).unwrap();
        assert_eq!(l[(pos, pos)], BigInt::from(2 * 5 * 11));
    }

    #[test]
    fn lift_acts_on_wedges() {
        // m sends e1 -> e1 + f1 and fixes the rest
        let mut rows: Vec<Vec<i64>> = (0..6).map(|i| (0..6).map(|j| i64::from(i == j)).collect()).collect();
        rows[1][0] = 1;
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = int_matrix(&refs);
        let form = IntThreeForm::from_monomials(&[("e1 e2 e3", 1)]);
        let image = form.apply(&lift3(&m));
        let expected = IntThreeForm::from_monomials(&[("e1 e2 e3", 1), ("f1 e2 e3", 1)]);
        assert_eq!(image, expected);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-2i64..=2, 36).prop_map(|v| {
            Matrix::from_fn(6, 6, |i, j| BigInt::from(v[6 * i + j]))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn lift_is_multiplicative(a in small_matrix(), b in small_matrix()) {
            prop_assert_eq!(lift3(&a.mul(&b)), lift3(&a).mul(&lift3(&b)));
        }
    }
}
