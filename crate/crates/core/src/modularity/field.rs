//! Prime fields and their cubic extensions with elements stored as
//! coefficient triples.

use crate::ring::is_prime;

pub type Elem = [u64; 3];

/// `F_p` (`degree = 1`) or `F_p[t]/(m(t))` for a monic irreducible cubic `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    degree: usize,
    /// `(c0, c1, c2)` of `m = t^3 + c2 t^2 + c1 t + c0`; unused for degree 1.
    modulus: [u64; 3],
}

fn cubic_has_root(p: u64, c: [u64; 3]) -> bool {
    (0..p).any(|x| (x * x % p * x + c[2] * x % p * x + c[1] * x + c[0]) % p == 0)
}

impl FiniteField {
    pub fn prime(p: u64) -> Option<Self> {
        is_prime(p).then_some(FiniteField {
            p,
            degree: 1,
            modulus: [0; 3],
        })
    }

    /// `F_{p^3}` built on the first irreducible monic cubic in the order
    /// `(c2, c1, c0)` lexicographic.
    pub fn cubic_extension(p: u64) -> Option<Self> {
        if !is_prime(p) {
            return None;
        }
        for c2 in 0..p {
            for c1 in 0..p {
                for c0 in 0..p {
                    let c = [c0, c1, c2];
                    if !cubic_has_root(p, c) {
                        return Some(FiniteField { p, degree: 3, modulus: c });
                    }
                }
            }
        }
        None
    }

    /// `F_q` for `q = p` or `q = p^3`.
    pub fn with_order(q: u64) -> Option<Self> {
        if is_prime(q) {
            return Self::prime(q);
        }
        let p = (1..=q).find(|&p| p * p * p >= q)?;
        (p * p * p == q).then(|| Self::cubic_extension(p)).flatten()
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    pub fn modulus(&self) -> Option<[u64; 3]> {
        (self.degree == 3).then_some(self.modulus)
    }

    pub fn zero(&self) -> Elem {
        [0; 3]
    }

    pub fn from_int(&self, n: i64) -> Elem {
        [n.rem_euclid(self.p as i64) as u64, 0, 0]
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *a == [0; 3]
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        std::array::from_fn(|i| (a[i] + b[i]) % self.p)
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        std::array::from_fn(|i| (a[i] + self.p - b[i]) % self.p)
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let p = self.p;
        if self.degree == 1 {
            return [a[0] * b[0] % p, 0, 0];
        }
        let mut prod = [0u64; 5];
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        // t^3 = -(c2 t^2 + c1 t + c0)
        for k in (3..5).rev() {
            let top = prod[k];
            prod[k] = 0;
            for (i, c) in self.modulus.iter().enumerate() {
                let idx = k - 3 + i;
                prod[idx] = (prod[idx] + (p - c) * top) % p;
            }
        }
        [prod[0], prod[1], prod[2]]
    }

    pub fn pow(&self, a: &Elem, e: u32) -> Elem {
        (0..e).fold(self.from_int(1), |acc, _| self.mul(&acc, a))
    }

    /// Dense index in `0..q`.
    pub fn index(&self, a: &Elem) -> usize {
        (a[0] + self.p * (a[1] + self.p * a[2])) as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let p = self.p;
        (0..self.order()).map(move |i| [i % p, (i / p) % p, i / (p * p)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f8_is_a_field() {
        let f = FiniteField::cubic_extension(2).unwrap();
        assert_eq!(f.modulus(), Some([1, 1, 0]));
        let nonzero: Vec<Elem> = f.elements().filter(|e| !f.is_zero(e)).collect();
        assert_eq!(nonzero.len(), 7);
        for a in &nonzero {
            assert_eq!(nonzero.iter().filter(|b| f.mul(a, b) == f.from_int(1)).count(), 1);
            // the multiplicative group has order 7
            assert_eq!(f.pow(a, 7), f.from_int(1));
        }
    }

    #[test]
    fn frobenius_fixes_prime_field_only() {
        for p in [3, 5] {
            let f = FiniteField::cubic_extension(p).unwrap();
            let fixed = f.elements().filter(|a| f.pow(a, p as u32) == *a).count();
            assert_eq!(fixed as u64, p);
        }
    }

    #[test]
    fn order_lookup() {
        assert_eq!(FiniteField::with_order(27).unwrap().degree(), 3);
        assert_eq!(FiniteField::with_order(11).unwrap().degree(), 1);
        assert!(FiniteField::with_order(9).is_none());
        assert!(FiniteField::with_order(12).is_none());
    }
}
