//! Elements of `Z[mu]` and `Q(mu)` with `mu` a primitive 7th root of unity.
//!
//! Values are stored as six coefficients on `1, mu, ..., mu^5`, always reduced
//! modulo `1 + x + ... + x^6`, so equality is plain coefficient equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::CycError;
use crate::ring::{Field, Ring};

/// Degree of `Q(mu)` over `Q`.
pub const DEGREE: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc<T> {
    coeffs: [T; DEGREE],
}

/// Element of the ring of integers `Z[mu]`.
pub type CycInt = Cyc<BigInt>;
/// Element of the field `Q(mu)`.
pub type CycRat = Cyc<BigRational>;

impl<T: Ring> Cyc<T> {
    pub fn from_coeffs(coeffs: [T; DEGREE]) -> Self {
        Cyc { coeffs }
    }

    /// Builds an element from an arbitrary-length coefficient list on powers of `mu`,
    /// reducing exponents mod 7 and then eliminating `mu^6`.
    pub fn from_powers(powers: &[T]) -> Self {
        let mut slots: [T; 7] = std::array::from_fn(|_| T::zero());
        for (k, c) in powers.iter().enumerate() {
            if !c.is_zero() {
                slots[k % 7] = slots[k % 7].clone() + c.clone();
            }
        }
        let top = slots[6].clone();
        let coeffs = std::array::from_fn(|i| slots[i].clone() - top.clone());
        Cyc { coeffs }
    }

    pub fn coeffs(&self) -> &[T; DEGREE] {
        &self.coeffs
    }

    pub fn scalar(c: T) -> Self {
        let mut coeffs: [T; DEGREE] = std::array::from_fn(|_| T::zero());
        coeffs[0] = c;
        Cyc { coeffs }
    }

    /// `mu^k` for any integer exponent.
    pub fn mu_pow(k: i64) -> Self {
        let e = k.rem_euclid(7) as usize;
        let mut powers = vec![T::zero(); 7];
        powers[e] = T::one();
        Self::from_powers(&powers)
    }

    pub fn mu() -> Self {
        Self::mu_pow(1)
    }

    /// `eta = mu + mu^2 + mu^4`.
    pub fn eta() -> Self {
        Self::mu_pow(1) + Self::mu_pow(2) + Self::mu_pow(4)
    }

    /// `sqrt(-7) = 2 eta + 1`.
    pub fn sqrt_minus_seven() -> Self {
        Self::eta() * Self::from_int(2) + Self::one()
    }

    /// Galois automorphism `mu -> mu^k`.
    pub fn galois(&self, k: i64) -> Result<Self, CycError> {
        let k = k.rem_euclid(7);
        if k == 0 {
            return Err(CycError::InvalidGaloisIndex(k));
        }
        let mut powers = vec![T::zero(); 7];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as i64 * k).rem_euclid(7) as usize;
            powers[e] = powers[e].clone() + c.clone();
        }
        Ok(Self::from_powers(&powers))
    }

    /// Complex conjugation, i.e. `galois(6)`.
    pub fn conj(&self) -> Self {
        self.galois(6).expect("6 is a unit mod 7")
    }

    /// Product of the conjugates `sigma_k(x)` for `k = 2..6`.
    pub fn norm_cofactor(&self) -> Self {
        (2..7).fold(Self::one(), |acc, k| acc * self.galois(k).expect("unit index"))
    }

    /// Field norm to `Q`, returned as the (rational) constant term.
    pub fn norm(&self) -> T {
        let n = self.clone() * self.norm_cofactor();
        debug_assert!(n.coeffs[1..].iter().all(Ring::is_zero));
        n.coeffs[0].clone()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> Cyc<S> {
        Cyc {
            coeffs: std::array::from_fn(|i| f(&self.coeffs[i])),
        }
    }
}

impl CycInt {
    pub fn from_ints(c: [i64; DEGREE]) -> Self {
        Cyc::from_coeffs(c.map(BigInt::from))
    }

    pub fn to_rational(&self) -> CycRat {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Whether every coefficient is divisible by `n`, i.e. `x in n Z[mu]`.
    pub fn divisible_by_int(&self, n: &BigInt) -> bool {
        self.coeffs.iter().all(|c| c.is_multiple_of(n))
    }

    /// Coefficients reduced into `[0, n)`.
    pub fn reduce_mod(&self, n: &BigInt) -> Self {
        self.map(|c| crate::ring::mod_floor(c, n))
    }

    /// Exact division; fails unless `other` divides `self` in `Z[mu]`.
    pub fn exact_div(&self, other: &Self) -> Result<Self, CycError> {
        if other.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let n = other.norm();
        let num = self.clone() * other.norm_cofactor();
        if !num.divisible_by_int(&n) {
            return Err(CycError::InexactDivision);
        }
        Ok(num.map(|c| c / &n))
    }
}

impl CycRat {
    /// Returns the element if all coefficients are integers.
    pub fn to_integral(&self) -> Option<CycInt> {
        self.coeffs
            .iter()
            .all(|c| c.is_integer())
            .then(|| self.map(|c| c.to_integer()))
    }
}

impl<T: Ring> Add for Cyc<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Cyc {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + o.coeffs[i].clone()),
        }
    }
}

impl<T: Ring> Sub for Cyc<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Cyc {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - o.coeffs[i].clone()),
        }
    }
}

impl<T: Ring> Neg for Cyc<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyc {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl<T: Ring> Mul for Cyc<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut raw = vec![T::zero(); 2 * DEGREE - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] = raw[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Self::from_powers(&raw)
    }
}

impl<T: Ring> Ring for Cyc<T> {
    fn zero() -> Self {
        Cyc {
            coeffs: std::array::from_fn(|_| T::zero()),
        }
    }
    fn one() -> Self {
        Self::scalar(T::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn from_int(n: i64) -> Self {
        Self::scalar(T::from_int(n))
    }
}

impl Field for CycRat {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let cof = self.norm_cofactor();
        let n = (self.clone() * cof.clone()).coeffs[0].clone();
        let n_inv = n.inv()?;
        Some(cof.map(|c| c.clone() * n_inv.clone()))
    }
}

impl<T: Ring> fmt::Display for Cyc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})mu")?,
                _ => write!(f, "({c})mu^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Cyc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{self}]")
    }
}

/// Serialized as the array of six coefficients (integers as JSON numbers when
/// they fit, otherwise decimal strings; rationals as `"n/d"` strings).
impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self.coeffs.iter().map(crate::report::int_json).collect();
        v.serialize(s)
    }
}

impl Serialize for CycRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// `embed_eta`: the image of `eta` in `Z[mu]`.
pub fn embed_eta() -> CycInt {
    CycInt::eta()
}

pub fn galois(k: i64, x: &CycInt) -> Result<CycInt, CycError> {
    x.galois(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_cyc() -> impl Strategy<Value = CycInt> {
        proptest::array::uniform6(-20i64..20).prop_map(CycInt::from_ints)
    }

    #[test]
    fn eta_coefficients_and_relation() {
        let e = embed_eta();
        assert_eq!(e, CycInt::from_ints([0, 1, 1, 0, 1, 0]));
        let rel = e.clone() * e.clone() + e + CycInt::from_int(2);
        assert!(rel.is_zero());
    }

    #[test]
    fn eta_conjugate() {
        let e = embed_eta();
        let c = e.conj();
        let expected = CycInt::mu_pow(3) + CycInt::mu_pow(5) + CycInt::mu_pow(6);
        assert_eq!(c, expected);
        assert_eq!(c, -CycInt::one() - e);
    }

    #[test]
    fn mu_seventh_power_is_one() {
        assert!(CycInt::mu().pow(7).is_one());
        assert_eq!(
            CycInt::mu_pow(6),
            CycInt::from_ints([-1, -1, -1, -1, -1, -1])
        );
    }

    #[test]
    fn galois_examples() {
        let e = embed_eta();
        assert_eq!(galois(4, &e).unwrap(), e);
        let x = CycInt::from_ints([3, -1, 4, 1, -5, 9]);
        assert_eq!(galois(1, &x).unwrap(), x);
        assert_eq!(galois(2, &galois(4, &CycInt::mu()).unwrap()).unwrap(), CycInt::mu());
        assert!(matches!(galois(7, &x), Err(CycError::InvalidGaloisIndex(_))));
        assert!(matches!(galois(0, &x), Err(CycError::InvalidGaloisIndex(_))));
    }

    #[test]
    fn eta_orbit_under_galois() {
        let e = embed_eta();
        for k in [1, 2, 4] {
            assert_eq!(e.galois(k).unwrap(), e);
        }
        for k in [3, 5, 6] {
            assert_eq!(e.galois(k).unwrap(), -CycInt::one() - e.clone());
        }
    }

    #[test]
    fn product_of_one_minus_mu_powers_is_seven() {
        let p = (1..7).fold(CycInt::one(), |acc, k| acc * (CycInt::one() - CycInt::mu_pow(k)));
        assert_eq!(p, CycInt::from_int(7));
    }

    #[test]
    fn sqrt_minus_seven_squares_to_minus_seven() {
        let s = CycInt::sqrt_minus_seven();
        assert_eq!(s.clone() * s, CycInt::from_int(-7));
    }

    #[test]
    fn exact_division() {
        let a = CycInt::from_ints([1, 2, 0, -1, 3, 0]);
        let b = CycInt::one() - CycInt::mu();
        let prod = a.clone() * b.clone();
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(matches!(
            CycInt::one().exact_div(&b),
            Err(CycError::InexactDivision)
        ));
        assert!(matches!(a.exact_div(&CycInt::zero()), Err(CycError::DivisionByZero)));
    }

    #[test]
    fn rational_inverse() {
        let x = CycInt::from_ints([2, 0, 1, 0, 0, -3]).to_rational();
        let inv = x.inv().unwrap();
        assert!((x * inv).is_one());
    }

    proptest! {
        #[test]
        fn galois_is_ring_homomorphism(x in arb_cyc(), y in arb_cyc(), k in 1i64..7) {
            let gx = x.galois(k).unwrap();
            let gy = y.galois(k).unwrap();
            prop_assert_eq!((x.clone() * y.clone()).galois(k).unwrap(), gx.clone() * gy.clone());
            prop_assert_eq!((x + y).galois(k).unwrap(), gx + gy);
        }

        #[test]
        fn multiplication_commutes_and_associates(x in arb_cyc(), y in arb_cyc(), z in arb_cyc()) {
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x * (y * z));
        }

        #[test]
        fn norm_is_multiplicative(x in arb_cyc(), y in arb_cyc()) {
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        }
    }
}
