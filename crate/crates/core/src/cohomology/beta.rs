//! Exact arithmetic in `Q(beta)` with `beta > 0`, `beta^2 = v`, and in
//! `Q(beta)(i)`, plus Gauss reduction of lattice moduli.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::ring::{Field, Ring};

/// `x + y beta`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QBeta {
    pub x: BigRational,
    pub y: BigRational,
}

impl QBeta {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        QBeta { x, y }
    }

    pub fn rational(x: BigRational) -> Self {
        QBeta::new(x, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QBeta::new(&self.x * c, &self.y * c)
    }
}

impl Add for QBeta {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QBeta::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for QBeta {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QBeta::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for QBeta {
    type Output = Self;
    fn neg(self) -> Self {
        QBeta::new(-self.x, -self.y)
    }
}

impl fmt::Display for QBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => write!(f, "{}", self.x),
            (true, false) => write!(f, "{}b", self.y),
            (false, false) => write!(f, "{}+{}b", self.x, self.y),
        }
    }
}

impl fmt::Debug for QBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QBeta {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(s)
    }
}

/// `x + yi` with `x, y` in `Q(beta)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CBeta {
    pub re: QBeta,
    pub im: QBeta,
}

impl CBeta {
    pub fn new(re: QBeta, im: QBeta) -> Self {
        CBeta { re, im }
    }

    pub fn real(re: QBeta) -> Self {
        CBeta::new(re, QBeta::zero())
    }

    pub fn i() -> Self {
        CBeta::new(QBeta::zero(), QBeta::rational(BigRational::one()))
    }

    pub fn conj(&self) -> Self {
        CBeta::new(self.re.clone(), -self.im.clone())
    }
}

impl Add for CBeta {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        CBeta::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for CBeta {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        CBeta::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for CBeta {
    type Output = Self;
    fn neg(self) -> Self {
        CBeta::new(-self.re, -self.im)
    }
}

/// The real quadratic field `Q(beta)`, `beta^2 = v > 0`. When `v` is a
/// rational square, `beta` is folded into the rational part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaField {
    v: BigRational,
    root: Option<BigRational>,
}

fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    let (n, d) = (v.numer(), v.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

impl BetaField {
    pub fn new(v: BigRational) -> Self {
        assert!(v.is_positive(), "beta^2 must be positive");
        let root = rational_sqrt(&v);
        BetaField { v, root }
    }

    pub fn v(&self) -> &BigRational {
        &self.v
    }

    pub fn beta(&self) -> QBeta {
        self.norm(QBeta::new(BigRational::zero(), BigRational::one()))
    }

    pub fn norm(&self, a: QBeta) -> QBeta {
        match &self.root {
            Some(r) if !a.y.is_zero() => QBeta::rational(a.x + a.y * r),
            _ => a,
        }
    }

    pub fn mul(&self, a: &QBeta, b: &QBeta) -> QBeta {
        self.norm(QBeta::new(
            &a.x * &b.x + &a.y * &b.y * &self.v,
            &a.x * &b.y + &a.y * &b.x,
        ))
    }

    pub fn inv(&self, a: &QBeta) -> Option<QBeta> {
        let n = &a.x * &a.x - &a.y * &a.y * &self.v;
        let n_inv = n.inv()?;
        Some(self.norm(QBeta::new(&a.x * &n_inv, -&a.y * &n_inv)))
    }

    pub fn sign(&self, a: &QBeta) -> Ordering {
        let sx = a.x.cmp(&BigRational::zero());
        let sy = a.y.cmp(&BigRational::zero());
        if sy == Ordering::Equal {
            return sx;
        }
        if sx == Ordering::Equal || sx == sy {
            return sy;
        }
        // opposite signs: the larger square wins
        let x2 = &a.x * &a.x;
        let y2v = &a.y * &a.y * &self.v;
        match x2.cmp(&y2v) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn cmp(&self, a: &QBeta, b: &QBeta) -> Ordering {
        self.sign(&(a.clone() - b.clone()))
    }

    pub fn floor(&self, a: &QBeta) -> BigInt {
        let approx = a.x.to_f64().unwrap_or(0.0) + a.y.to_f64().unwrap_or(0.0) * self.v.to_f64().unwrap_or(0.0).sqrt();
        let mut n = BigInt::from(approx.floor() as i64);
        let at = |n: &BigInt| QBeta::rational(BigRational::from_integer(n.clone()));
        while self.cmp(a, &at(&n)) == Ordering::Less {
            n -= 1;
        }
        while self.cmp(a, &at(&(&n + 1))) != Ordering::Less {
            n += 1;
        }
        n
    }

    pub fn cmul(&self, a: &CBeta, b: &CBeta) -> CBeta {
        CBeta::new(
            self.mul(&a.re, &b.re) - self.mul(&a.im, &b.im),
            self.mul(&a.re, &b.im) + self.mul(&a.im, &b.re),
        )
    }

    pub fn abs2(&self, a: &CBeta) -> QBeta {
        self.mul(&a.re, &a.re) + self.mul(&a.im, &a.im)
    }

    pub fn cinv(&self, a: &CBeta) -> Option<CBeta> {
        let n = self.inv(&self.abs2(a))?;
        let c = a.conj();
        Some(CBeta::new(self.mul(&c.re, &n), self.mul(&c.im, &n)))
    }

    pub fn cnorm(&self, a: CBeta) -> CBeta {
        CBeta::new(self.norm(a.re), self.norm(a.im))
    }
}

/// Representative of `Z + Z w` in the standard fundamental domain:
/// `Im w > 0`, `-1/2 <= Re w < 1/2`, `|w| >= 1`, and `Re w <= 0` when `|w| = 1`.
pub fn reduce_modulus(k: &BetaField, w: &CBeta) -> Option<CBeta> {
    let zero = QBeta::zero();
    let one = QBeta::rational(BigRational::one());
    let half = QBeta::rational(BigRational::new(1.into(), 2.into()));
    let mut w = k.cnorm(w.clone());
    match k.sign(&w.im) {
        Ordering::Equal => return None,
        Ordering::Less => w = -w,
        Ordering::Greater => {}
    }
    loop {
        let n = k.floor(&(w.re.clone() + half.clone()));
        w.re = w.re - QBeta::rational(BigRational::from_integer(n));
        let a = k.abs2(&w);
        match k.cmp(&a, &one) {
            Ordering::Less => w = -k.cinv(&w)?,
            Ordering::Equal if k.cmp(&w.re, &zero) == Ordering::Greater => w = -k.cinv(&w)?,
            _ => return Some(w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn q(n: i64, d: i64) -> QBeta {
        QBeta::rational(rat(n, d))
    }

    #[test]
    fn beta_squares_to_v() {
        let k = BetaField::new(rat(7, 4));
        let b = k.beta();
        assert_eq!(k.mul(&b, &b), q(7, 4));
        let inv = k.inv(&b).unwrap();
        assert_eq!(k.mul(&b, &inv), q(1, 1));
    }

    #[test]
    fn square_v_folds() {
        let k = BetaField::new(rat(1, 1));
        assert_eq!(k.beta(), q(1, 1));
        let k = BetaField::new(rat(9, 4));
        assert_eq!(k.beta(), q(3, 2));
    }

    #[test]
    fn signs_and_floors() {
        let k = BetaField::new(rat(3, 4));
        // beta = 0.866...
        let b = k.beta();
        assert_eq!(k.floor(&b), BigInt::from(0));
        assert_eq!(k.floor(&(-b.clone())), BigInt::from(-1));
        assert_eq!(k.floor(&(b.clone() + q(5, 1))), BigInt::from(5));
        // 1 - beta > 0, 1 - 2 beta < 0
        assert_eq!(k.sign(&(q(1, 1) - b.clone())), Ordering::Greater);
        assert_eq!(k.sign(&(q(1, 1) - b.scale(&rat(2, 1)))), Ordering::Less);
    }

    #[test]
    fn reduction_examples() {
        let k = BetaField::new(rat(3, 4));
        let omega = CBeta::new(q(-1, 2), k.beta());
        assert_eq!(reduce_modulus(&k, &omega).unwrap(), omega);
        // 1 + omega and -1/omega are equivalent to omega
        let shifted = CBeta::new(q(1, 2), k.beta());
        assert_eq!(reduce_modulus(&k, &shifted).unwrap(), omega);
        let inv = -k.cinv(&omega).unwrap();
        assert_eq!(reduce_modulus(&k, &inv).unwrap(), omega);
        // idempotent
        let r = reduce_modulus(&k, &CBeta::new(q(7, 3), k.beta().scale(&rat(1, 5)))).unwrap();
        assert_eq!(reduce_modulus(&k, &r).unwrap(), r);
        // real modulus is degenerate
        assert!(reduce_modulus(&k, &CBeta::real(q(2, 1))).is_none());
    }

    #[test]
    fn gaussian_modulus() {
        let k = BetaField::new(rat(1, 1));
        let i = CBeta::i();
        assert_eq!(reduce_modulus(&k, &i).unwrap(), i);
        let far = CBeta::new(q(3, 1), q(1, 1));
        assert_eq!(reduce_modulus(&k, &far).unwrap(), i);
    }
}
