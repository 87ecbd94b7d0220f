//! Imaginary quadratic orders `Z[tau]` with `tau^2 + tau + c = 0`.
//!
//! `c = 1` gives `Z[omega]` (discriminant -3), `c = 2` gives `Z[eta]`
//! (discriminant -7). The order is carried at the type level.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::cyclotomic::cyc::CycInt;
use crate::error::CycError;
use crate::ring::{ceil_sqrt, is_prime, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum DiscTag {
    Omega,
    Eta,
}

pub trait QuadOrder: Clone + Copy + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    /// Constant term `c` of `tau^2 + tau + c`.
    const C: i64;
    const TAG: DiscTag;
    /// Absolute value of the field discriminant.
    const DISC: u64;
    const SYMBOL: &'static str;

    /// The unit group as `(a, b)` pairs.
    fn units() -> Vec<(i64, i64)>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Omega;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Eta;

impl QuadOrder for Omega {
    const C: i64 = 1;
    const TAG: DiscTag = DiscTag::Omega;
    const DISC: u64 = 3;
    const SYMBOL: &'static str = "w";

    fn units() -> Vec<(i64, i64)> {
        // 1, -1, w, -w, w^2 = -1 - w, -w^2 = 1 + w
        vec![(1, 0), (-1, 0), (0, 1), (0, -1), (-1, -1), (1, 1)]
    }
}

impl QuadOrder for Eta {
    const C: i64 = 2;
    const TAG: DiscTag = DiscTag::Eta;
    const DISC: u64 = 7;
    const SYMBOL: &'static str = "n";

    fn units() -> Vec<(i64, i64)> {
        vec![(1, 0), (-1, 0)]
    }
}

/// `a + b tau` in the order selected by `O`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadInt<O: QuadOrder> {
    pub a: BigInt,
    pub b: BigInt,
    _order: PhantomData<O>,
}

pub type OmegaInt = QuadInt<Omega>;
pub type EtaInt = QuadInt<Eta>;

impl<O: QuadOrder> QuadInt<O> {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
            _order: PhantomData,
        }
    }

    pub fn tau() -> Self {
        Self::new(0, 1)
    }

    pub fn tag(&self) -> DiscTag {
        O::TAG
    }

    /// Galois conjugate: `a + b tau -> (a - b) - b tau`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// `a^2 - ab + c b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + BigInt::from(O::C) * &self.b * &self.b
    }

    /// `x + conj(x) = 2a - b`.
    pub fn trace(&self) -> BigInt {
        BigInt::from(2) * &self.a - &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == BigInt::from(1)
    }

    /// Inverse of a unit (`conj(x)` since the norm is 1).
    pub fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.conj())
    }

    pub fn units() -> Vec<Self> {
        O::units().into_iter().map(|(a, b)| Self::new(a, b)).collect()
    }

    /// Whether `self` is divisible by the rational integer `n`.
    pub fn divisible_by_int(&self, n: &BigInt) -> bool {
        self.a.is_multiple_of(n) && self.b.is_multiple_of(n)
    }

    /// Restriction of scalars: the 2x2 integer matrix of multiplication by `self`
    /// on the basis `(1, tau)`, columns being images of `1` and `tau`.
    pub fn mult_block(&self) -> [[BigInt; 2]; 2] {
        let c = BigInt::from(O::C);
        [
            [self.a.clone(), -(c * &self.b)],
            [self.b.clone(), &self.a - &self.b],
        ]
    }
}

impl EtaInt {
    /// Image in `Z[mu]` under `eta -> mu + mu^2 + mu^4`.
    pub fn to_cyc(&self) -> CycInt {
        CycInt::scalar(self.a.clone()) + CycInt::scalar(self.b.clone()) * CycInt::eta()
    }
}

impl<O: QuadOrder> Add for QuadInt<O> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl<O: QuadOrder> Sub for QuadInt<O> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl<O: QuadOrder> Neg for QuadInt<O> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<O: QuadOrder> Mul for QuadInt<O> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // tau^2 = -tau - c
        let c = BigInt::from(O::C);
        let bd = &self.b * &o.b;
        Self::new(
            &self.a * &o.a - &c * &bd,
            &self.a * &o.b + &self.b * &o.a - bd,
        )
    }
}

impl<O: QuadOrder> Ring for QuadInt<O> {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn one() -> Self {
        Self::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.a) && num_traits::Zero::is_zero(&self.b)
    }
    fn from_int(n: i64) -> Self {
        Self::new(n, 0)
    }
}

impl<O: QuadOrder> fmt::Display for QuadInt<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = BigInt::from(0);
        match (self.a == zero, self.b == zero) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}{}", self.b, O::SYMBOL),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}{}", self.a, -&self.b, O::SYMBOL)
                } else {
                    write!(f, "{}+{}{}", self.a, self.b, O::SYMBOL)
                }
            }
        }
    }
}

impl<O: QuadOrder> fmt::Debug for QuadInt<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as `[a, b]`.
impl<O: QuadOrder> Serialize for QuadInt<O> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [crate::report::int_json(&self.a), crate::report::int_json(&self.b)].serialize(s)
    }
}

/// `quad_norm_conj`.
pub fn quad_norm_conj<O: QuadOrder>(x: &QuadInt<O>) -> (BigInt, QuadInt<O>) {
    (x.norm(), x.conj())
}

/// Splitting behaviour of a rational prime in the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitResult<O: QuadOrder> {
    Inert,
    Split(QuadInt<O>),
}

impl<O: QuadOrder> SplitResult<O> {
    pub fn generator(&self) -> Option<&QuadInt<O>> {
        match self {
            SplitResult::Split(pi) => Some(pi),
            SplitResult::Inert => None,
        }
    }
}

/// Finds a generator of norm `p` by bounded search over `|a|, |b| <= ceil(2 sqrt p)`.
pub fn factor_rational_prime<O: QuadOrder>(p: u64) -> Result<SplitResult<O>, CycError> {
    if !is_prime(p) {
        return Err(CycError::NotPrime(p));
    }
    if p == O::DISC {
        return Err(CycError::Ramified(p));
    }
    let bound = 2 * ceil_sqrt(p) as i64;
    let target = BigInt::from(p);
    // prefer b > 0, then small |a|, for a reproducible generator
    for b in 1..=bound {
        for a in (0..=bound).flat_map(|a| [a, -a]) {
            let x = QuadInt::<O>::new(a, b);
            if x.norm() == target {
                return Ok(SplitResult::Split(x));
            }
        }
    }
    Ok(SplitResult::Inert)
}

/// The unit associates `u x` and `u conj(x)` for every unit `u`.
pub fn associates<O: QuadOrder>(x: &QuadInt<O>) -> Vec<QuadInt<O>> {
    let mut out = Vec::new();
    for base in [x.clone(), x.conj()] {
        for u in QuadInt::<O>::units() {
            let y = u * base.clone();
            if !out.contains(&y) {
                out.push(y);
            }
        }
    }
    out
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("value fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn norm_conj_examples() {
        let eta = EtaInt::tau();
        let (n, c) = quad_norm_conj(&eta);
        assert_eq!(n, BigInt::from(2));
        assert_eq!(c, EtaInt::new(-1, -1));

        let w = OmegaInt::tau();
        let (n, c) = quad_norm_conj(&w);
        assert_eq!(n, BigInt::from(1));
        assert_eq!(c, OmegaInt::new(-1, -1));

        let one_plus_eta = EtaInt::new(1, 1);
        assert_eq!(one_plus_eta.norm(), BigInt::from(2));
        assert_eq!(one_plus_eta.clone() * one_plus_eta.conj(), EtaInt::from_int(2));
    }

    #[test]
    fn defining_relations() {
        let e = EtaInt::tau();
        assert!((e.clone() * e.clone() + e + EtaInt::from_int(2)).is_zero());
        let w = OmegaInt::tau();
        assert!((w.clone() * w.clone() + w.clone() + OmegaInt::one()).is_zero());
        assert!(w.pow(3).is_one());
    }

    #[test]
    fn eta_embeds_into_cyclotomic() {
        assert_eq!(EtaInt::tau().to_cyc(), CycInt::eta());
        let x = EtaInt::new(3, -5);
        let y = EtaInt::new(-2, 7);
        assert_eq!((x.clone() * y.clone()).to_cyc(), x.to_cyc() * y.to_cyc());
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_rational_prime::<Eta>(7), Err(CycError::Ramified(7)));
        assert_eq!(factor_rational_prime::<Omega>(3), Err(CycError::Ramified(3)));
        assert_eq!(factor_rational_prime::<Omega>(2), Ok(SplitResult::Inert));
        assert_eq!(factor_rational_prime::<Omega>(9), Err(CycError::NotPrime(9)));
        match factor_rational_prime::<Eta>(11).unwrap() {
            SplitResult::Split(pi) => assert_eq!(pi.norm(), BigInt::from(11)),
            SplitResult::Inert => panic!("11 splits in Q(sqrt(-7))"),
        }
        // 2 = eta * conj(eta) splits in Z[eta]
        assert!(matches!(factor_rational_prime::<Eta>(2), Ok(SplitResult::Split(_))));
    }

    #[test]
    fn split_iff_residue_symbol() {
        // brute-force oracle: p splits in Q(sqrt(-d)) iff -d is a nonzero square mod p (p odd)
        for p in crate::ring::primes_up_to(200) {
            for (disc, split) in [
                (3u64, factor_rational_prime::<Omega>(p).map(|s| s.generator().is_some())),
                (7u64, factor_rational_prime::<Eta>(p).map(|s| s.generator().is_some())),
            ] {
                if p == disc {
                    assert!(split.is_err());
                    continue;
                }
                let square = if p == 2 {
                    disc % 8 == 7
                } else {
                    let target = (p - disc % p) % p;
                    (1..p).any(|y| (y * y) % p == target)
                };
                assert_eq!(split, Ok(square), "p={p} d={disc}");
            }
        }
    }

    #[test]
    fn associates_counts() {
        let pi = match factor_rational_prime::<Omega>(7).unwrap() {
            SplitResult::Split(pi) => pi,
            _ => unreachable!(),
        };
        assert_eq!(associates(&pi).len(), 12);
        let pi = factor_rational_prime::<Eta>(11).unwrap().generator().cloned().unwrap();
        assert_eq!(associates(&pi).len(), 4);
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = EtaInt::new(a, b);
            let y = EtaInt::new(c, d);
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            let x = OmegaInt::new(a, b);
            let y = OmegaInt::new(c, d);
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            prop_assert!(x.norm() >= BigInt::from(0));
        }

        #[test]
        fn mult_block_matches_product(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20) {
            let x = EtaInt::new(a, b);
            let y = EtaInt::new(c, d);
            let m = x.mult_block();
            let prod = x * y.clone();
            prop_assert_eq!(&m[0][0] * &y.a + &m[0][1] * &y.b, prod.a);
            prop_assert_eq!(&m[1][0] * &y.a + &m[1][1] * &y.b, prod.b);
        }
    }
}
