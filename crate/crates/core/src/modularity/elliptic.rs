//! The two CM elliptic curves, their point counts and Frobenius traces.

use std::collections::HashMap;

use serde::Serialize;

use crate::cyclotomic::quad::to_i64;
use crate::cyclotomic::{factor_rational_prime, DiscTag, Eta, Omega, QuadOrder, SplitResult};
use crate::error::{CycError, ModularityError};
use crate::modularity::field::{Elem, FiniteField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EllipticKind {
    /// `Y^3 = X(X - 1)`, closure `X^2 Z - X Z^2 - Y^3`.
    OmegaCubic,
    /// `Y^2 = 4X^3 + 21X^2 + 28X`.
    EtaWeierstrass,
}

impl EllipticKind {
    pub const ALL: [EllipticKind; 2] = [EllipticKind::OmegaCubic, EllipticKind::EtaWeierstrass];

    pub fn name(&self) -> &'static str {
        match self {
            EllipticKind::OmegaCubic => "omega",
            EllipticKind::EtaWeierstrass => "eta",
        }
    }

    pub fn cm_field(&self) -> DiscTag {
        match self {
            EllipticKind::OmegaCubic => DiscTag::Omega,
            EllipticKind::EtaWeierstrass => DiscTag::Eta,
        }
    }

    fn y_exponent(&self) -> u32 {
        match self {
            EllipticKind::OmegaCubic => 3,
            EllipticKind::EtaWeierstrass => 2,
        }
    }

    fn rhs(&self, f: &FiniteField, x: &Elem) -> Elem {
        let c = |n| f.from_int(n);
        match self {
            EllipticKind::OmegaCubic => f.mul(x, &f.sub(x, &c(1))),
            EllipticKind::EtaWeierstrass => {
                // ((4x + 21)x + 28)x
                let t = f.add(&f.mul(&c(4), x), &c(21));
                let t = f.add(&f.mul(&t, x), &c(28));
                f.mul(&t, x)
            }
        }
    }

    /// Partial derivatives of the projective equation at `(x, y, 1)`.
    fn gradient(&self, f: &FiniteField, x: &Elem, y: &Elem) -> [Elem; 3] {
        let c = |n| f.from_int(n);
        let x2 = f.mul(x, x);
        match self {
            EllipticKind::OmegaCubic => [
                f.sub(&f.mul(&c(2), x), &c(1)),
                f.mul(&c(-3), &f.mul(y, y)),
                f.sub(&x2, &f.mul(&c(2), x)),
            ],
            EllipticKind::EtaWeierstrass => [
                f.sub(&f.zero(), &f.add(&f.add(&f.mul(&c(12), &x2), &f.mul(&c(42), x)), &c(28))),
                f.mul(&c(2), y),
                f.sub(&f.mul(y, y), &f.add(&f.mul(&c(21), &x2), &f.mul(&c(56), x))),
            ],
        }
    }
}

/// Exact projective point count over `F_q`, `q = p` or `p^3`. The single
/// point at infinity of either model is smooth and counted once.
pub fn count_points(kind: EllipticKind, q: u64) -> Result<u64, ModularityError> {
    let f = FiniteField::with_order(q).ok_or(ModularityError::Cyc(CycError::NotPrime(q)))?;
    count_points_in(kind, &f)
}

pub fn count_points_in(kind: EllipticKind, f: &FiniteField) -> Result<u64, ModularityError> {
    let e = kind.y_exponent();
    let mut roots: HashMap<usize, Vec<Elem>> = HashMap::new();
    for y in f.elements() {
        roots.entry(f.index(&f.pow(&y, e))).or_default().push(y);
    }
    let mut affine = 0u64;
    for x in f.elements() {
        let Some(ys) = roots.get(&f.index(&kind.rhs(f, &x))) else { continue };
        for y in ys {
            if kind.gradient(f, &x, y).iter().all(|g| f.is_zero(g)) {
                return Err(ModularityError::BadReduction(f.characteristic()));
            }
        }
        affine += ys.len() as u64;
    }
    Ok(affine + 1)
}

pub fn is_good_prime(kind: EllipticKind, p: u64) -> bool {
    count_points(kind, p).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitInfo {
    Inert,
    /// A generator `a + b tau` of one prime above `p`.
    Split { a: i64, b: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusData {
    pub kind: EllipticKind,
    pub p: u64,
    pub n_p: u64,
    pub a_p: i64,
    pub split: SplitInfo,
    /// `a_p^2 <= 4p`.
    pub hasse: bool,
    /// `a_p = 0` whenever `p` is inert; vacuous for split `p`.
    pub inert_zero: bool,
}

fn split_info<O: QuadOrder>(p: u64) -> Result<SplitInfo, CycError> {
    Ok(match factor_rational_prime::<O>(p)? {
        SplitResult::Inert => SplitInfo::Inert,
        SplitResult::Split(pi) => SplitInfo::Split {
            a: to_i64(&pi.a),
            b: to_i64(&pi.b),
        },
    })
}

pub fn frobenius_trace(kind: EllipticKind, p: u64) -> Result<FrobeniusData, ModularityError> {
    let n_p = count_points(kind, p)?;
    let a_p = p as i64 + 1 - n_p as i64;
    let split = match kind {
        EllipticKind::OmegaCubic => split_info::<Omega>(p),
        EllipticKind::EtaWeierstrass => split_info::<Eta>(p),
    }
    .map_err(|e| match e {
        CycError::Ramified(p) => ModularityError::BadReduction(p),
        other => ModularityError::Cyc(other),
    })?;
    let hasse = (a_p * a_p) as u64 <= 4 * p;
    let inert_zero = split != SplitInfo::Inert || a_p == 0;
    Ok(FrobeniusData {
        kind,
        p,
        n_p,
        a_p,
        split,
        hasse,
        inert_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all pairs, independent of the root tables.
    fn naive(kind: EllipticKind, p: i64) -> i64 {
        let mut n = 1;
        for x in 0..p {
            for y in 0..p {
                let v = match kind {
                    EllipticKind::OmegaCubic => y * y * y - x * (x - 1),
                    EllipticKind::EtaWeierstrass => y * y - (4 * x * x * x + 21 * x * x + 28 * x),
                };
                if v.rem_euclid(p) == 0 {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_points(EllipticKind::OmegaCubic, 2).unwrap(), 3);
        assert_eq!(count_points(EllipticKind::OmegaCubic, 8).unwrap(), 9);
        let n = count_points(EllipticKind::EtaWeierstrass, 11).unwrap() as i64;
        assert_eq!((12 - n).abs(), 4);
        assert_eq!(count_points(EllipticKind::EtaWeierstrass, 3).unwrap(), 4);
    }

    #[test]
    fn bad_primes_are_detected() {
        let bad = |k| (2..60).filter(|&p| crate::ring::is_prime(p) && !is_good_prime(k, p)).collect::<Vec<_>>();
        assert_eq!(bad(EllipticKind::OmegaCubic), vec![3]);
        assert_eq!(bad(EllipticKind::EtaWeierstrass), vec![2, 7]);
        assert_eq!(count_points(EllipticKind::OmegaCubic, 27), Err(ModularityError::BadReduction(3)));
    }

    #[test]
    fn matches_naive_count() {
        for p in [5, 7, 11, 13, 17, 19, 23, 29] {
            for kind in EllipticKind::ALL {
                if let Ok(n) = count_points(kind, p) {
                    assert_eq!(n as i64, naive(kind, p as i64), "{kind:?} p={p}");
                }
            }
        }
    }

    #[test]
    fn known_traces() {
        let a = |k, p| frobenius_trace(k, p).unwrap().a_p;
        for (p, t) in [(7, -1), (13, 5), (19, -7), (31, -4), (37, 11), (43, 8)] {
            assert_eq!(a(EllipticKind::OmegaCubic, p), t);
        }
        for (p, t) in [(11, 4), (23, 8), (29, 2), (37, -6), (43, -12), (53, -10)] {
            assert_eq!(a(EllipticKind::EtaWeierstrass, p), t);
        }
        assert_eq!(a(EllipticKind::OmegaCubic, 5), 0);
        assert_eq!(a(EllipticKind::EtaWeierstrass, 3), 0);
    }
}
