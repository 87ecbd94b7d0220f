//! Rigorous complex enclosures with dyadic rational endpoints.
//!
//! Used for displaying approximate values of exact cyclotomic numbers. No
//! equality decision in the crate goes through this module.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::cyc::CycInt;

pub const DEFAULT_BITS: u32 = 128;

/// Axis-aligned box `[re_lo, re_hi] x [im_lo, im_hi]`.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBox {
    pub re_lo: BigRational,
    pub re_hi: BigRational,
    pub im_lo: BigRational,
    pub im_hi: BigRational,
    bits: u32,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let n = (x.numer() * &scale).div_floor(x.denom());
    BigRational::new(n, scale)
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let n = (x.numer() * &scale).div_ceil(x.denom());
    BigRational::new(n, scale)
}

fn min_max(vals: [BigRational; 4]) -> (BigRational, BigRational) {
    let mut lo = vals[0].clone();
    let mut hi = vals[0].clone();
    for v in &vals[1..] {
        if *v < lo {
            lo = v.clone();
        }
        if *v > hi {
            hi = v.clone();
        }
    }
    (lo, hi)
}

fn interval_mul(
    a: (&BigRational, &BigRational),
    b: (&BigRational, &BigRational),
) -> (BigRational, BigRational) {
    min_max([a.0 * b.0, a.0 * b.1, a.1 * b.0, a.1 * b.1])
}

impl ComplexBox {
    pub fn new(re_lo: BigRational, re_hi: BigRational, im_lo: BigRational, im_hi: BigRational, bits: u32) -> Self {
        assert!(re_lo <= re_hi && im_lo <= im_hi, "box endpoints out of order");
        ComplexBox {
            re_lo: round_down(&re_lo, bits),
            re_hi: round_up(&re_hi, bits),
            im_lo: round_down(&im_lo, bits),
            im_hi: round_up(&im_hi, bits),
            bits,
        }
    }

    pub fn exact(re: BigRational, im: BigRational, bits: u32) -> Self {
        Self::new(re.clone(), re, im.clone(), im, bits)
    }

    pub fn from_int(n: &BigInt, bits: u32) -> Self {
        Self::exact(BigRational::from_integer(n.clone()), BigRational::zero(), bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn contains_zero(&self) -> bool {
        let z = BigRational::zero();
        self.re_lo <= z && z <= self.re_hi && self.im_lo <= z && z <= self.im_hi
    }

    /// Larger of the two side lengths.
    pub fn width(&self) -> BigRational {
        let a = &self.re_hi - &self.re_lo;
        let b = &self.im_hi - &self.im_lo;
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn midpoint_f64(&self) -> (f64, f64) {
        let two = BigRational::from_integer(BigInt::from(2));
        let re = (&self.re_lo + &self.re_hi) / &two;
        let im = (&self.im_lo + &self.im_hi) / two;
        (re.to_f64().unwrap_or(f64::NAN), im.to_f64().unwrap_or(f64::NAN))
    }
}

impl Add for ComplexBox {
    type Output = ComplexBox;
    fn add(self, o: ComplexBox) -> ComplexBox {
        let bits = self.bits.min(o.bits);
        ComplexBox::new(
            self.re_lo + o.re_lo,
            self.re_hi + o.re_hi,
            self.im_lo + o.im_lo,
            self.im_hi + o.im_hi,
            bits,
        )
    }
}

impl Neg for ComplexBox {
    type Output = ComplexBox;
    fn neg(self) -> ComplexBox {
        ComplexBox::new(-self.re_hi, -self.re_lo, -self.im_hi, -self.im_lo, self.bits)
    }
}

impl Sub for ComplexBox {
    type Output = ComplexBox;
    fn sub(self, o: ComplexBox) -> ComplexBox {
        self + (-o)
    }
}

impl Mul for ComplexBox {
    type Output = ComplexBox;
    fn mul(self, o: ComplexBox) -> ComplexBox {
        let bits = self.bits.min(o.bits);
        let (ac_lo, ac_hi) = interval_mul((&self.re_lo, &self.re_hi), (&o.re_lo, &o.re_hi));
        let (bd_lo, bd_hi) = interval_mul((&self.im_lo, &self.im_hi), (&o.im_lo, &o.im_hi));
        let (ad_lo, ad_hi) = interval_mul((&self.re_lo, &self.re_hi), (&o.im_lo, &o.im_hi));
        let (bc_lo, bc_hi) = interval_mul((&self.im_lo, &self.im_hi), (&o.re_lo, &o.re_hi));
        ComplexBox::new(ac_lo - bd_hi, ac_hi - bd_lo, ad_lo + bc_lo, ad_hi + bc_hi, bits)
    }
}

impl fmt::Debug for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.midpoint_f64();
        let w = self.width().to_f64().unwrap_or(f64::NAN);
        write!(f, "({re:.12} + {im:.12}i) ± {w:.1e}")
    }
}

impl fmt::Display for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `atan(1/k)` as a (lower, upper) pair accurate to `2^-(bits+8)`.
fn atan_inv(k: u64, bits: u32) -> (BigRational, BigRational) {
    let eps = BigRational::new(BigInt::one(), pow2(bits + 8));
    let x = BigRational::new(BigInt::one(), BigInt::from(k));
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = BigRational::zero();
    let mut n: u64 = 0;
    loop {
        let term = &power / BigRational::from_integer(BigInt::from(2 * n + 1));
        if n % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power = &power * &x2;
        n += 1;
        // alternating series with decreasing terms: the tail is bounded by the next term
        let next = &power / BigRational::from_integer(BigInt::from(2 * n + 1));
        if next < eps {
            return (&sum - &next, &sum + &next);
        }
    }
}

/// Enclosure of `pi` via Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_enclosure(bits: u32) -> (BigRational, BigRational) {
    let (a_lo, a_hi) = atan_inv(5, bits);
    let (b_lo, b_hi) = atan_inv(239, bits);
    let sixteen = BigRational::from_integer(BigInt::from(16));
    let four = BigRational::from_integer(BigInt::from(4));
    (
        &sixteen * a_lo - &four * &b_hi,
        sixteen * a_hi - four * b_lo,
    )
}

/// Taylor enclosure of `(cos t, sin t)` at a rational point, as `(value, error bound)`.
fn cos_sin_at(t: &BigRational, bits: u32) -> ((BigRational, BigRational), BigRational) {
    let eps = BigRational::new(BigInt::one(), pow2(bits + 8));
    let mut cos = BigRational::zero();
    let mut sin = BigRational::zero();
    let mut term = BigRational::one(); // t^n / n!
    let mut n: u64 = 0;
    loop {
        match n % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        n += 1;
        term = &term * t / BigRational::from_integer(BigInt::from(n));
        // Lagrange remainder after degree n-1 is at most |t|^n / n!
        if n > 2 && term.abs() < eps {
            return ((cos, sin), term.abs());
        }
    }
}

/// Box containing `exp(2 pi i k / 7)`. Enclosures are computed once per precision.
pub fn root_of_unity_box(k: i64, bits: u32) -> ComplexBox {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<ComplexBox>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    let roots = guard.entry(bits).or_insert_with(|| {
        let pi = pi_enclosure(bits);
        (0..7).map(|j| root_box_with_pi(j, bits, &pi)).collect()
    });
    roots[k.rem_euclid(7) as usize].clone()
}

fn root_box_with_pi(k: i64, bits: u32, pi: &(BigRational, BigRational)) -> ComplexBox {
    let k = k.rem_euclid(7);
    let (pi_lo, pi_hi) = pi;
    let scale = BigRational::new(BigInt::from(2 * k), BigInt::from(7));
    let lo = pi_lo * &scale;
    let hi = pi_hi * &scale;
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    let radius = (&hi - &lo) / BigRational::from_integer(BigInt::from(2));
    let ((c, s), rem) = cos_sin_at(&mid, bits);
    // cos and sin are 1-Lipschitz, so the angle uncertainty widens by its radius
    let err = rem + radius;
    ComplexBox::new(&c - &err, &c + &err, &s - &err, &s + &err, bits)
}

impl CycInt {
    /// Enclosure of the value under `mu -> exp(2 pi i / 7)`.
    pub fn to_box(&self, bits: u32) -> ComplexBox {
        let zero = ComplexBox::from_int(&BigInt::zero(), bits);
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(zero, |acc, (k, c)| acc + ComplexBox::from_int(c, bits) * root_of_unity_box(k as i64, bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use proptest::prelude::*;

    #[test]
    fn pi_is_enclosed() {
        let (lo, hi) = pi_enclosure(DEFAULT_BITS);
        assert!(lo.to_f64().unwrap() <= std::f64::consts::PI);
        assert!(hi.to_f64().unwrap() >= std::f64::consts::PI);
        assert!((&hi - &lo) < BigRational::new(BigInt::from(1), pow2(100)));
    }

    #[test]
    fn mu_box_matches_float() {
        let b = CycInt::mu().to_box(64);
        let (re, im) = b.midpoint_f64();
        let t = 2.0 * std::f64::consts::PI / 7.0;
        assert!((re - t.cos()).abs() < 1e-12);
        assert!((im - t.sin()).abs() < 1e-12);
    }

    #[test]
    fn eta_relation_box_contains_zero() {
        let e = CycInt::eta();
        let expr = e.clone() * e.clone() + e + CycInt::from_int(2);
        assert!(expr.is_zero());
        // evaluate term by term so the box arithmetic itself is exercised
        let eb = CycInt::eta().to_box(DEFAULT_BITS);
        let v = eb.clone() * eb.clone() + eb + ComplexBox::from_int(&BigInt::from(2), DEFAULT_BITS);
        assert!(v.contains_zero());
        assert!(v.width() < BigRational::new(BigInt::from(1), pow2(90)));
    }

    #[test]
    fn eta_imaginary_part_is_sqrt7_over_2() {
        let b = CycInt::eta().to_box(DEFAULT_BITS);
        let (re, im) = b.midpoint_f64();
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 7f64.sqrt() / 2.0).abs() < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn product_box_contains_exact_product(a in proptest::array::uniform6(-5i64..5), b in proptest::array::uniform6(-5i64..5)) {
            let x = CycInt::from_ints(a);
            let y = CycInt::from_ints(b);
            let exact = (x.clone() * y.clone()).to_box(96);
            let boxed = x.to_box(96) * y.to_box(96);
            let diff = boxed - exact;
            prop_assert!(diff.contains_zero());
        }
    }
}
