//! Sparse multivariate polynomials, dense univariate polynomials over a field
//! and univariate rational functions in lowest terms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::ring::{Field, Ring};

/// Polynomial in `nvars` variables. Monomials are exponent vectors compared
/// lexicographically, so the last map entry is the lex-leading term.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<R> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, R::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, R::one())
    }

    pub fn monomial(exps: Vec<u32>, c: R) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<(&Vec<u32>, &R)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn add_term(&mut self, exps: Vec<u32>, c: R) {
        assert_eq!(exps.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * s.clone())))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        MPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c.clone() * R::from_int(e[i] as i64))
            }),
        )
    }

    /// Evaluates at a point of the coefficient ring.
    pub fn eval(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.nvars);
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t * x.pow(k as u64);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes polynomial `images[i]` (all in a common ring) for variable `i`.
    pub fn substitute(&self, images: &[MPoly<R>]) -> MPoly<R> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut cache: Vec<Vec<MPoly<R>>> = images.iter().map(|p| vec![MPoly::one(p.nvars), p.clone()]).collect();
        let mut acc = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().expect("nonempty").clone() * images[i].clone();
                    cache[i].push(next);
                }
                if k > 0 {
                    t = t * cache[i][k as usize].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl<F: Field> MPoly<F> {
    /// Remainder of multivariate division by `divisors` in lex order. When the
    /// divisors form a Groebner basis (e.g. a single polynomial) the remainder
    /// is zero exactly on ideal members.
    pub fn reduce(&self, divisors: &[MPoly<F>]) -> MPoly<F> {
        let leads: Vec<(Vec<u32>, F)> = divisors
            .iter()
            .map(|d| {
                let (e, c) = d.leading().expect("nonzero divisor");
                (e.clone(), c.inv().expect("nonzero leading coefficient"))
            })
            .collect();
        let mut p = self.clone();
        let mut rem = MPoly::zero(self.nvars);
        while let Some((e, c)) = p.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let hit = leads
                .iter()
                .enumerate()
                .find(|(_, (le, _))| le.iter().zip(&e).all(|(a, b)| a <= b));
            match hit {
                Some((i, (le, linv))) => {
                    let shift: Vec<u32> = e.iter().zip(le).map(|(a, b)| a - b).collect();
                    let factor = MPoly::monomial(shift, c * linv.clone());
                    p = p - factor * divisors[i].clone();
                }
                None => {
                    p.terms.remove(&e);
                    rem.add_term(e, c);
                }
            }
        }
        rem
    }
}

impl<R: Ring> Add for MPoly<R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<R: Ring> Neg for MPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly::from_terms(self.nvars, self.terms.into_iter().map(|(e, c)| (e, -c)))
    }
}

impl<R: Ring> Sub for MPoly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Mul for MPoly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = MPoly::zero(self.nvars.max(o.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }
}

impl<F: Field> UPoly<F> {
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.leading().expect("nonzero").inv().expect("field");
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().expect("nonempty").clone() * inv.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Ring::is_zero) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero")),
        }
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Rational roots of a nonzero polynomial with multiplicities, in increasing
/// order, together with the cofactor left after dividing them out.
pub fn rational_roots(f: &UPoly<BigRational>) -> (Vec<(BigRational, usize)>, UPoly<BigRational>) {
    let mut rest = f.clone();
    let mut roots = Vec::new();
    let mut zero_mult = 0;
    while rest.coeffs.first().is_some_and(Ring::is_zero) {
        rest = UPoly::new(rest.coeffs[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((BigRational::zero(), zero_mult));
    }
    if rest.degree().unwrap_or(0) > 0 {
        let lcm = rest.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = rest.coeffs.iter().map(|c| (c * BigRational::from(lcm.clone())).to_integer()).collect();
        let lead = ints.last().expect("nonzero").abs();
        let tail = ints[0].abs();
        for num in divisors(&tail) {
            for den in divisors(&lead) {
                for cand in [BigRational::new(num.clone(), den.clone()), -BigRational::new(num.clone(), den.clone())] {
                    let lin = UPoly::new(vec![-cand.clone(), BigRational::one()]);
                    let mut mult = 0;
                    loop {
                        let (q, r) = rest.divrem(&lin);
                        if !r.is_zero() || rest.degree().unwrap_or(0) == 0 {
                            break;
                        }
                        rest = q;
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((cand, mult));
                    }
                }
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, rest)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let co = n / &d;
            if co != d {
                out.push(co);
            }
        }
        d += 1;
    }
    out
}

impl<F: Ring> Add for UPoly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                    let b = o.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl<F: Ring> Neg for UPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Ring> Sub for UPoly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Ring> Mul for UPoly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::new(vec![]);
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<F: Ring> Ring for UPoly<F> {
    fn zero() -> Self {
        Self::new(vec![])
    }
    fn one() -> Self {
        Self::new(vec![F::one()])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_int(n: i64) -> Self {
        Self::new(vec![F::from_int(n)])
    }
}

impl<F: Ring> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})X"),
                _ => format!("({c})X^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rational function `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn<F> {
    num: UPoly<F>,
    den: UPoly<F>,
}

impl<F: Field> RatFn<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFn {
                num,
                den: UPoly::one(),
            };
        }
        let g = UPoly::gcd(&num, &den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let l = den.leading().expect("nonzero").inv().expect("field");
        RatFn {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn poly(p: UPoly<F>) -> Self {
        Self::new(p, UPoly::one())
    }

    pub fn x() -> Self {
        Self::poly(UPoly::x())
    }

    pub fn constant(c: F) -> Self {
        Self::poly(UPoly::constant(c))
    }

    pub fn num(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<F> {
        &self.den
    }

    /// The constant value, if this function is constant.
    pub fn as_constant(&self) -> Option<F> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(F::zero()),
            (Some(0), Some(0)) => Some(self.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative() * self.den.clone() - self.num.clone() * self.den.derivative();
        Self::new(n, self.den.clone() * self.den.clone())
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &RatFn<F>) -> RatFn<F> {
        let eval = |p: &UPoly<F>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(RatFn::zero(), |acc, c| acc * inner.clone() + RatFn::constant(c.clone()))
        };
        eval(&self.num).div(&eval(&self.den)).expect("composition has a pole")
    }
}

impl<F: Field> Add for RatFn<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return RatFn::new(self.num + o.num, self.den);
        }
        RatFn::new(
            self.num * o.den.clone() + o.num * self.den.clone(),
            self.den * o.den,
        )
    }
}

impl<F: Field> Neg for RatFn<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFn {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Sub for RatFn<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Mul for RatFn<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        RatFn::new(self.num * o.num, self.den * o.den)
    }
}

impl<F: Field> Ring for RatFn<F> {
    fn zero() -> Self {
        RatFn::poly(UPoly::zero())
    }
    fn one() -> Self {
        RatFn::poly(UPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_int(n: i64) -> Self {
        RatFn::constant(F::from_int(n))
    }
}

impl<F: Field> Field for RatFn<F> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFn::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl<F: Field> fmt::Display for RatFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

impl<F: Ring> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Debug for RatFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn up(c: &[i64]) -> UPoly<Q> {
        UPoly::new(c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn lex_reduction_single_divisor() {
        // (x^2 - y) * (x + 1) reduces to zero modulo x^2 - y
        let x = MPoly::<Q>::var(2, 0);
        let y = MPoly::<Q>::var(2, 1);
        let f = x.clone() * x.clone() - y.clone();
        let g = f.clone() * (x.clone() + MPoly::one(2));
        assert!(g.reduce(std::slice::from_ref(&f)).is_zero());
        let r = (x.clone() * x.clone() * x.clone()).reduce(&[f]);
        assert_eq!(r, x * y);
    }

    #[test]
    fn substitution_matches_evaluation() {
        let x = MPoly::<Q>::var(2, 0);
        let y = MPoly::<Q>::var(2, 1);
        let p = x.clone() * x.clone() * y.clone() + MPoly::constant(2, rat(3, 1));
        let swapped = p.substitute(&[y.clone(), x.clone()]);
        assert_eq!(swapped.eval(&[rat(2, 1), rat(5, 1)]), p.eval(&[rat(5, 1), rat(2, 1)]));
    }

    #[test]
    fn ratfn_lowest_terms() {
        let f = RatFn::new(up(&[-1, 0, 1]), up(&[2, 2]));
        // (x^2-1)/(2x+2) = (x-1)/2
        assert_eq!(f.den(), &up(&[1]));
        assert_eq!(f.num(), &UPoly::new(vec![rat(-1, 2), rat(1, 2)]));
    }

    #[test]
    fn mobius_of_order_three() {
        // x -> 1/(1-x) has order 3 under composition
        let m = RatFn::new(up(&[1]), up(&[1, -1]));
        let m3 = m.compose(&m).compose(&m);
        assert_eq!(m3, RatFn::x());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx 1/x = -1/x^2
        let f = RatFn::new(up(&[1]), up(&[0, 1]));
        assert_eq!(f.derivative(), RatFn::new(up(&[-1]), up(&[0, 0, 1])));
    }

    proptest! {
        #[test]
        fn divrem_identity(a in proptest::collection::vec(-9i64..9, 1..7), b in proptest::collection::vec(-9i64..9, 1..4)) {
            let a = up(&a);
            let b = up(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b);
            prop_assert_eq!(q * b.clone() + r.clone(), a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn ratfn_field_axioms(a in proptest::collection::vec(-5i64..5, 1..4), b in proptest::collection::vec(-5i64..5, 1..4)) {
            let f = RatFn::poly(up(&a));
            let g = RatFn::new(up(&[1, 1]), up(&b).add(up(&[0, 0, 0, 1])));
            let s = f.clone() * g.clone();
            if let Some(gi) = g.inv() {
                prop_assert_eq!(s.clone() * gi, f.clone());
            }
            prop_assert_eq!(f.clone() + g.clone() - g, f);
        }
    }
}
