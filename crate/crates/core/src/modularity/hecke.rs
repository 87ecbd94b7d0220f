//! Calibration of the Grossencharacter: choosing, for each split prime,
//! the associate of a prime element whose trace is the Frobenius trace, and
//! the congruence rule modulo the ramified prime that makes the choice.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::cyclotomic::quad::to_i64;
use crate::cyclotomic::{associates, factor_rational_prime, Eta, Omega, QuadInt, QuadOrder, SplitResult};
use crate::error::ModularityError;
use crate::ring::Ring;

/// Residues modulo the ramified prime of the order.
pub trait RamifiedResidue: QuadOrder {
    const MODULUS: &'static str;

    /// Residue class index; `None` when `x` lies in the ramified prime.
    fn residue(x: &QuadInt<Self>) -> Option<u32>;

    fn residue_label(r: u32) -> String;
}

impl RamifiedResidue for Omega {
    const MODULUS: &'static str = "3";

    fn residue(x: &QuadInt<Self>) -> Option<u32> {
        let a = to_i64(&x.a).rem_euclid(3) as u32;
        let b = to_i64(&x.b).rem_euclid(3) as u32;
        // a + b w lies in (1 - w) iff a + b = 0 mod 3
        ((a + b) % 3 != 0).then_some(a + 3 * b)
    }

    fn residue_label(r: u32) -> String {
        format!("{}", QuadInt::<Omega>::new(r % 3, r / 3))
    }
}

impl RamifiedResidue for Eta {
    const MODULUS: &'static str = "2n+1";

    fn residue(x: &QuadInt<Self>) -> Option<u32> {
        // eta = 3 in Z[eta]/(2 eta + 1) = F_7
        let r = (to_i64(&x.a) + 3 * to_i64(&x.b)).rem_euclid(7) as u32;
        (r != 0).then_some(r)
    }

    fn residue_label(r: u32) -> String {
        r.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CalibrationRow {
    pub p: u64,
    pub a_p: i64,
    pub generator: String,
    /// Associates with trace `a_p`.
    pub matching: Vec<String>,
    /// Number of matching associates up to conjugation.
    pub classes: usize,
}

/// The set of residue classes that selects the Grossencharacter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceRule<O: RamifiedResidue> {
    residues: BTreeSet<u32>,
    _order: std::marker::PhantomData<O>,
}

impl<O: RamifiedResidue> CongruenceRule<O> {
    pub fn new(residues: BTreeSet<u32>) -> Self {
        CongruenceRule {
            residues,
            _order: std::marker::PhantomData,
        }
    }

    pub fn admits(&self, x: &QuadInt<O>) -> bool {
        O::residue(x).is_some_and(|r| self.residues.contains(&r))
    }

    pub fn labels(&self) -> Vec<String> {
        self.residues.iter().map(|&r| O::residue_label(r)).collect()
    }

    /// The admitted associates of a prime element above `p`.
    pub fn select(&self, p: u64) -> Vec<QuadInt<O>> {
        match factor_rational_prime::<O>(p) {
            Ok(SplitResult::Split(pi)) => associates(&pi).into_iter().filter(|x| self.admits(x)).collect(),
            _ => Vec::new(),
        }
    }

    /// `Tr(chi(P))` for a prime `P` above a split `p`, when the rule pins it down.
    pub fn predict(&self, p: u64) -> Option<i64> {
        let traces: BTreeSet<i64> = self.select(p).iter().map(|x| to_i64(&x.trace())).collect();
        (traces.len() == 1).then(|| *traces.iter().next().expect("one trace"))
    }
}

impl<O: RamifiedResidue> Serialize for CongruenceRule<O> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CongruenceRule", 2)?;
        st.serialize_field("modulus", O::MODULUS)?;
        st.serialize_field("residues", &self.labels())?;
        st.end()
    }
}

fn up_to_conjugation<O: QuadOrder>(xs: &[QuadInt<O>]) -> usize {
    let mut seen: Vec<QuadInt<O>> = Vec::new();
    for x in xs {
        if !seen.contains(x) && !seen.contains(&x.conj()) {
            seen.push(x.clone());
        }
    }
    seen.len()
}

/// Finds the associates with trace `a_p` for each split prime and the
/// residue classes that single them out. Fails when some non-matching
/// associate shares a class with a matching one.
pub fn calibrate_grossencharacter<O: RamifiedResidue>(
    primes: &[(u64, i64)],
) -> Result<(Vec<CalibrationRow>, CongruenceRule<O>), ModularityError> {
    let mut rows = Vec::new();
    let mut good: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    let mut bad: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for &(p, a_p) in primes {
        let pi = match factor_rational_prime::<O>(p)? {
            SplitResult::Split(pi) => pi,
            SplitResult::Inert => return Err(ModularityError::NoConsistentRule(format!("{p} is inert"))),
        };
        let all = associates(&pi);
        let target = BigInt::from(a_p);
        let (matching, other): (Vec<_>, Vec<_>) = all.into_iter().partition(|x| x.trace() == target);
        for (set, into) in [(&matching, &mut good), (&other, &mut bad)] {
            for x in set {
                let r = O::residue(x).ok_or(ModularityError::BadReduction(p))?;
                into.entry(r).or_default().push(p);
            }
        }
        rows.push(CalibrationRow {
            p,
            a_p,
            generator: pi.to_string(),
            classes: up_to_conjugation(&matching),
            matching: matching.iter().map(ToString::to_string).collect(),
        });
    }
    let clashes: Vec<String> = good
        .keys()
        .filter_map(|r| {
            bad.get(r)
                .map(|ps| format!("class {} also holds wrong associates at {:?}", O::residue_label(*r), ps))
        })
        .collect();
    if !clashes.is_empty() {
        return Err(ModularityError::NoConsistentRule(clashes.join("; ")));
    }
    Ok((rows, CongruenceRule::new(good.keys().copied().collect())))
}

/// Elements of the order bucketed by norm, for norms up to `n_max`.
fn elements_by_norm<O: QuadOrder>(n_max: u64) -> BTreeMap<u64, Vec<QuadInt<O>>> {
    let mut out: BTreeMap<u64, Vec<QuadInt<O>>> = BTreeMap::new();
    // norm = (a - b/2)^2 + (C - 1/4) b^2
    let b_max = ((4 * n_max) as f64 / (4 * O::C - 1) as f64).sqrt().ceil() as i64 + 1;
    let a_max = (n_max as f64).sqrt().ceil() as i64 + b_max;
    for b in -b_max..=b_max {
        for a in -a_max..=a_max {
            let x = QuadInt::<O>::new(a, b);
            let n = to_i64(&x.norm()) as u64;
            if (1..=n_max).contains(&n) {
                out.entry(n).or_default().push(x);
            }
        }
    }
    out
}

/// `sum chi(I)^power` over the ideals `I` of norm `n` for `n <= n_max`
/// passing `keep`, where `chi(I)` is the admitted generator of `I`. Entries
/// are `None` when `n` is skipped or the sum is not a rational integer.
pub fn hecke_coefficients<O: RamifiedResidue>(
    rule: &CongruenceRule<O>,
    n_max: u64,
    power: u32,
    keep: impl Fn(u64) -> bool,
) -> BTreeMap<u64, Option<BigInt>> {
    let buckets = elements_by_norm::<O>(n_max);
    let mut out = BTreeMap::new();
    for n in 1..=n_max {
        if !keep(n) {
            continue;
        }
        let sum = buckets
            .get(&n)
            .into_iter()
            .flatten()
            .filter(|x| rule.admits(x))
            .fold(QuadInt::<O>::zero(), |acc, x| acc + x.pow(power as u64));
        out.insert(n, sum.b.is_zero().then_some(sum.a));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_rule_is_one_mod_three() {
        let train = [(7, -1), (13, 5), (19, -7), (31, -4), (37, 11), (43, 8)];
        let (rows, rule) = calibrate_grossencharacter::<Omega>(&train).unwrap();
        assert!(rows.iter().all(|r| r.classes == 1));
        assert_eq!(rule.labels(), vec!["1"]);
        assert_eq!(rule.predict(61), Some(rule.select(61)[0].trace().try_into().unwrap()));
    }

    #[test]
    fn eta_rule_is_the_squares() {
        let train = [(11, 4), (23, 8), (29, 2), (37, -6), (43, -12), (53, -10)];
        let (_, rule) = calibrate_grossencharacter::<Eta>(&train).unwrap();
        assert_eq!(rule.labels(), vec!["1", "2", "4"]);
    }

    #[test]
    fn wrong_trace_has_no_rule() {
        // flipping one sign forces a clash for the omega order
        let train = [(7, -1), (13, -5), (19, -7), (31, -4)];
        assert!(matches!(
            calibrate_grossencharacter::<Omega>(&train),
            Err(ModularityError::NoConsistentRule(_))
        ));
        assert!(calibrate_grossencharacter::<Omega>(&[(5, 0)]).is_err());
    }

    #[test]
    fn residues_are_unit_transversals() {
        // every class coprime to the ramified prime meets each unit orbit once
        fn check<O: RamifiedResidue>(rule: &CongruenceRule<O>, x: QuadInt<O>) {
            let hits = QuadInt::<O>::units().into_iter().filter(|u| rule.admits(&(u.clone() * x.clone()))).count();
            assert_eq!(hits, 1);
        }
        let w = CongruenceRule::<Omega>::new([1].into());
        for (a, b) in [(2, 3), (5, 3), (4, 1), (1, 0)] {
            check(&w, QuadInt::new(a, b));
        }
        let n = CongruenceRule::<Eta>::new([1, 2, 4].into());
        for (a, b) in [(1, 1), (3, -2), (-4, 5), (2, 0)] {
            check(&n, QuadInt::new(a, b));
        }
    }

    #[test]
    fn hecke_coefficient_at_one_and_inert_square() {
        let rule = CongruenceRule::<Omega>::new([1].into());
        let h = hecke_coefficients(&rule, 25, 1, |n| n % 3 != 0);
        assert_eq!(h[&1], Some(BigInt::from(1)));
        // the only ideal of norm 25 is (5), generated by -5 = 1 mod 3
        assert_eq!(h[&25], Some(BigInt::from(-5)));
        assert_eq!(h[&5], Some(BigInt::from(0)));
    }
}
