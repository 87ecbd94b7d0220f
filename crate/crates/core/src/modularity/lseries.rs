//! Euler factors, Dirichlet coefficients and external q-expansions.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cyclotomic::{QuadInt, QuadOrder};
use crate::error::ModularityError;
use crate::modularity::elliptic::FrobeniusData;
use crate::report::int_json;

/// `1 - b_p T + p^3 T^2` with `b_p = a_p^3 - 3 p a_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactorH3 {
    pub p: u64,
    pub b_p: BigInt,
}

impl EulerFactorH3 {
    pub fn from_trace(p: u64, a_p: i64) -> Self {
        let a = BigInt::from(a_p);
        let b_p = &a * &a * &a - BigInt::from(3 * p) * &a;
        EulerFactorH3 { p, b_p }
    }

    /// Coefficients `[1, -b_p, p^3]` of the factor in `T`.
    pub fn coefficients(&self) -> [BigInt; 3] {
        [BigInt::from(1), -self.b_p.clone(), BigInt::from(self.p).pow(3)]
    }

    pub fn local(&self) -> LocalFactor {
        LocalFactor::Good {
            trace: self.b_p.clone(),
            weight: 3,
        }
    }
}

pub fn euler_factor_h3(fd: &FrobeniusData) -> EulerFactorH3 {
    EulerFactorH3::from_trace(fd.p, fd.a_p)
}

/// Whether `pi^3` has trace `b_p` and norm `p^3`, i.e. the cubes of the
/// weight-one Frobenius roots are the roots of the factor.
pub fn cubes_match<O: QuadOrder>(factor: &EulerFactorH3, pi: &QuadInt<O>) -> bool {
    let c = pi.clone() * pi.clone() * pi.clone();
    c.trace() == factor.b_p && c.norm() == BigInt::from(factor.p).pow(3)
}

/// Local factor of a Dirichlet series at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalFactor {
    /// `1 - trace T + p^weight T^2`.
    Good {
        #[serde(serialize_with = "ser_int")]
        trace: BigInt,
        weight: u32,
    },
    /// `1 - c T`.
    Linear {
        #[serde(serialize_with = "ser_int")]
        c: BigInt,
    },
    /// The factor `1`.
    Trivial,
}

fn ser_int<S: serde::Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    int_json(n).serialize(s)
}

impl LocalFactor {
    pub fn weight_two(a_p: i64) -> Self {
        LocalFactor::Good {
            trace: BigInt::from(a_p),
            weight: 1,
        }
    }

    fn prime_powers(&self, p: u64, k_max: u32) -> Vec<BigInt> {
        let mut out = vec![BigInt::from(1)];
        for k in 1..=k_max as usize {
            let next = match self {
                LocalFactor::Good { trace, weight } => {
                    let prev2 = if k >= 2 { out[k - 2].clone() } else { BigInt::from(0) };
                    trace * &out[k - 1] - BigInt::from(p).pow(*weight) * prev2
                }
                LocalFactor::Linear { c } => c * &out[k - 1],
                LocalFactor::Trivial => BigInt::from(0),
            };
            out.push(next);
        }
        out
    }
}

/// Coefficients `a_1 .. a_n` of the product of the local factors; index 0
/// of the result is `a_1`.
pub fn dirichlet_coefficients(factors: &BTreeMap<u64, LocalFactor>, n: u64) -> Result<Vec<BigInt>, ModularityError> {
    let n = n as usize;
    let mut spf = vec![0usize; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            for j in (i..=n).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i;
                }
            }
        }
    }
    let mut powers: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for p in (2..=n).filter(|&i| spf[i] == i) {
        let f = factors.get(&(p as u64)).ok_or(ModularityError::MissingPrime(p as u64))?;
        let k_max = (n as f64).log(p as f64).floor() as u32 + 1;
        powers.insert(p, f.prime_powers(p as u64, k_max));
    }
    let mut a = vec![BigInt::from(0); n + 1];
    if n >= 1 {
        a[1] = BigInt::from(1);
    }
    for m in 2..=n {
        let p = spf[m];
        let (mut rest, mut k) = (m, 0);
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        a[m] = &powers[&p][k] * &a[rest];
    }
    Ok(a.into_iter().skip(1).collect())
}

/// Reads one integer per line, 1-indexed; blank lines and `#` comments are skipped.
pub fn read_qexpansion(text: &str) -> Result<Vec<BigInt>, ModularityError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            l.trim()
                .parse::<BigInt>()
                .map_err(|e| ModularityError::QExpansion(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

pub fn read_qexpansion_file(path: &Path) -> Result<Vec<BigInt>, ModularityError> {
    let text = std::fs::read_to_string(path).map_err(|e| ModularityError::QExpansion(format!("{}: {e}", path.display())))?;
    read_qexpansion(&text)
}
