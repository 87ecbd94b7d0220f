//! Frobenius traces of the CM elliptic curves, the Grossencharacter
//! calibration, the cubed Euler factors, and the Klein quartic comparison.

pub mod elliptic;
pub mod field;
pub mod hecke;
pub mod lseries;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::cyclotomic::{Eta, Omega};
use crate::klein::points::{count_points_quartic, within_weil_bound};
use crate::report::{PrimeRow, VerificationReport};
use crate::ring::{is_prime, primes_up_to};

pub use elliptic::{count_points, frobenius_trace, EllipticKind, FrobeniusData, SplitInfo};
pub use hecke::{calibrate_grossencharacter, hecke_coefficients, CongruenceRule, RamifiedResidue};
pub use lseries::{dirichlet_coefficients, euler_factor_h3, read_qexpansion, EulerFactorH3, LocalFactor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularityOptions {
    pub p_max: u64,
    /// Split primes up to this bound train the calibration; the rest test it.
    pub calibration_split: u64,
    pub klein_max: u64,
    pub qexp: Option<Vec<BigInt>>,
}

impl Default for ModularityOptions {
    fn default() -> Self {
        ModularityOptions {
            p_max: 200,
            calibration_split: 50,
            klein_max: 100,
            qexp: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KleinTraceRow {
    pub p: u64,
    pub t_p: i64,
    pub three_a_p: i64,
    pub equal: bool,
}

/// `t_p = p + 1 - #K(F_p)` next to `3 a_p` of the eta curve. `None` at
/// primes where either curve has bad reduction.
pub fn klein_jacobian_trace_check(p: u64) -> Option<KleinTraceRow> {
    if p == 7 {
        return None;
    }
    let fd = frobenius_trace(EllipticKind::EtaWeierstrass, p).ok()?;
    let n = count_points_quartic(p).ok()?;
    let t_p = p as i64 + 1 - n as i64;
    Some(KleinTraceRow {
        p,
        t_p,
        three_a_p: 3 * fd.a_p,
        equal: t_p == 3 * fd.a_p,
    })
}

/// Per-model results, kept for the report and for the q-expansion comparison.
struct ModelRun {
    kind: EllipticKind,
    bad: Vec<u64>,
    h1: Vec<BigInt>,
    h3: Vec<BigInt>,
}

fn model_section<O: RamifiedResidue>(kind: EllipticKind, opts: &ModularityOptions, rep: &mut VerificationReport) -> ModelRun {
    let m = kind.name();
    let id = |s: &str| format!("modularity.{m}.{s}");
    let results: Vec<(u64, Option<FrobeniusData>)> = primes_up_to(opts.p_max)
        .into_par_iter()
        .map(|p| (p, frobenius_trace(kind, p).ok()))
        .collect();
    let bad: Vec<u64> = results.iter().filter(|(_, fd)| fd.is_none()).map(|(p, _)| *p).collect();
    let data: Vec<FrobeniusData> = results.into_iter().filter_map(|(_, fd)| fd).collect();

    rep.reported(
        &id("bad_primes"),
        "primes where the model is singular; excluded from every identity",
        json!({"bad": bad}),
    );
    let hasse_fail: Vec<u64> = data.iter().filter(|d| !d.hasse).map(|d| d.p).collect();
    rep.check(
        &id("hasse"),
        "a_p^2 <= 4p at every good prime",
        hasse_fail.is_empty(),
        json!({"good_primes": data.len(), "violations": hasse_fail}),
    );
    let inert: Vec<&FrobeniusData> = data.iter().filter(|d| d.split == SplitInfo::Inert).collect();
    let inert_fail: Vec<u64> = inert.iter().filter(|d| !d.inert_zero).map(|d| d.p).collect();
    rep.check(
        &id("inert_zero"),
        "a_p = 0 at every good prime inert in the CM field",
        inert_fail.is_empty(),
        json!({"inert_primes": inert.len(), "violations": inert_fail}),
    );

    let split: Vec<(u64, i64)> = data
        .iter()
        .filter(|d| d.split != SplitInfo::Inert)
        .map(|d| (d.p, d.a_p))
        .collect();
    let (train, test): (Vec<_>, Vec<_>) = split.iter().partition(|(p, _)| *p <= opts.calibration_split);
    let calibration = calibrate_grossencharacter::<O>(&train);
    let rule = match &calibration {
        Ok((rows, rule)) => {
            rep.check(
                &id("calibration"),
                "one associate class has trace a_p at each training prime, selected by one congruence rule",
                rows.iter().all(|r| r.classes == 1),
                json!({"rule": rule, "training": rows}),
            );
            Some(rule.clone())
        }
        Err(e) => {
            rep.check(
                &id("calibration"),
                "one associate class has trace a_p at each training prime, selected by one congruence rule",
                false,
                json!({"error": e.to_string()}),
            );
            None
        }
    };

    let mut selected: BTreeMap<u64, String> = BTreeMap::new();
    let mut cube_fail = Vec::new();
    if let Some(rule) = &rule {
        let mismatches: Vec<serde_json::Value> = test
            .iter()
            .filter_map(|&(p, a_p)| {
                let pred = rule.predict(p);
                (pred != Some(a_p)).then(|| json!({"p": p, "a_p": a_p, "predicted": pred}))
            })
            .collect();
        rep.check(
            &id("calibration_holdout"),
            "the congruence rule predicts a_p at every held-out split prime",
            mismatches.is_empty(),
            json!({"held_out": test.len(), "mismatches": mismatches}),
        );
        for &(p, a_p) in &split {
            let chosen = rule.select(p);
            let f = EulerFactorH3::from_trace(p, a_p);
            match chosen.first() {
                Some(pi) if lseries::cubes_match(&f, pi) => {
                    selected.insert(p, pi.to_string());
                }
                _ => cube_fail.push(p),
            }
        }
        rep.check(
            &id("h3_cubes"),
            "b_p = a_p^3 - 3p a_p equals the trace of chi(P)^3 at every split prime",
            cube_fail.is_empty(),
            json!({"split_primes": split.len(), "violations": cube_fail}),
        );
    }

    let mut ext = Vec::new();
    for p in [2u64, 3, 5] {
        let Some(fd) = data.iter().find(|d| d.p == p) else { continue };
        let f = euler_factor_h3(fd);
        let n3 = count_points(kind, p * p * p).ok();
        let direct = n3.map(|n| BigInt::from(p.pow(3) + 1) - BigInt::from(n));
        ext.push(json!({
            "p": p,
            "b_p": f.b_p.to_string(),
            "N_p3": n3,
            "ok": direct.as_ref() == Some(&f.b_p),
        }));
    }
    rep.check(
        &id("h3_extension_count"),
        "b_p = p^3 + 1 - #E(F_{p^3}) at the good primes among 2, 3, 5",
        !ext.is_empty() && ext.iter().all(|e| e["ok"] == json!(true)),
        json!({"primes": ext}),
    );

    let mut f1 = BTreeMap::new();
    let mut f3 = BTreeMap::new();
    for p in primes_up_to(opts.p_max) {
        match data.iter().find(|d| d.p == p) {
            Some(d) => {
                f1.insert(p, LocalFactor::weight_two(d.a_p));
                f3.insert(p, euler_factor_h3(d).local());
            }
            None => {
                f1.insert(p, LocalFactor::Trivial);
                f3.insert(p, LocalFactor::Trivial);
            }
        }
    }
    let h1 = dirichlet_coefficients(&f1, opts.p_max).unwrap_or_default();
    let h3 = dirichlet_coefficients(&f3, opts.p_max).unwrap_or_default();
    if let Some(rule) = &rule {
        let ram = O::DISC;
        let keep = |n: u64| n % ram != 0 && bad.iter().all(|b| n % b != 0);
        for (name, power, series) in [("hecke_h1", 1u32, &h1), ("hecke_h3", 3, &h3)] {
            let hecke = hecke_coefficients(rule, opts.p_max, power, keep);
            let mismatched: Vec<u64> = hecke
                .iter()
                .filter(|(n, v)| v.as_ref() != series.get(**n as usize - 1))
                .map(|(n, _)| *n)
                .collect();
            rep.check(
                &id(name),
                if power == 1 {
                    "the Euler product of the weight-2 factors equals the sum of chi over ideals of norm n"
                } else {
                    "the Euler product of the cubed factors equals the sum of chi^3 over ideals of norm n"
                },
                mismatched.is_empty(),
                json!({"compared": hecke.len(), "mismatches": mismatched}),
            );
        }
    }

    for d in &data {
        let f = euler_factor_h3(d);
        let mut failed = Vec::new();
        if !d.hasse {
            failed.push("hasse");
        }
        if !d.inert_zero {
            failed.push("inert_zero");
        }
        if cube_fail.contains(&d.p) {
            failed.push("h3_cubes");
        }
        rep.primes.push(PrimeRow {
            model: m.to_string(),
            p: d.p,
            n_p: d.n_p,
            a_p: d.a_p,
            split: match d.split {
                SplitInfo::Inert => "inert".into(),
                SplitInfo::Split { .. } => "split".into(),
            },
            pi: selected.get(&d.p).cloned().unwrap_or_else(|| "-".into()),
            b_p: f.b_p.to_string(),
            checks: if failed.is_empty() { "ok".into() } else { failed.join("+") },
        });
    }
    ModelRun { kind, bad, h1, h3 }
}

fn klein_section(opts: &ModularityOptions, rep: &mut VerificationReport) {
    let bound = opts.klein_max.min(opts.p_max);
    let rows: Vec<KleinTraceRow> = primes_up_to(bound)
        .into_par_iter()
        .filter_map(klein_jacobian_trace_check)
        .collect();
    let equal: Vec<u64> = rows.iter().filter(|r| r.equal).map(|r| r.p).collect();
    let zero_trace: Vec<u64> = rows.iter().filter(|r| r.t_p == 0).map(|r| r.p).collect();
    let equal_iff_one_mod_seven = rows.iter().all(|r| r.equal == (r.p % 7 == 1 || r.three_a_p == 0));
    let weil: Vec<(u64, bool)> = primes_up_to(bound)
        .into_par_iter()
        .filter(|&p| p != 7)
        .map(|p| (p, count_points_quartic(p).is_ok_and(|n| within_weil_bound(p, n))))
        .collect();
    rep.check(
        "modularity.klein_weil",
        "|p + 1 - #K(F_p)| <= 6 sqrt(p) at every prime p != 7",
        weil.iter().all(|(_, ok)| *ok),
        json!({"primes": weil.len(), "violations": weil.iter().filter(|(_, ok)| !ok).map(|(p, _)| p).collect::<Vec<_>>()}),
    );
    rep.reported(
        "modularity.klein_trace",
        "p + 1 - #K(F_p) against 3 a_p of the eta curve at good primes",
        json!({
            "rows": rows,
            "equal_at": equal,
            "zero_klein_trace_at": zero_trace,
            "equal_exactly_when_p_is_1_mod_7_or_a_p_is_0": equal_iff_one_mod_seven,
        }),
    );
}

fn qexp_section(runs: &[ModelRun], coeffs: &[BigInt], rep: &mut VerificationReport) {
    let mut cmp = serde_json::Map::new();
    for run in runs {
        let ram = run.kind.cm_field();
        let disc = match ram {
            crate::cyclotomic::DiscTag::Omega => 3,
            crate::cyclotomic::DiscTag::Eta => 7,
        };
        for (label, series) in [("h1", &run.h1), ("h3", &run.h3)] {
            let idx: Vec<usize> = (1..=coeffs.len().min(series.len()))
                .filter(|&n| n as u64 % disc != 0 && run.bad.iter().all(|b| n as u64 % b != 0))
                .collect();
            let mismatches: Vec<usize> = idx.iter().copied().filter(|&n| coeffs[n - 1] != series[n - 1]).collect();
            cmp.insert(
                format!("{}_{label}", run.kind.name()),
                json!({"compared": idx.len(), "mismatches": mismatches.len(), "first_mismatch": mismatches.first()}),
            );
        }
    }
    rep.reported(
        "modularity.qexp_comparison",
        "external q-expansion against each computed series at indices coprime to the bad primes",
        serde_json::Value::Object(cmp),
    );
}

pub fn run_modularity_suite(opts: &ModularityOptions) -> VerificationReport {
    let mut rep = VerificationReport::new("modularity");
    let runs = vec![
        model_section::<Omega>(EllipticKind::OmegaCubic, opts, &mut rep),
        model_section::<Eta>(EllipticKind::EtaWeierstrass, opts, &mut rep),
    ];
    klein_section(opts, &mut rep);
    if let Some(q) = &opts.qexp {
        qexp_section(&runs, q, &mut rep);
    }
    rep
}

/// Whether `p` is a prime at which `kind` has good reduction.
pub fn is_good(kind: EllipticKind, p: u64) -> bool {
    is_prime(p) && elliptic::is_good_prime(kind, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn klein_rows_at_small_primes() {
        let r = klein_jacobian_trace_check(29).unwrap();
        // 29 + 1 - 24 and 3 a_29 = 6
        assert_eq!((r.t_p, r.three_a_p, r.equal), (6, 6, true));
        let r = klein_jacobian_trace_check(11).unwrap();
        assert_eq!((r.t_p, r.three_a_p), (0, 12));
        assert!(klein_jacobian_trace_check(7).is_none());
        assert!(klein_jacobian_trace_check(2).is_none());
    }

    #[test]
    fn default_suite_passes() {
        let rep = run_modularity_suite(&ModularityOptions::default());
        assert!(!rep.has_failures(), "{:#?}", rep.failures());
        assert_eq!(rep.claim("modularity.klein_trace").unwrap().status, Status::Reported);
        assert!(rep.primes.iter().all(|r| r.checks == "ok"));
    }

    #[test]
    fn qexp_matching_own_series() {
        let opts = ModularityOptions {
            p_max: 60,
            ..ModularityOptions::default()
        };
        let base = run_modularity_suite(&opts);
        assert!(base.claim("modularity.qexp_comparison").is_none());
        let mut f = BTreeMap::new();
        for p in primes_up_to(60) {
            let fd = frobenius_trace(EllipticKind::OmegaCubic, p).ok();
            f.insert(p, fd.map_or(LocalFactor::Trivial, |d| LocalFactor::weight_two(d.a_p)));
        }
        let q = dirichlet_coefficients(&f, 60).unwrap();
        let rep = run_modularity_suite(&ModularityOptions { qexp: Some(q), ..opts });
        let c = rep.claim("modularity.qexp_comparison").unwrap();
        assert_eq!(c.payload["omega_h1"]["mismatches"], 0);
        assert!(c.payload["eta_h1"]["mismatches"].as_u64().unwrap() > 0);
    }
}
