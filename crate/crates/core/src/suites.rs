//! Named verification suites and their composition.

use std::str::FromStr;

use serde_json::json;

use crate::cohomology::run_cohomology_suite;
use crate::cyclotomic::CycRat;
use crate::klein::curve::{coordinate_maps, local_eigenvalue, phiq_identities, tangent_divisor, FixedPoint};
use crate::klein::function_field::{pullback_differentials, CurveAut};
use crate::klein::group::{self, eval_phi4};
use crate::matrix::Matrix;
use crate::modularity::{run_modularity_suite, ModularityOptions};
use crate::quotient::run_quotients_suite;
use crate::report::VerificationReport;
use crate::ring::Ring;
use crate::torus::run_torus_suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuiteName {
    Group,
    Torus,
    Curve,
    Cohomology,
    Quotients,
    Modularity,
    All,
}

impl SuiteName {
    pub const EACH: [SuiteName; 6] = [
        SuiteName::Group,
        SuiteName::Torus,
        SuiteName::Curve,
        SuiteName::Cohomology,
        SuiteName::Quotients,
        SuiteName::Modularity,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Group => "group",
            SuiteName::Torus => "torus",
            SuiteName::Curve => "curve",
            SuiteName::Cohomology => "cohomology",
            SuiteName::Quotients => "quotients",
            SuiteName::Modularity => "modularity",
            SuiteName::All => "all",
        }
    }
}

impl FromStr for SuiteName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        SuiteName::EACH
            .into_iter()
            .chain([SuiteName::All])
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub modularity: ModularityOptions,
    /// Overrides the degree bound of both generation oracles.
    pub degree_bound: Option<u32>,
}

pub fn run_suite(name: SuiteName, opts: &SuiteOptions) -> VerificationReport {
    match name {
        SuiteName::Group => run_group_suite(),
        SuiteName::Torus => run_torus_suite(),
        SuiteName::Curve => run_curve_suite(),
        SuiteName::Cohomology => run_cohomology_suite(),
        SuiteName::Quotients => run_quotients_suite(opts.degree_bound),
        SuiteName::Modularity => run_modularity_suite(&opts.modularity),
        SuiteName::All => {
            let mut all = VerificationReport::new("all");
            for n in SuiteName::EACH {
                all.merge(run_suite(n, opts));
            }
            all
        }
    }
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            'a'..='z' | 'A'..='Z' | '0'..='9' => out.push(c),
            _ if !out.ends_with('_') => out.push('_'),
            _ => {}
        }
    }
    out.trim_matches('_').to_string()
}

pub fn run_group_suite() -> VerificationReport {
    let mut rep = VerificationReport::new("group");
    for rel in group::relations() {
        rep.check(&format!("group.relation.{}", slug(rel.name)), rel.name, rel.holds, json!(null));
    }
    let small = group::closure(&[group::g(), group::h()]);
    rep.check(
        "group.order_gh",
        "<g, h> has order 21",
        small.len() == 21,
        json!({"order": small.len()}),
    );
    let full = group::closure(&[group::g(), group::h(), group::r()]);
    rep.check(
        "group.order_ghr",
        "<g, h, r> has order 168",
        full.len() == 168,
        json!({"order": full.len()}),
    );
    let non_invariant = full.iter().filter(|m| !group::quartic_invariance(m)).count();
    rep.check(
        "group.phi4_invariant",
        "Phi_4(MZ) = Phi_4(Z) for every element M of the closure",
        non_invariant == 0,
        json!({"elements": full.len(), "non_invariant": non_invariant}),
    );
    rep.check(
        "group.special_linear",
        "every element has determinant 1",
        group::all_dets_one(&full),
        json!(null),
    );
    let v = eval_phi4(&[CycRat::one(), CycRat::one(), CycRat::one()]);
    rep.check(
        "group.phi4_unit_point_nonzero",
        "Phi_4(1, 1, 1) is nonzero, so the image of 1 is off the quartic",
        !v.is_zero(),
        json!(null),
    );
    rep.reported(
        "group.phi4_unit_point_value",
        "exact value of Phi_4(1, 1, 1); a value of 4 is stated for it",
        json!({"value": v.to_string(), "stated": 4}),
    );
    rep
}

fn matrix_strings(m: &Matrix<CycRat>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn diag(entries: [i64; 3]) -> Matrix<CycRat> {
    Matrix::diagonal(&entries.map(CycRat::mu_pow))
}

pub fn run_curve_suite() -> VerificationReport {
    let mut rep = VerificationReport::new("curve");
    let maps = coordinate_maps();
    rep.check(
        "curve.coordinate_maps",
        "X = -Z2^3/(Z3^2 Z1), Y = Z2/Z3 satisfy Y^7 = X^2(X-1) on the quartic, with g and h acting as stated",
        maps.all(),
        serde_json::to_value(&maps).unwrap_or_default(),
    );

    let expected = [[3, 1, 0], [0, 3, 1], [1, 0, 3]];
    let mut tangents = Vec::new();
    let mut ok = true;
    for (q, e) in FixedPoint::ALL.iter().zip(expected) {
        match tangent_divisor(*q) {
            Ok(d) => {
                ok &= d.fixed_vector() == Some(e);
                tangents.push(json!({"point": q.name(), "divisor": d.to_string()}));
            }
            Err(err) => {
                ok = false;
                tangents.push(json!({"point": q.name(), "error": err.to_string()}));
            }
        }
    }
    rep.check(
        "curve.tangent_divisors",
        "tangent lines cut 3q0+q1, 3q1+qinf, 3qinf+q0",
        ok,
        json!(tangents),
    );

    let eig: Vec<Option<CycRat>> = FixedPoint::ALL.iter().map(|&q| local_eigenvalue(q).ok()).collect();
    let eig_expected = [4, 1, 2].map(|k| Some(CycRat::mu_pow(k)));
    rep.check(
        "curve.local_eigenvalues",
        "g acts on the tangent spaces at q0, q1, qinf by mu^4, mu, mu^2",
        eig == eig_expected,
        json!(eig.iter().map(|e| e.as_ref().map(ToString::to_string)).collect::<Vec<_>>()),
    );

    match phiq_identities() {
        Ok(phiq) => rep.check(
            "curve.phiq_identities",
            "2q0+q1 ~ 3qinf, 2q1+qinf ~ 3q0, 2qinf+q0 ~ 3q1 follow from the tangent divisors",
            phiq.consistent(),
            serde_json::to_value(&phiq).unwrap_or_default(),
        ),
        Err(e) => rep.check(
            "curve.phiq_identities",
            "2q0+q1 ~ 3qinf, 2q1+qinf ~ 3q0, 2qinf+q0 ~ 3q1 follow from the tangent divisors",
            false,
            json!({"error": e.to_string()}),
        ),
    }

    let pg = pullback_differentials(CurveAut::G);
    rep.check(
        "curve.pullback_g",
        "g* on (phi1, phi2, phi3) is diag(mu^4, mu^2, mu)",
        pg.as_ref().is_ok_and(|m| *m == diag([4, 2, 1])),
        json!(pg.as_ref().map(matrix_strings).map_err(|e| e.to_string())),
    );
    let ph = pullback_differentials(CurveAut::H);
    let cyclic = Matrix::from_fn(3, 3, |i, j| if i == (j + 1) % 3 { CycRat::one() } else { CycRat::zero() });
    rep.check(
        "curve.pullback_h",
        "h* sends phi1 -> phi2 -> phi3 -> phi1",
        ph.as_ref().is_ok_and(|m| *m == cyclic),
        json!(ph.as_ref().map(matrix_strings).map_err(|e| e.to_string())),
    );
    if let (Ok(pg), Ok(ph)) = (&pg, &ph) {
        let lhs = ph.mul(pg).mul(&ph.inverse().expect("permutation"));
        rep.check(
            "curve.pullback_relation",
            "the pullbacks satisfy h* g* (h*)^-1 = (g*)^2",
            lhs == pg.pow(2),
            json!(null),
        );
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in SuiteName::EACH {
            assert_eq!(n.as_str().parse::<SuiteName>(), Ok(n));
        }
        assert!("klein".parse::<SuiteName>().is_err());
    }

    #[test]
    fn group_suite_shape() {
        let rep = run_group_suite();
        assert!(!rep.has_failures(), "{:?}", rep.failures());
        assert_eq!(rep.ids().iter().filter(|i| i.starts_with("group.relation.")).count(), 6);
        assert_eq!(rep.claim("group.phi4_unit_point_value").unwrap().payload["value"], "3");
    }

    #[test]
    fn curve_suite_passes() {
        let rep = run_curve_suite();
        assert!(!rep.has_failures(), "{:?}", rep.failures());
    }
}
