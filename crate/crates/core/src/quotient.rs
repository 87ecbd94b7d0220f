//! Rational presentations of the quotients: the invariant ring of `C^3/Z3`
//! with its crepant toric charts, the birational model of `E_omega^3/Z3`,
//! and the `Z7`-invariant generators of the symmetric-function algebra.

use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::cyclotomic::{CycInt, CycRat, OmegaInt};
use crate::matrix::Matrix;
use crate::poly::MPoly;
use crate::report::VerificationReport;
use crate::ring::Ring;

pub type MonomialIndex = [u32; 3];

/// Exponent triples of total degree 3, in lexicographic order.
pub fn degree_three_indices() -> Vec<MonomialIndex> {
    let mut out = Vec::new();
    for a in 0..=3 {
        for b in 0..=3 - a {
            out.push([a, b, 3 - a - b]);
        }
    }
    out
}

pub fn is_pure_cube(n: &MonomialIndex) -> bool {
    n.iter().filter(|&&x| x == 3).count() == 1
}

/// `lhs = rhs` between products of generator symbols `W_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialRelation {
    pub lhs: BTreeMap<String, u32>,
    pub rhs: BTreeMap<String, u32>,
}

pub fn w_name(n: &MonomialIndex) -> String {
    format!("W{}{}{}", n[0], n[1], n[2])
}

fn parse_w(name: &str) -> MonomialIndex {
    let d: Vec<u32> = name[1..].chars().map(|c| c.to_digit(10).expect("digit")).collect();
    [d[0], d[1], d[2]]
}

fn expand(side: &BTreeMap<String, u32>) -> [u32; 3] {
    side.iter().fold([0; 3], |acc, (w, k)| {
        let n = parse_w(w);
        std::array::from_fn(|i| acc[i] + k * n[i])
    })
}

impl BinomialRelation {
    /// Both sides as monomials in `z1, z2, z3` after `W_n -> z^n`.
    pub fn expand(&self) -> ([u32; 3], [u32; 3]) {
        (expand(&self.lhs), expand(&self.rhs))
    }

    pub fn holds(&self) -> bool {
        let (l, r) = self.expand();
        l == r
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Z3Presentation {
    pub generators: Vec<MonomialIndex>,
    pub relations: Vec<BinomialRelation>,
}

/// Generators `W_n = z^n` for `|n| = 3` and relations
/// `W_n^3 = W_300^n1 W_030^n2 W_003^n3`.
pub fn z3_invariant_presentation() -> Z3Presentation {
    let generators = degree_three_indices();
    let relations = generators
        .iter()
        .filter(|n| !is_pure_cube(n))
        .map(|n| {
            let mut lhs = BTreeMap::new();
            lhs.insert(w_name(n), 3);
            let mut rhs = BTreeMap::new();
            for (i, cube) in [[3, 0, 0], [0, 3, 0], [0, 0, 3]].iter().enumerate() {
                if n[i] > 0 {
                    rhs.insert(w_name(cube), n[i]);
                }
            }
            BinomialRelation { lhs, rhs }
        })
        .collect();
    Z3Presentation { generators, relations }
}

/// Quotient `W_num / W_den` (or a single `W_num`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WExpr {
    pub num: MonomialIndex,
    pub den: Option<MonomialIndex>,
}

impl WExpr {
    fn exponent(&self) -> [i64; 3] {
        let d = self.den.unwrap_or([0; 3]);
        std::array::from_fn(|i| self.num[i] as i64 - d[i] as i64)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ToricChart {
    pub name: &'static str,
    /// Each coordinate as a Laurent monomial in `z1, z2, z3`.
    pub coords: [[i64; 3]; 3],
    pub w_exprs: [WExpr; 3],
}

const W111: MonomialIndex = [1, 1, 1];

fn ratio(num: MonomialIndex) -> WExpr {
    WExpr { num, den: Some(W111) }
}

fn single(num: MonomialIndex) -> WExpr {
    WExpr { num, den: None }
}

/// The three charts of the crepant resolution of `C^3/Z3`.
pub fn toric_charts_z3() -> Vec<ToricChart> {
    vec![
        ToricChart {
            name: "U1",
            coords: [[1, 0, -1], [0, 1, -1], [0, 0, 3]],
            w_exprs: [ratio([2, 1, 0]), ratio([1, 2, 0]), single([0, 0, 3])],
        },
        ToricChart {
            name: "U2",
            coords: [[-1, 1, 0], [-1, 0, 1], [3, 0, 0]],
            w_exprs: [ratio([0, 2, 1]), ratio([0, 1, 2]), single([3, 0, 0])],
        },
        ToricChart {
            name: "U3",
            coords: [[1, -1, 0], [0, 3, 0], [0, -1, 1]],
            w_exprs: [ratio([2, 0, 1]), single([0, 3, 0]), ratio([1, 0, 2])],
        },
    ]
}

fn int_rows(rows: &[[i64; 3]; 3]) -> Matrix<BigRational> {
    Matrix::from_fn(3, 3, |i, j| BigRational::from_int(rows[i][j]))
}

impl ToricChart {
    /// Primitive rays of the chart's cone, scaled by 3: the columns of
    /// `3 M^-1` where `M` has the coordinate exponents as rows.
    pub fn scaled_rays(&self) -> Option<[[i64; 3]; 3]> {
        let inv = int_rows(&self.coords).inverse()?;
        let three = BigRational::from_int(3);
        let mut out = [[0i64; 3]; 3];
        for (j, ray) in out.iter_mut().enumerate() {
            for (i, x) in ray.iter_mut().enumerate() {
                let v = inv[(i, j)].clone() * three.clone();
                if !v.is_integer() {
                    return None;
                }
                *x = i64::try_from(v.to_integer()).ok()?;
            }
        }
        Some(out)
    }
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn in_scaled_n(v: &[i64; 3]) -> bool {
    let r = v[0].rem_euclid(3);
    v[1].rem_euclid(3) == r && v[2].rem_euclid(3) == r
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartChecks {
    pub scaled_rays: Vec<[[i64; 3]; 3]>,
    /// Rays lie in `N = Z^3 + Z (1,1,1)/3` and form a basis of it.
    pub smooth: bool,
    /// Rays lie on `x + y + z = 1`.
    pub crepant: bool,
    /// The `W` expressions expand to the coordinate monomials.
    pub w_expressions: bool,
    /// `W111` is the product of the coordinates in every chart.
    pub w111_product: bool,
    /// Transition maps between charts are monomial with integer inverse.
    pub transitions: bool,
    /// The cones share facets pairwise with the third rays on opposite sides.
    pub facets: bool,
    /// The cone volumes add up to that of the octant.
    pub volume: bool,
    /// Every lattice point of the octant in a box lies in some cone.
    pub covers_octant: bool,
}

impl ChartChecks {
    pub fn all(&self) -> bool {
        self.smooth
            && self.crepant
            && self.w_expressions
            && self.w111_product
            && self.transitions
            && self.facets
            && self.volume
            && self.covers_octant
    }
}

fn in_cone(rays: &[[i64; 3]; 3], v: &[i64; 3]) -> bool {
    let m: Matrix<BigRational> = Matrix::from_fn(3, 3, |i, j| BigRational::from_int(rays[j][i]));
    let b: Vec<BigRational> = v.iter().map(|&x| BigRational::from_int(3 * x)).collect();
    m.solve(&b)
        .is_some_and(|lam| lam.iter().all(|l| *l >= BigRational::zero()))
}

pub fn verify_charts(charts: &[ToricChart], cover_box: i64) -> ChartChecks {
    let rays: Vec<[[i64; 3]; 3]> = charts.iter().filter_map(ToricChart::scaled_rays).collect();
    let all_rays = rays.len() == charts.len();
    let smooth = all_rays
        && rays
            .iter()
            .all(|r| r.iter().all(in_scaled_n) && det3(r).abs() == 9);
    let crepant = all_rays && rays.iter().all(|r| r.iter().all(|v| v.iter().sum::<i64>() == 3));
    let w_expressions = charts
        .iter()
        .all(|c| (0..3).all(|i| c.w_exprs[i].exponent() == c.coords[i]));
    let w111_product = charts.iter().all(|c| {
        let s: [i64; 3] = std::array::from_fn(|j| c.coords.iter().map(|r| r[j]).sum());
        s == [1, 1, 1]
    });
    let transitions = charts.iter().all(|a| {
        charts.iter().all(|b| {
            int_rows(&a.coords).inverse().is_some_and(|ai| {
                let t = int_rows(&b.coords).mul(&ai);
                let det = t.det();
                t.entries().all(|x| x.is_integer()) && (det.is_one() || (-det).is_one())
            })
        })
    });
    let mut facets = all_rays;
    if all_rays {
        for i in 0..rays.len() {
            for j in i + 1..rays.len() {
                let shared: Vec<[i64; 3]> = rays[i].iter().filter(|v| rays[j].contains(v)).copied().collect();
                if shared.len() != 2 {
                    // cones meeting along a ray only are allowed if no facet is shared
                    facets &= shared.len() < 2;
                    continue;
                }
                let oi = rays[i].iter().find(|v| !shared.contains(v)).expect("third ray");
                let oj = rays[j].iter().find(|v| !shared.contains(v)).expect("third ray");
                let si = det3(&[shared[0], shared[1], *oi]).signum();
                let sj = det3(&[shared[0], shared[1], *oj]).signum();
                facets &= si * sj < 0;
            }
        }
    }
    let volume = all_rays && rays.iter().map(|r| det3(r).abs()).sum::<i64>() == 27;
    let mut covers_octant = all_rays;
    'outer: for x in 0..=cover_box {
        for y in 0..=cover_box {
            for z in 0..=cover_box {
                let v = [x, y, z];
                if covers_octant && !rays.iter().any(|r| in_cone(r, &v)) {
                    covers_octant = false;
                    break 'outer;
                }
            }
        }
    }
    ChartChecks {
        scaled_rays: rays,
        smooth,
        crepant,
        w_expressions,
        w111_product,
        transitions,
        facets,
        volume,
        covers_octant,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BirationalModelChecks {
    pub indices: Vec<MonomialIndex>,
    /// `W_n^3 - prod X_j^n_j (X_j - 1)^n_j` vanishes after `W_n = prod Y_j^n_j`
    /// modulo `Y_j^3 = X_j (X_j - 1)`.
    pub relations_reduce: bool,
    /// `Y_j -> omega Y_j` fixes every `W_n`.
    pub omega_invariant: bool,
}

/// Variables `(Y1, Y2, Y3, X1, X2, X3)`; `Y` first so `Y_j^3` leads.
fn yx_var(i: usize) -> MPoly<BigRational> {
    MPoly::var(6, i)
}

pub fn kummer_z3_birational_model() -> BirationalModelChecks {
    let indices: Vec<MonomialIndex> = degree_three_indices().into_iter().filter(|n| !is_pure_cube(n)).collect();
    let one = MPoly::one(6);
    let cubic: Vec<MPoly<BigRational>> = (0..3)
        .map(|j| yx_var(j).pow(3) - yx_var(3 + j) * (yx_var(3 + j) - one.clone()))
        .collect();
    let relations_reduce = indices.iter().all(|n| {
        let w = (0..3).fold(one.clone(), |acc, j| acc * yx_var(j).pow(n[j]));
        let rhs = (0..3).fold(one.clone(), |acc, j| {
            acc * (yx_var(3 + j) * (yx_var(3 + j) - one.clone())).pow(n[j])
        });
        (w.pow(3) - rhs).reduce(&cubic).is_zero()
    });
    let omega_y: Vec<MPoly<OmegaInt>> = (0..3).map(|j| MPoly::var(3, j).scale(&OmegaInt::tau())).collect();
    let omega_invariant = degree_three_indices().iter().all(|n| {
        let w = MPoly::monomial(n.to_vec(), OmegaInt::one());
        w.substitute(&omega_y) == w
    });
    BirationalModelChecks {
        indices,
        relations_reduce,
        omega_invariant,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Z7Generators {
    pub symmetric: Vec<&'static str>,
    pub sigma_sevenths: Vec<MonomialIndex>,
    /// `sigma^n` with `0 <= n_j < 7` and `n1 + 2 n2 + 3 n3 = 0 mod 7`, including `n = 0`.
    pub box_monomials: Vec<MonomialIndex>,
}

impl Z7Generators {
    pub fn count(&self) -> usize {
        self.box_monomials.len()
    }

    /// Exponent vectors in `(s1, s2, s3, sigma1, sigma2, sigma3)`, without the
    /// trivial monomial.
    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = (0..3)
            .map(|i| (0..6).map(|j| u32::from(i == j)).collect())
            .collect();
        for n in self.sigma_sevenths.iter().chain(&self.box_monomials) {
            if n.iter().any(|&x| x > 0) {
                out.push([0, 0, 0, n[0], n[1], n[2]].to_vec());
            }
        }
        out
    }

    /// Exponent vectors in the sigma variables only.
    pub fn sigma_vectors(&self) -> Vec<Vec<u32>> {
        self.exponent_vectors().into_iter().filter(|v| v[..3].iter().all(|&x| x == 0)).map(|v| v[3..].to_vec()).collect()
    }
}

pub fn z7_weight(n: &MonomialIndex) -> u32 {
    (n[0] + 2 * n[1] + 3 * n[2]) % 7
}

pub fn z7_invariant_generators() -> Z7Generators {
    let mut box_monomials = Vec::new();
    for a in 0..7 {
        for b in 0..7 {
            for c in 0..7 {
                let n = [a, b, c];
                if z7_weight(&n) == 0 {
                    box_monomials.push(n);
                }
            }
        }
    }
    Z7Generators {
        symmetric: vec!["s1", "s2", "s3"],
        sigma_sevenths: vec![[7, 0, 0], [0, 7, 0], [0, 0, 7]],
        box_monomials,
    }
}

/// `mu^(n1 + 2 n2 + 3 n3) = 1` exactly in `Z[mu]`.
pub fn sigma_monomial_invariant(n: &MonomialIndex) -> bool {
    let e = n[0] as i64 + 2 * n[1] as i64 + 3 * n[2] as i64;
    CycInt::mu_pow(e) == CycInt::one()
}

/// Elementary symmetric polynomials in three variables.
pub fn elementary_symmetric<R: Ring>() -> [MPoly<R>; 3] {
    let v = |i| MPoly::<R>::var(3, i);
    [
        v(0) + v(1) + v(2),
        v(0) * v(1) + v(0) * v(2) + v(1) * v(2),
        v(0) * v(1) * v(2),
    ]
}

/// `s_k` are symmetric and `sigma_k(mu y) = mu^k sigma_k(y)`.
pub fn symmetric_function_actions() -> bool {
    let s = elementary_symmetric::<CycRat>();
    let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let symmetric = s.iter().all(|f| {
        perms.iter().all(|p| {
            let images: Vec<MPoly<CycRat>> = p.iter().map(|&i| MPoly::var(3, i)).collect();
            f.substitute(&images) == *f
        })
    });
    let scaled: Vec<MPoly<CycRat>> = (0..3).map(|i| MPoly::var(3, i).scale(&CycRat::mu())).collect();
    let weights = s
        .iter()
        .enumerate()
        .all(|(k, f)| f.substitute(&scaled) == f.scale(&CycRat::mu_pow(k as i64 + 1)));
    symmetric && weights
}

/// Cyclic grading: variable `i` has weight `weights[i]` modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub modulus: u32,
    pub weights: Vec<u32>,
}

impl Grading {
    pub fn trivial(nvars: usize) -> Self {
        Grading {
            modulus: 1,
            weights: vec![0; nvars],
        }
    }

    pub fn is_invariant(&self, e: &[u32]) -> bool {
        let w: u64 = e.iter().zip(&self.weights).map(|(&a, &b)| a as u64 * b as u64).sum();
        w % self.modulus as u64 == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationResult {
    pub degree_bound: u32,
    pub invariant_monomials: usize,
    pub counterexample: Option<Vec<u32>>,
}

impl GenerationResult {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Checks that every invariant monomial of total degree `<= d` is a product
/// of the generator monomials; reports the first failure in degree order.
pub fn verify_invariant_generation(grading: &Grading, generators: &[Vec<u32>], d: u32) -> GenerationResult {
    let n = grading.weights.len();
    let mut reachable: HashSet<Vec<u32>> = HashSet::new();
    reachable.insert(vec![0; n]);
    let mut count = 0;
    for deg in 1..=d {
        for m in monomials_of_degree(n, deg) {
            if !grading.is_invariant(&m) {
                continue;
            }
            count += 1;
            let hit = generators.iter().any(|g| {
                g.iter().zip(&m).all(|(a, b)| a <= b) && {
                    let rest: Vec<u32> = m.iter().zip(g).map(|(a, b)| a - b).collect();
                    reachable.contains(&rest)
                }
            });
            if hit {
                reachable.insert(m);
            } else {
                return GenerationResult {
                    degree_bound: d,
                    invariant_monomials: count,
                    counterexample: Some(m),
                };
            }
        }
    }
    GenerationResult {
        degree_bound: d,
        invariant_monomials: count,
        counterexample: None,
    }
}

pub const DEFAULT_BOUND_Z3: u32 = 12;
pub const DEFAULT_BOUND_Z7: u32 = 14;

/// The quotient-structures suite. `degree_bound` overrides both oracle bounds.
pub fn run_quotients_suite(degree_bound: Option<u32>) -> VerificationReport {
    let mut rep = VerificationReport::new("quotients");
    let pres = z3_invariant_presentation();
    rep.check(
        "quotients.z3_generators",
        "the degree-3 monomials W_n number 10",
        pres.generators.len() == 10,
        json!({"generators": pres.generators.iter().map(w_name).collect::<Vec<_>>()}),
    );
    rep.check(
        "quotients.z3_relations",
        "W_n^3 = W300^n1 W030^n2 W003^n3 expands to an identity in z",
        pres.relations.iter().all(BinomialRelation::holds),
        json!({"relations": pres.relations.len()}),
    );

    let d3 = degree_bound.unwrap_or(DEFAULT_BOUND_Z3);
    let gens3: Vec<Vec<u32>> = pres.generators.iter().map(|n| n.to_vec()).collect();
    let g3 = verify_invariant_generation(&Grading { modulus: 3, weights: vec![1, 1, 1] }, &gens3, d3);
    rep.check(
        "quotients.z3_generation",
        "every Z3-invariant monomial up to the bound is a product of the W_n",
        g3.ok(),
        serde_json::to_value(&g3).unwrap_or_default(),
    );

    let charts = toric_charts_z3();
    let cc = verify_charts(&charts, 6);
    rep.check(
        "quotients.z3_charts",
        "U1, U2, U3 are smooth crepant charts glued monomially and covering the quotient cone",
        cc.all(),
        serde_json::to_value(&cc).unwrap_or_default(),
    );

    let bm = kummer_z3_birational_model();
    rep.check(
        "quotients.z3_birational_model",
        "W_n^3 = prod X_j^n_j (X_j-1)^n_j on Y_j^3 = X_j(X_j-1) for the 7 mixed n",
        bm.indices.len() == 7 && bm.relations_reduce && bm.omega_invariant,
        serde_json::to_value(&bm).unwrap_or_default(),
    );

    let z7 = z7_invariant_generators();
    let all_invariant = z7.box_monomials.iter().chain(&z7.sigma_sevenths).all(sigma_monomial_invariant);
    rep.check(
        "quotients.z7_generators",
        "49 box monomials with n1 + 2 n2 + 3 n3 = 0 mod 7, all invariant",
        z7.count() == 49 && all_invariant && symmetric_function_actions(),
        json!({"count": z7.count(), "box_monomials": z7.box_monomials}),
    );

    let d7 = degree_bound.unwrap_or(DEFAULT_BOUND_Z7);
    let g7 = verify_invariant_generation(&Grading { modulus: 7, weights: vec![1, 2, 3] }, &z7.sigma_vectors(), d7);
    rep.check(
        "quotients.z7_generation",
        "every invariant sigma-monomial up to the bound is a product of the listed generators",
        g7.ok(),
        serde_json::to_value(&g7).unwrap_or_default(),
    );

    let mixed = verify_invariant_generation(
        &Grading {
            modulus: 7,
            weights: vec![0, 0, 0, 1, 2, 3],
        },
        &z7.exponent_vectors(),
        d7,
    );
    rep.reported(
        "quotients.z7_mixed_generation",
        "invariant monomials in s and sigma up to the bound need no mixed generators",
        serde_json::to_value(&mixed).unwrap_or_default(),
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_indices_and_seven_mixed() {
        assert_eq!(degree_three_indices().len(), 10);
        assert_eq!(degree_three_indices().iter().filter(|n| !is_pure_cube(n)).count(), 7);
    }

    #[test]
    fn relation_for_111() {
        let pres = z3_invariant_presentation();
        let r = pres.relations.iter().find(|r| r.lhs.contains_key("W111")).unwrap();
        assert_eq!(r.expand(), ([3, 3, 3], [3, 3, 3]));
        assert_eq!(r.rhs.len(), 3);
    }

    #[test]
    fn chart_rays() {
        let charts = toric_charts_z3();
        assert_eq!(charts[0].scaled_rays().unwrap(), [[3, 0, 0], [0, 3, 0], [1, 1, 1]]);
        let cc = verify_charts(&charts, 6);
        assert!(cc.all(), "{cc:?}");
    }

    #[test]
    fn broken_chart_detected() {
        let mut charts = toric_charts_z3();
        // drop the third chart: the octant is no longer covered
        charts.pop();
        let cc = verify_charts(&charts, 3);
        assert!(!cc.volume);
        assert!(!cc.covers_octant);
        // a non-crepant chart: z1, z2, z3^3 on C^3/Z3 is not even a chart of N
        let bad = ToricChart {
            name: "bad",
            coords: [[1, 0, 0], [0, 1, 0], [0, 0, 3]],
            w_exprs: [single([1, 0, 0]), single([0, 1, 0]), single([0, 0, 3])],
        };
        let cc = verify_charts(&[bad], 1);
        assert!(!cc.smooth || !cc.crepant);
    }

    #[test]
    fn birational_model_reduces() {
        let bm = kummer_z3_birational_model();
        assert!(bm.relations_reduce);
        assert!(bm.omega_invariant);
    }

    #[test]
    fn z7_box_count_matches_enumeration() {
        let g = z7_invariant_generators();
        assert_eq!(g.count(), 49);
        assert!(g.box_monomials.contains(&[2, 1, 1]));
        assert!(g.box_monomials.contains(&[0, 0, 0]));
        assert!(g.box_monomials.iter().all(sigma_monomial_invariant));
        assert!(!sigma_monomial_invariant(&[1, 0, 0]));
        assert!(symmetric_function_actions());
    }

    #[test]
    fn generation_oracles() {
        let z3 = Grading { modulus: 3, weights: vec![1, 1, 1] };
        let gens: Vec<Vec<u32>> = degree_three_indices().iter().map(|n| n.to_vec()).collect();
        assert!(verify_invariant_generation(&z3, &gens, 12).ok());

        let g = z7_invariant_generators();
        let z7 = Grading { modulus: 7, weights: vec![1, 2, 3] };
        assert!(verify_invariant_generation(&z7, &g.sigma_vectors(), 14).ok());

        let trivial = Grading::trivial(2);
        assert!(verify_invariant_generation(&trivial, &[vec![1, 0], vec![0, 1]], 5).ok());
    }

    #[test]
    fn missing_generator_gives_counterexample() {
        let g = z7_invariant_generators();
        let z7 = Grading { modulus: 7, weights: vec![1, 2, 3] };
        let gens: Vec<Vec<u32>> = g.sigma_vectors().into_iter().filter(|v| v != &vec![7, 0, 0]).collect();
        let r = verify_invariant_generation(&z7, &gens, 14);
        assert_eq!(r.counterexample, Some(vec![7, 0, 0]));
        // below degree 7 the gap is invisible
        assert!(verify_invariant_generation(&z7, &gens, 6).ok());
    }

    #[test]
    fn generation_is_monotone_in_bound() {
        let z3 = Grading { modulus: 3, weights: vec![1, 1, 1] };
        let gens: Vec<Vec<u32>> = degree_three_indices().iter().map(|n| n.to_vec()).collect();
        for d in 0..=12 {
            assert!(verify_invariant_generation(&z3, &gens, d).ok());
        }
    }

    #[test]
    fn suite_passes() {
        let rep = run_quotients_suite(None);
        assert!(!rep.has_failures(), "{:?}", rep.failures());
    }
}
