//! The three models of the `Z/7` torus (`A(mu)`, `E_eta^3`) and the `Z/3`
//! torus `E_omega^3`, with their automorphisms written on integral lattices.
//!
//! Every model is reduced to a rank-6 integer lattice (restriction of scalars)
//! and all fixed-point and integrality questions are answered there.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclotomic::{CycInt, CycRat, EtaInt, OmegaInt, QuadInt, QuadOrder};
use crate::error::TorusError;
use crate::klein::group::{self, GroupMatrix};
use crate::lattice::{det_int, integer_kernel, same_lattice, smith_normal_form, unimodular_inverse, IntMatrix};
use crate::matrix::Matrix;
use crate::report::{int_json, VerificationReport};
use crate::ring::{mod_floor, Ring};

/// Ordered CM type: `u(x) = (sigma_4 x, sigma_2 x, sigma_1 x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CMType {
    pub embeddings: [i64; 3],
}

impl CMType {
    pub const STANDARD: CMType = CMType { embeddings: [4, 2, 1] };

    /// The indices and their negatives mod 7 cover `1..=6` exactly once.
    pub fn is_cm_type(&self) -> bool {
        let mut seen = [false; 7];
        for &k in &self.embeddings {
            for x in [k.rem_euclid(7), (-k).rem_euclid(7)] {
                if x == 0 || seen[x as usize] {
                    return false;
                }
                seen[x as usize] = true;
            }
        }
        true
    }

    /// `u(x)` as a vector in `Q(mu)^3`.
    pub fn embed(&self, x: &CycRat) -> Vec<CycRat> {
        self.embeddings
            .iter()
            .map(|&k| x.galois(k).expect("CM indices are units"))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModelKind {
    AMu,
    EEtaCube,
    EOmegaCube,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Automorphism {
    /// Multiplication by a cyclotomic integer on `Z[mu]`.
    CycScalar(CycInt),
    /// The Galois map `mu -> mu^k` on `Z[mu]`.
    CycGalois(i64),
    Eta(Matrix<EtaInt>),
    Omega(Matrix<OmegaInt>),
}

impl Automorphism {
    /// Matrix on the rank-6 integer lattice of the model (column convention).
    pub fn int_matrix(&self) -> IntMatrix {
        match self {
            Automorphism::CycScalar(c) => cyc_linear_map(|x| c.clone() * x),
            Automorphism::CycGalois(k) => cyc_linear_map(|x| x.galois(*k).expect("unit index")),
            Automorphism::Eta(m) => restrict_scalars(m),
            Automorphism::Omega(m) => restrict_scalars(m),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusModel {
    pub kind: ModelKind,
    pub automorphisms: BTreeMap<String, Automorphism>,
}

impl TorusModel {
    pub fn a_mu() -> Self {
        let mut automorphisms = BTreeMap::new();
        automorphisms.insert("m_mu".into(), Automorphism::CycScalar(CycInt::mu()));
        automorphisms.insert("h".into(), Automorphism::CycGalois(4));
        TorusModel {
            kind: ModelKind::AMu,
            automorphisms,
        }
    }

    pub fn e_eta_cube() -> Self {
        let mut automorphisms = BTreeMap::new();
        automorphisms.insert("g_eta".into(), Automorphism::Eta(g_eta()));
        automorphisms.insert("h_tilde".into(), Automorphism::Eta(h_tilde()));
        TorusModel {
            kind: ModelKind::EEtaCube,
            automorphisms,
        }
    }

    pub fn e_omega_cube() -> Self {
        let mut automorphisms = BTreeMap::new();
        automorphisms.insert("m_omega".into(), Automorphism::Omega(Matrix::diagonal(&[OmegaInt::tau(), OmegaInt::tau(), OmegaInt::tau()])));
        TorusModel {
            kind: ModelKind::EOmegaCube,
            automorphisms,
        }
    }

    pub fn automorphism(&self, name: &str) -> Result<&Automorphism, TorusError> {
        self.automorphisms
            .get(name)
            .ok_or_else(|| TorusError::UnknownAutomorphism(name.to_string()))
    }

    pub fn int_matrix(&self, name: &str) -> Result<IntMatrix, TorusError> {
        Ok(self.automorphism(name)?.int_matrix())
    }

    /// Each stored automorphism has determinant `+-1` on the integer lattice.
    pub fn automorphisms_are_unimodular(&self) -> bool {
        self.automorphisms.values().all(|a| {
            let d = det_int(&a.int_matrix());
            d == BigInt::from(1) || d == BigInt::from(-1)
        })
    }
}

fn cyc_linear_map(f: impl Fn(CycInt) -> CycInt) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = (0..6)
        .map(|j| f(CycInt::mu_pow(j)).coeffs().to_vec())
        .collect();
    Matrix::from_columns(&cols)
}

/// Replaces each entry `a + b tau` by its 2x2 multiplication block on `(1, tau)`.
pub fn restrict_scalars<O: QuadOrder>(m: &Matrix<QuadInt<O>>) -> IntMatrix {
    let mut out = Matrix::zeros(2 * m.rows(), 2 * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let b = m[(i, j)].mult_block();
            for (di, row) in b.iter().enumerate() {
                for (dj, v) in row.iter().enumerate() {
                    out[(2 * i + di, 2 * j + dj)] = v.clone();
                }
            }
        }
    }
    out
}

/// Inverse of [`restrict_scalars`]; fails when a block is not `Z[tau]`-linear.
pub fn descend_scalars<O: QuadOrder>(m: &IntMatrix) -> Result<Matrix<QuadInt<O>>, TorusError> {
    let (rows, cols) = (m.rows() / 2, m.cols() / 2);
    let mut entries = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for j in 0..cols {
            let x = QuadInt::<O>::new(m[(2 * i, 2 * j)].clone(), m[(2 * i + 1, 2 * j)].clone());
            let block = x.mult_block();
            let matches = (0..2).all(|di| (0..2).all(|dj| block[di][dj] == m[(2 * i + di, 2 * j + dj)]));
            if !matches {
                return Err(TorusError::NonIntegral);
            }
            row.push(x);
        }
        entries.push(row);
    }
    Ok(Matrix::from_rows(entries))
}

fn eta(a: i64, b: i64) -> EtaInt {
    EtaInt::new(a, b)
}

/// `g_eta`, columns `(0,1,0)`, `(0,0,1)`, `(1, eta+1, eta)`.
pub fn g_eta() -> Matrix<EtaInt> {
    Matrix::from_rows(vec![
        vec![eta(0, 0), eta(0, 0), eta(1, 0)],
        vec![eta(1, 0), eta(0, 0), eta(1, 1)],
        vec![eta(0, 0), eta(1, 0), eta(0, 1)],
    ])
}

/// `h~ = [[1, eta, 0], [0, -1, 1], [0, -1, 0]]`.
pub fn h_tilde() -> Matrix<EtaInt> {
    Matrix::from_rows(vec![
        vec![eta(1, 0), eta(0, 1), eta(0, 0)],
        vec![eta(0, 0), eta(-1, 0), eta(1, 0)],
        vec![eta(0, 0), eta(-1, 0), eta(0, 0)],
    ])
}

/// Columns are the coefficient vectors of `1, eta, mu, eta mu, mu^2, eta mu^2`:
/// maps `Z[eta]^3` coordinates to `Z[mu]` coordinates.
pub fn eta_basis_change() -> IntMatrix {
    let e = CycInt::eta();
    let cols: Vec<Vec<BigInt>> = (0..3)
        .flat_map(|k| {
            let m = CycInt::mu_pow(k);
            [m.clone(), e.clone() * m]
        })
        .map(|x| x.coeffs().to_vec())
        .collect();
    Matrix::from_columns(&cols)
}

fn in_eta_basis(m: &IntMatrix) -> Matrix<EtaInt> {
    let p = eta_basis_change();
    let p_inv = unimodular_inverse(&p).expect("1, mu, mu^2 is a Z[eta]-basis of Z[mu]");
    descend_scalars::<crate::cyclotomic::Eta>(&p_inv.mul(m).mul(&p)).expect("the map is Z[eta]-linear")
}

/// Multiplication by `mu` on `Z[mu]` in the `Z[eta]`-basis `(1, mu, mu^2)`.
pub fn mu_matrix_in_eta_basis() -> Matrix<EtaInt> {
    in_eta_basis(&TorusModel::a_mu().int_matrix("m_mu").expect("present"))
}

/// The Galois map `mu -> mu^4` in the `Z[eta]`-basis `(1, mu, mu^2)`.
pub fn h_matrix_in_eta_basis() -> Matrix<EtaInt> {
    in_eta_basis(&TorusModel::a_mu().int_matrix("h").expect("present"))
}

/// `Z[eta]^3` coordinates of an element of `Z[mu]`.
pub fn eta_coords(x: &CycInt) -> [EtaInt; 3] {
    let p_inv = unimodular_inverse(&eta_basis_change()).expect("unimodular");
    let v = p_inv.apply(x.coeffs());
    [0, 1, 2].map(|i| EtaInt::new(v[2 * i].clone(), v[2 * i + 1].clone()))
}

pub fn cyc_from_eta_coords(c: &[EtaInt; 3]) -> CycInt {
    c.iter()
        .enumerate()
        .fold(CycInt::zero(), |acc, (k, x)| acc + x.to_cyc() * CycInt::mu_pow(k as i64))
}

/// Characteristic polynomial of a matrix over `Z[eta]` evaluated at `mu^k`.
pub fn char_poly_at_mu(m: &Matrix<EtaInt>, k: i64) -> CycInt {
    let cp = m.char_poly();
    let x = CycInt::mu_pow(k);
    cp.iter()
        .rev()
        .fold(CycInt::zero(), |acc, c| acc * x.clone() + c.to_cyc())
}

/// Point `numerator / denominator` of `R^6 / Z^6`, numerator reduced into `[0, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorsionPoint {
    #[serde(serialize_with = "ser_ints")]
    pub numerator: Vec<BigInt>,
    #[serde(serialize_with = "ser_int")]
    pub denominator: BigInt,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(int_json).collect::<Vec<_>>().serialize(s)
}

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    int_json(v).serialize(s)
}

impl TorsionPoint {
    pub fn new(numerator: Vec<BigInt>, denominator: BigInt) -> Self {
        assert!(denominator > BigInt::from(0), "denominator must be positive");
        let g = numerator.iter().fold(denominator.clone(), |g, x| g.gcd(x));
        let n = &denominator / &g;
        let numerator = numerator.iter().map(|x| mod_floor(&(x / &g), &n)).collect();
        TorsionPoint { numerator, denominator: n }
    }

    pub fn is_zero(&self) -> bool {
        self.denominator == BigInt::from(1)
    }

    pub fn scale(&self, k: i64) -> Self {
        TorsionPoint::new(
            self.numerator.iter().map(|x| x * k).collect(),
            self.denominator.clone(),
        )
    }

    /// Whether `m` fixes the point modulo the lattice.
    pub fn is_fixed_by(&self, m: &IntMatrix) -> bool {
        m.apply(&self.numerator)
            .iter()
            .zip(&self.numerator)
            .all(|(a, b)| (a - b).is_multiple_of(&self.denominator))
    }

    /// Coordinates as `Z[tau]` numerators, for models built on a quadratic order.
    pub fn quad_numerators<O: QuadOrder>(&self) -> Vec<QuadInt<O>> {
        self.numerator
            .chunks(2)
            .map(|c| QuadInt::new(c[0].clone(), c[1].clone()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FixedSet {
    /// Finite fixed group with its order and independent generators.
    Finite {
        #[serde(serialize_with = "ser_int")]
        order: BigInt,
        invariant_factors: Vec<String>,
        generators: Vec<TorsionPoint>,
    },
    /// Positive-dimensional fixed set: the identity component is spanned by
    /// `kernel_basis`, and the component group is the product of `Z/d`.
    Positive {
        kernel_basis: Vec<Vec<String>>,
        component_invariants: Vec<String>,
        component_generators: Vec<TorsionPoint>,
    },
}

impl FixedSet {
    pub fn order(&self) -> Option<&BigInt> {
        match self {
            FixedSet::Finite { order, .. } => Some(order),
            FixedSet::Positive { .. } => None,
        }
    }
}

/// `{x in R^6 : (M - 1) x in Z^6} / Z^6` for the named automorphism.
pub fn fixed_subgroup(model: &TorusModel, aut: &str) -> Result<FixedSet, TorusError> {
    Ok(fixed_set_of(&model.int_matrix(aut)?))
}

pub fn fixed_set_of(m: &IntMatrix) -> FixedSet {
    let n = m.rows();
    let d = m.sub(&IntMatrix::identity(n));
    let snf = smith_normal_form(&d);
    let factors = snf.invariant_factors();
    let one = BigInt::from(1);
    let generators: Vec<TorsionPoint> = factors
        .iter()
        .enumerate()
        .filter(|(_, f)| **f != one)
        .map(|(i, f)| TorsionPoint::new(snf.v.column(i), f.clone()))
        .collect();
    let nontrivial: Vec<String> = factors.iter().filter(|f| **f != one).map(|f| f.to_string()).collect();
    if snf.rank == n {
        FixedSet::Finite {
            order: factors.iter().product(),
            invariant_factors: nontrivial,
            generators,
        }
    } else {
        FixedSet::Positive {
            kernel_basis: (snf.rank..n)
                .map(|j| snf.v.column(j).iter().map(|x| x.to_string()).collect())
                .collect(),
            component_invariants: nontrivial,
            component_generators: generators,
        }
    }
}

/// Integer kernel of `M - 1` (spans the identity component of the fixed set).
pub fn fixed_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    integer_kernel(&m.sub(&IntMatrix::identity(m.rows())))
}

/// First expression: `(1/7) sum_{j=0}^{5} mu^j`.
pub fn alpha_sum_numerator() -> CycInt {
    CycInt::from_ints([1, 1, 1, 1, 1, 1])
}

/// Second expression: `(1/7)(-1 - 5mu - 8mu^2 + 5eta + 4 mu eta - 2 mu^2 eta)`.
pub fn alpha_six_term_numerator() -> CycInt {
    let e = CycInt::eta();
    let m = CycInt::mu();
    let m2 = CycInt::mu_pow(2);
    CycInt::from_int(-1) - CycInt::from_int(5) * m.clone() - CycInt::from_int(8) * m2.clone()
        + CycInt::from_int(5) * e.clone()
        + CycInt::from_int(4) * m * e.clone()
        - CycInt::from_int(2) * m2 * e
}

/// The point `(1/7)(6+5eta, 2+4eta, 6+5eta)` of `E_eta^3`.
pub fn eta_cube_generator() -> TorsionPoint {
    TorsionPoint::new([6, 5, 2, 4, 6, 5].iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(7))
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaClaims {
    /// `(mu - 1) alpha in Z[mu]` for the sum expression.
    pub sum_is_fixed: bool,
    /// `(mu - 1) alpha in Z[mu]` for the six-term expression.
    pub six_term_is_fixed: bool,
    /// Both expressions agree modulo `Z[mu]`.
    pub expressions_agree: bool,
    /// `sigma_4(alpha) = 2 alpha` modulo `Z[mu]`, six-term expression.
    pub six_term_doubled_by_h: bool,
    /// `sigma_4(alpha) = 2 alpha` modulo `Z[mu]`, sum expression.
    pub sum_doubled_by_h: bool,
    /// The six-term expression has `Z[eta]`-coordinates `(6+5eta, 2+4eta, 6+5eta)/7`.
    pub six_term_matches_eta_point: bool,
    /// `7 alpha = 0` modulo `Z[mu]` for both expressions.
    pub seven_torsion: bool,
    pub six_term_eta_coords: Vec<EtaInt>,
    /// Orbits of `k alpha` under `alpha -> 2 alpha`.
    pub h_orbits: Vec<Vec<u32>>,
}

pub fn verify_alpha_claims() -> AlphaClaims {
    let seven = BigInt::from(7);
    let a1 = alpha_sum_numerator();
    let a2 = alpha_six_term_numerator();
    let m1 = CycInt::mu() - CycInt::one();
    let doubled = |a: &CycInt| (a.galois(4).expect("unit") - CycInt::from_int(2) * a.clone()).divisible_by_int(&seven);
    let coords = eta_coords(&a2).map(|x| {
        EtaInt::new(mod_floor(&x.a, &seven), mod_floor(&x.b, &seven))
    });
    let expected = [eta(6, 5), eta(2, 4), eta(6, 5)];
    AlphaClaims {
        sum_is_fixed: (m1.clone() * a1.clone()).divisible_by_int(&seven),
        six_term_is_fixed: (m1 * a2.clone()).divisible_by_int(&seven),
        expressions_agree: (a1.clone() - a2.clone()).divisible_by_int(&seven),
        six_term_doubled_by_h: doubled(&a2),
        sum_doubled_by_h: doubled(&a1),
        six_term_matches_eta_point: coords == expected,
        seven_torsion: (a1 * CycInt::from_int(7)).divisible_by_int(&seven)
            && (a2 * CycInt::from_int(7)).divisible_by_int(&seven),
        six_term_eta_coords: coords.to_vec(),
        h_orbits: doubling_orbits(7),
    }
}

fn doubling_orbits(n: u32) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for k in 0..n {
        if seen[k as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = k;
        while !seen[x as usize] {
            seen[x as usize] = true;
            orbit.push(x);
            x = (2 * x) % n;
        }
        out.push(orbit);
    }
    out
}

/// Matrix of a linear map of `C^3` on the lattice `u(Z[mu])`, in the basis
/// `u(1), ..., u(mu^5)`, or `None` when the map does not carry `u(Q(mu))`
/// into itself.
pub fn lattice_matrix(m: &GroupMatrix, cm: CMType) -> Option<Matrix<BigRational>> {
    let k3 = cm.embeddings[2];
    let mut cols = Vec::with_capacity(6);
    for j in 0..6 {
        let w = m.apply(&cm.embed(&CycRat::mu_pow(j)));
        // w = u(y) forces y = sigma_{k3}^{-1}(w_3); the other coordinates must agree
        let k3_inv = (1..7).find(|k| (k * k3).rem_euclid(7) == 1).expect("unit");
        let y = w[2].galois(k3_inv).expect("unit");
        if cm.embed(&y) != w {
            return None;
        }
        cols.push(y.coeffs().to_vec());
    }
    Some(Matrix::from_columns(&cols))
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeIntegrality {
    pub name: &'static str,
    /// The map sends `u(Q(mu))` into itself.
    pub rational: bool,
    /// The map sends `u(Z[mu])` into itself.
    pub integral: bool,
}

fn integrality_of(name: &'static str, m: &GroupMatrix) -> LatticeIntegrality {
    match lattice_matrix(m, CMType::STANDARD) {
        None => LatticeIntegrality {
            name,
            rational: false,
            integral: false,
        },
        Some(l) => LatticeIntegrality {
            name,
            rational: true,
            integral: l.entries().all(|x| x.is_integer()),
        },
    }
}

/// Integrality of `g`, `h`, `r` on `u(Z[mu])`.
pub fn lattice_integrality_table() -> Vec<LatticeIntegrality> {
    vec![
        integrality_of("g", &group::g()),
        integrality_of("h", &group::h()),
        integrality_of("r", &group::r()),
    ]
}

/// Whether `r` preserves the lattice `u(Z[mu])`.
pub fn r_lattice_integrality() -> bool {
    integrality_of("r", &group::r()).integral
}

fn eta_matrix_json(m: &Matrix<EtaInt>) -> Value {
    json!(m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// The torus suite.
pub fn run_torus_suite() -> VerificationReport {
    let mut rep = VerificationReport::new("torus");
    let ge = g_eta();
    let ht = h_tilde();

    rep.check(
        "torus.cm_type",
        "(4, 2, 1) and its negatives partition (Z/7)^*",
        CMType::STANDARD.is_cm_type(),
        json!(CMType::STANDARD.embeddings),
    );

    let p = eta_basis_change();
    let det_p = det_int(&p);
    rep.check(
        "torus.eta_basis",
        "1, mu, mu^2 is a Z[eta]-basis of Z[mu]",
        det_p == BigInt::from(1) || det_p == BigInt::from(-1),
        json!({"det": det_p.to_string()}),
    );

    let mu_eta = mu_matrix_in_eta_basis();
    rep.check(
        "torus.mu_in_eta_basis",
        "multiplication by mu in the basis (1, mu, mu^2) equals g_eta",
        mu_eta == ge,
        json!({"computed": eta_matrix_json(&mu_eta)}),
    );

    let h_eta = h_matrix_in_eta_basis();
    rep.check(
        "torus.h_in_eta_basis",
        "mu -> mu^4 in the basis (1, mu, mu^2) equals h~",
        h_eta == ht,
        json!({"computed": eta_matrix_json(&h_eta)}),
    );

    rep.check("torus.g_eta_order", "g_eta^7 = 1", ge.pow(7).is_identity(), Value::Null);
    rep.check("torus.h_tilde_order", "h~^3 = 1", ht.pow(3).is_identity(), Value::Null);

    let det_h = ht.det();
    let ht_inv = det_h.unit_inverse().map(|u| ht.adjugate().scale(&u));
    let conj_ok = ht_inv
        .as_ref()
        .is_some_and(|inv| inv.mul(&ge).mul(&ht) == ge.pow(2));
    rep.check(
        "torus.conjugation",
        "h~^-1 g_eta h~ = g_eta^2",
        conj_ok,
        json!({"det_h_tilde": det_h.to_string()}),
    );

    let cp = ge.char_poly();
    let expected_cp = vec![eta(-1, 0), eta(-1, -1), eta(0, -1), eta(1, 0)];
    let roots: Vec<bool> = [1, 2, 4].iter().map(|&k| char_poly_at_mu(&ge, k).is_zero()).collect();
    rep.check(
        "torus.g_eta_eigenvalues",
        "det(x - g_eta) = x^3 - eta x^2 - (eta+1) x - 1 vanishes at mu, mu^2, mu^4",
        cp == expected_cp && roots.iter().all(|&b| b),
        json!({"char_poly": cp.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "roots": roots}),
    );

    let a_mu = TorusModel::a_mu();
    let e_eta = TorusModel::e_eta_cube();
    let e_omega = TorusModel::e_omega_cube();
    rep.check(
        "torus.automorphisms_unimodular",
        "every stored automorphism has determinant +-1 on its lattice",
        a_mu.automorphisms_are_unimodular()
            && e_eta.automorphisms_are_unimodular()
            && e_omega.automorphisms_are_unimodular(),
        Value::Null,
    );

    let table = lattice_integrality_table();
    let by_name = |n: &str| table.iter().find(|t| t.name == n).expect("present").integral;
    rep.check(
        "torus.r_not_integral",
        "r does not preserve u(Z[mu]) while g and h do",
        by_name("g") && by_name("h") && !by_name("r"),
        json!(table),
    );

    let g_fixed = fixed_subgroup(&e_eta, "g_eta").expect("present");
    let gm = e_eta.int_matrix("g_eta").expect("present");
    let point = eta_cube_generator();
    let point_ok = point.is_fixed_by(&gm) && !point.is_zero();
    rep.check(
        "torus.g_eta_fixed_order",
        "the g_eta-fixed subgroup of E_eta^3 has order 7",
        g_fixed.order() == Some(&BigInt::from(7)),
        json!(g_fixed),
    );
    rep.check(
        "torus.g_eta_fixed_generator",
        "(6+5eta, 2+4eta, 6+5eta)/7 is a nonzero g_eta-fixed point, hence generates",
        point_ok,
        json!(point),
    );

    let m_fixed = fixed_subgroup(&a_mu, "m_mu").expect("present");
    rep.check(
        "torus.m_mu_fixed_order",
        "the m_mu-fixed subgroup of A(mu) has order 7",
        m_fixed.order() == Some(&BigInt::from(7)),
        json!(m_fixed),
    );

    let hm = e_eta.int_matrix("h_tilde").expect("present");
    let h_fixed = fixed_set_of(&hm);
    let first_factor = vec![
        [1, 0, 0, 0, 0, 0].map(BigInt::from).to_vec(),
        [0, 1, 0, 0, 0, 0].map(BigInt::from).to_vec(),
    ];
    let connected = matches!(&h_fixed, FixedSet::Positive { component_invariants, .. } if component_invariants.is_empty());
    rep.check(
        "torus.h_tilde_fixed_torus",
        "the h~-fixed set of E_eta^3 is the connected 1-torus E_eta x 0 x 0",
        connected && same_lattice(&fixed_kernel(&hm), &first_factor),
        json!(h_fixed),
    );

    let w_fixed = fixed_subgroup(&e_omega, "m_omega").expect("present");
    rep.check(
        "torus.m_omega_fixed_order",
        "the omega-fixed subgroup of E_omega^3 has order Norm(omega - 1)^3 = 27",
        w_fixed.order() == Some(&BigInt::from(27)),
        json!(w_fixed),
    );

    let alpha = verify_alpha_claims();
    rep.reported(
        "torus.alpha_truth_table",
        "truth values for the two expressions of the 7-torsion generator alpha of A(mu)",
        json!(alpha),
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basis_change_reproduces_g_eta_and_h_tilde() {
        assert_eq!(mu_matrix_in_eta_basis(), g_eta());
        assert_eq!(h_matrix_in_eta_basis(), h_tilde());
    }

    #[test]
    fn g_eta_third_column() {
        // mu^3 = 1 + (eta+1) mu + eta mu^2
        let rhs = cyc_from_eta_coords(&[eta(1, 0), eta(1, 1), eta(0, 1)]);
        assert_eq!(rhs, CycInt::mu_pow(3));
    }

    #[test]
    fn other_cm_orderings_do_not_give_h_tilde() {
        // permuting the embeddings changes which Galois map the cyclic shift induces
        let shift = group::h();
        let standard = lattice_matrix(&shift, CMType::STANDARD).unwrap();
        let swapped = lattice_matrix(&shift, CMType { embeddings: [1, 2, 4] }).unwrap();
        assert_ne!(standard, swapped);
        let galois4 = TorusModel::a_mu().int_matrix("h").unwrap().map(|x| BigRational::from_integer(x.clone()));
        assert_eq!(standard, galois4);
    }

    #[test]
    fn fixed_orders() {
        let a = TorusModel::a_mu();
        assert_eq!(fixed_subgroup(&a, "m_mu").unwrap().order(), Some(&BigInt::from(7)));
        let w = TorusModel::e_omega_cube();
        assert_eq!(fixed_subgroup(&w, "m_omega").unwrap().order(), Some(&BigInt::from(27)));
        assert!(matches!(fixed_subgroup(&a, "nope"), Err(TorusError::UnknownAutomorphism(_))));
    }

    #[test]
    fn fixed_order_equals_abs_det() {
        for (model, name) in [
            (TorusModel::a_mu(), "m_mu"),
            (TorusModel::e_eta_cube(), "g_eta"),
            (TorusModel::e_omega_cube(), "m_omega"),
        ] {
            let m = model.int_matrix(name).unwrap();
            let d = det_int(&m.sub(&IntMatrix::identity(6)));
            let order = fixed_subgroup(&model, name).unwrap().order().cloned().unwrap();
            assert_eq!(order, num_traits::Signed::abs(&d));
        }
    }

    #[test]
    fn alpha_truth_table() {
        let a = verify_alpha_claims();
        assert!(!a.sum_is_fixed);
        assert!(a.six_term_is_fixed);
        assert!(!a.expressions_agree);
        assert!(a.six_term_doubled_by_h);
        assert!(a.six_term_matches_eta_point);
        assert!(a.seven_torsion);
        assert_eq!(a.h_orbits, vec![vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
    }

    #[test]
    fn integrality_table() {
        let t = lattice_integrality_table();
        assert!(t[0].integral && t[1].integral);
        assert!(!t[2].integral);
        assert!(!r_lattice_integrality());
    }

    #[test]
    fn torsion_point_canonical_form() {
        let p = TorsionPoint::new(vec![BigInt::from(-1), BigInt::from(15)], BigInt::from(7));
        assert_eq!(p.numerator, vec![BigInt::from(6), BigInt::from(1)]);
        let q = TorsionPoint::new(vec![BigInt::from(14), BigInt::from(7)], BigInt::from(7));
        assert!(q.is_zero());
        assert!(p.scale(7).is_zero());
    }

    #[test]
    fn torus_suite_passes() {
        let rep = run_torus_suite();
        assert!(!rep.has_failures(), "{:?}", rep.failures());
    }

    proptest! {
        #[test]
        fn eta_coordinates_round_trip(c in proptest::array::uniform6(-30i64..30)) {
            let x = CycInt::from_ints(c);
            prop_assert_eq!(cyc_from_eta_coords(&eta_coords(&x)), x);
        }

        #[test]
        fn restriction_of_scalars_is_multiplicative(a in proptest::array::uniform4(-6i64..6), b in proptest::array::uniform4(-6i64..6)) {
            let m1 = Matrix::from_rows(vec![vec![eta(a[0], a[1]), eta(a[2], a[3])], vec![eta(a[3], a[0]), eta(a[1], a[2])]]);
            let m2 = Matrix::from_rows(vec![vec![eta(b[0], b[1]), eta(b[2], b[3])], vec![eta(b[3], b[0]), eta(b[1], b[2])]]);
            prop_assert_eq!(restrict_scalars(&m1.mul(&m2)), restrict_scalars(&m1).mul(&restrict_scalars(&m2)));
            prop_assert_eq!(descend_scalars::<crate::cyclotomic::Eta>(&restrict_scalars(&m1)).unwrap(), m1);
        }
    }
}
