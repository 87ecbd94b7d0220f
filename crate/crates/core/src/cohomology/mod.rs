//! Integral third cohomology of `E_tau^3`, the holomorphic volume form in the
//! dual basis `(e_j*, f_j*)` and the 1-torus cut out by the invariant lattice.

pub mod beta;
pub mod forms;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CohomologyError;
use crate::lattice::{det_int, integer_kernel, smith_normal_form, solve_integer, IntMatrix};
use crate::matrix::Matrix;
use crate::report::{int_json, VerificationReport};
use crate::ring::{rat, Ring};
use crate::torus::TorusModel;

pub use beta::{reduce_modulus, BetaField, CBeta, QBeta};
pub use forms::{lift3, triples, IntThreeForm, COVECTORS, DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum TauTag {
    Omega,
    Eta,
    Other,
}

/// `tau = alpha + i beta` with `beta > 0` given through `beta^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauData {
    pub tag: TauTag,
    #[serde(serialize_with = "ser_rat")]
    pub alpha: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub beta_sq: BigRational,
}

fn ser_rat<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl TauData {
    pub fn omega() -> Self {
        TauData {
            tag: TauTag::Omega,
            alpha: rat(-1, 2),
            beta_sq: rat(3, 4),
        }
    }

    pub fn eta() -> Self {
        TauData {
            tag: TauTag::Eta,
            alpha: rat(-1, 2),
            beta_sq: rat(7, 4),
        }
    }

    pub fn new(alpha: BigRational, beta_sq: BigRational) -> Self {
        TauData {
            tag: TauTag::Other,
            alpha,
            beta_sq,
        }
    }

    pub fn field(&self) -> BetaField {
        BetaField::new(self.beta_sq.clone())
    }

    pub fn tau(&self) -> CBeta {
        CBeta::new(QBeta::rational(self.alpha.clone()), self.field().beta())
    }

    /// `c = alpha^2 + beta^2`, the constant of `tau^2 + tau + c` when `alpha = -1/2`.
    pub fn c(&self) -> BigRational {
        &self.alpha * &self.alpha + &self.beta_sq
    }

    /// Whether `tau^2 + tau + c = 0` holds exactly.
    pub fn satisfies_quadratic(&self) -> bool {
        let k = self.field();
        let t = self.tau();
        let lhs = k.cmul(&t, &t) + t + CBeta::real(QBeta::rational(self.c()));
        lhs == CBeta::real(QBeta::zero())
    }

    /// Torus model and automorphism generating the group for this `tau`.
    pub fn group(&self) -> Option<(TorusModel, &'static str)> {
        match self.tag {
            TauTag::Omega => Some((TorusModel::e_omega_cube(), "m_omega")),
            TauTag::Eta => Some((TorusModel::e_eta_cube(), "g_eta")),
            TauTag::Other => None,
        }
    }
}

/// 3-form with coefficients in `Q(beta)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymThreeForm {
    pub coeffs: Vec<QBeta>,
}

impl SymThreeForm {
    /// Rational parts and `beta` parts as two rational vectors.
    pub fn split(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        (
            self.coeffs.iter().map(|c| c.x.clone()).collect(),
            self.coeffs.iter().map(|c| c.y.clone()).collect(),
        )
    }

    pub fn from_int(f: &IntThreeForm, scale: &QBeta, k: &BetaField) -> Self {
        SymThreeForm {
            coeffs: f
                .coeffs()
                .iter()
                .map(|c| k.mul(&QBeta::rational(BigRational::from_integer(c.clone())), scale))
                .collect(),
        }
    }
}

impl std::ops::Add for SymThreeForm {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        SymThreeForm {
            coeffs: self.coeffs.into_iter().zip(o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Determinant of a 3x3 matrix over `Q(beta)(i)`.
fn det3(k: &BetaField, m: &[[CBeta; 3]; 3]) -> CBeta {
    let mut acc = CBeta::real(QBeta::zero());
    for (p, sign) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)] {
        let t = k.cmul(&k.cmul(&m[0][p[0]], &m[1][p[1]]), &m[2][p[2]]);
        acc = if sign > 0 { acc + t } else { acc - t };
    }
    acc
}

/// `Omega = (e1* + tau f1*) ^ (e2* + tau f2*) ^ (e3* + tau f3*)`, split into
/// real and imaginary parts.
pub fn omega_expansion(tau: &TauData) -> (SymThreeForm, SymThreeForm) {
    let k = tau.field();
    let t = tau.tau();
    let zero = CBeta::real(QBeta::zero());
    let one = CBeta::real(QBeta::rational(BigRational::one()));
    let dz: Vec<Vec<CBeta>> = (0..3)
        .map(|j| {
            (0..6)
                .map(|i| match (i / 2 == j, i % 2) {
                    (true, 0) => one.clone(),
                    (true, _) => t.clone(),
                    _ => zero.clone(),
                })
                .collect()
        })
        .collect();
    let omega: Vec<CBeta> = triples()
        .iter()
        .map(|tr| {
            let m: [[CBeta; 3]; 3] = std::array::from_fn(|r| std::array::from_fn(|c| dz[r][tr[c]].clone()));
            det3(&k, &m)
        })
        .collect();
    (
        SymThreeForm {
            coeffs: omega.iter().map(|c| c.re.clone()).collect(),
        },
        SymThreeForm {
            coeffs: omega.iter().map(|c| c.im.clone()).collect(),
        },
    )
}

fn f_count(t: &[usize; 3]) -> usize {
    t.iter().filter(|&&i| i % 2 == 1).count()
}

/// Closed-form coefficients by number of `f` factors: real parts
/// `1, alpha, alpha^2 - beta^2, alpha^3 - 3 alpha beta^2` and imaginary parts
/// `0, beta, 2 alpha beta, 3 alpha^2 beta - beta^3`, on the eight monomials
/// taking one covector from each factor.
pub fn omega_closed_form(tau: &TauData) -> (SymThreeForm, SymThreeForm) {
    let a = &tau.alpha;
    let v = &tau.beta_sq;
    let k = tau.field();
    let re_by_f = [
        BigRational::one(),
        a.clone(),
        a * a - v,
        a * a * a - BigRational::from_int(3) * a * v,
    ];
    let im_by_f = [
        BigRational::zero(),
        BigRational::one(),
        BigRational::from_int(2) * a,
        BigRational::from_int(3) * a * a - v,
    ];
    let mut re = Vec::with_capacity(DIM);
    let mut im = Vec::with_capacity(DIM);
    for t in triples() {
        let one_per_factor = t[0] / 2 == 0 && t[1] / 2 == 1 && t[2] / 2 == 2;
        if one_per_factor {
            let n = f_count(t);
            re.push(QBeta::rational(re_by_f[n].clone()));
            im.push(k.mul(&QBeta::rational(im_by_f[n].clone()), &k.beta()));
        } else {
            re.push(QBeta::zero());
            im.push(QBeta::zero());
        }
    }
    (SymThreeForm { coeffs: re }, SymThreeForm { coeffs: im })
}

/// The integral forms `A` and `B` with `Re Omega = A - B/2` and
/// `Im Omega = beta B` for `alpha = -1/2`.
pub fn ab_forms(tag: TauTag) -> Option<(IntThreeForm, IntThreeForm)> {
    let two_f = ["e1 f2 f3", "f1 e2 f3", "f1 f2 e3"];
    let one_f = ["e1 e2 f3", "e1 f2 e3", "f1 e2 e3"];
    let (fff_a, two_a, fff_b) = match tag {
        TauTag::Omega => (1, -1, 0),
        TauTag::Eta => (2, -2, -1),
        TauTag::Other => return None,
    };
    let mut a_terms = vec![("e1 e2 e3", 1), ("f1 f2 f3", fff_a)];
    a_terms.extend(two_f.iter().map(|m| (*m, two_a)));
    let mut b_terms = vec![("f1 f2 f3", fff_b)];
    b_terms.extend(one_f.iter().map(|m| (*m, 1)));
    b_terms.extend(two_f.iter().map(|m| (*m, -1)));
    Some((IntThreeForm::from_monomials(&a_terms), IntThreeForm::from_monomials(&b_terms)))
}

/// Matrix of the pullback on `H^1` in the basis `(e1*, f1*, e2*, f2*, e3*, f3*)`:
/// the transpose of the action on `H_1 = Z^6`.
pub fn dual_action(h1: &Matrix<BigRational>) -> Result<IntMatrix, CohomologyError> {
    if h1.entries().any(|x| !x.is_integer()) {
        return Err(CohomologyError::NonIntegral);
    }
    Ok(h1.transpose().map(|x| x.to_integer()))
}

pub fn induced_h1_action(model: &TorusModel, aut: &str) -> Result<IntMatrix, CohomologyError> {
    let m = model.int_matrix(aut)?;
    dual_action(&m.map(|x| BigRational::from_integer(x.clone())))
}

/// Saturated basis of the invariants of the `Lambda^3` lift of `action`.
pub fn invariant_sublattice(action: &IntMatrix) -> Vec<IntThreeForm> {
    let rho = lift3(action);
    let fixed = rho.sub(&Matrix::identity(DIM));
    integer_kernel(&fixed).into_iter().map(IntThreeForm::from_coeffs).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct AbBasisReport {
    pub tau: TauData,
    pub a: IntThreeForm,
    pub b: IntThreeForm,
    pub invariant_basis: Vec<IntThreeForm>,
    /// Columns: coordinates of `A` and `B` in the invariant basis.
    #[serde(serialize_with = "ser_int_matrix")]
    pub change_of_basis: IntMatrix,
    #[serde(serialize_with = "ser_int")]
    pub change_det: BigInt,
    /// Coefficients of `e1^e2^e3` and `e1^e2^f3` in `A` and `B`.
    #[serde(serialize_with = "ser_int_matrix")]
    pub leading_minor: IntMatrix,
    #[serde(serialize_with = "ser_int")]
    pub minor_det: BigInt,
    pub a_b_invariant: bool,
    /// `Re Omega = A + alpha B` and `Im Omega = beta B`.
    pub omega_in_terms_of_ab: bool,
    /// The invariant lattice spans the same real plane as `Re Omega, Im Omega`.
    pub spans_omega_plane: bool,
    /// `Omega` is fixed by the lifted action.
    pub omega_invariant: bool,
}

fn ser_int<S: serde::Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    int_json(n).serialize(s)
}

fn ser_int_matrix<S: serde::Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<Value>> = m.to_rows().iter().map(|r| r.iter().map(int_json).collect()).collect();
    rows.serialize(s)
}

impl AbBasisReport {
    pub fn unimodular(&self) -> bool {
        let one = BigInt::from(1);
        self.change_det == one || self.change_det == -one
    }

    pub fn passes(&self) -> bool {
        self.unimodular()
            && (self.minor_det == BigInt::from(1) || self.minor_det == BigInt::from(-1))
            && self.a_b_invariant
            && self.omega_in_terms_of_ab
            && self.spans_omega_plane
            && self.omega_invariant
    }
}

fn rat_vec(f: &IntThreeForm) -> Vec<BigRational> {
    f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

pub fn verify_ab_basis(tau: &TauData) -> Result<AbBasisReport, CohomologyError> {
    let (model, aut) = tau.group().ok_or(CohomologyError::Degenerate)?;
    let (a, b) = ab_forms(tau.tag).ok_or(CohomologyError::Degenerate)?;
    let action = induced_h1_action(&model, aut)?;
    let rho = lift3(&action);
    let a_b_invariant = a.apply(&rho) == a && b.apply(&rho) == b;
    if !a_b_invariant {
        return Err(CohomologyError::NotInLattice);
    }
    let basis = invariant_sublattice(&action);
    let cols: Vec<Vec<BigInt>> = basis.iter().map(|f| f.coeffs().to_vec()).collect();
    let bm = IntMatrix::from_columns(&cols);
    let ca = solve_integer(&bm, a.coeffs()).ok_or(CohomologyError::NotInLattice)?;
    let cb = solve_integer(&bm, b.coeffs()).ok_or(CohomologyError::NotInLattice)?;
    let change = IntMatrix::from_columns(&[ca, cb]);
    let change_det = if change.is_square() { det_int(&change) } else { BigInt::zero() };

    let pick = ["e1 e2 e3", "e1 e2 f3"];
    let leading_minor = Matrix::from_fn(2, 2, |i, j| if j == 0 { a.coeff(pick[i]) } else { b.coeff(pick[i]) });
    let minor_det = det_int(&leading_minor);

    let k = tau.field();
    let (re, im) = omega_expansion(tau);
    let alpha = QBeta::rational(tau.alpha.clone());
    let omega_in_terms_of_ab = re == SymThreeForm::from_int(&a, &QBeta::rational(BigRational::one()), &k)
        + SymThreeForm::from_int(&b, &alpha, &k)
        && im == SymThreeForm::from_int(&b, &k.beta(), &k);

    // Re Omega is rational and Im Omega is beta times a rational vector
    let (re_x, re_y) = re.split();
    let (im_x, im_y) = im.split();
    let real_parts_ok = re_y.iter().all(Ring::is_zero) && im_x.iter().all(Ring::is_zero);
    let mut stacked = vec![re_x.clone(), im_y.clone()];
    stacked.extend(basis.iter().map(rat_vec));
    let spans_omega_plane = real_parts_ok
        && basis.len() == 2
        && Matrix::from_rows(stacked).rank() == 2
        && Matrix::from_rows(vec![re_x.clone(), im_y.clone()]).rank() == 2;

    let rho_q = rho.map(|x| BigRational::from_integer(x.clone()));
    let omega_invariant = rho_q.apply(&re_x) == re_x && rho_q.apply(&im_y) == im_y;

    Ok(AbBasisReport {
        tau: tau.clone(),
        a,
        b,
        invariant_basis: basis,
        change_of_basis: change,
        change_det,
        leading_minor,
        minor_det,
        a_b_invariant,
        omega_in_terms_of_ab,
        spans_omega_plane,
        omega_invariant,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeModulus {
    pub tau: TauData,
    /// `1 - (alpha/beta) i` and `i / beta`.
    pub generators: [CBeta; 2],
    /// Reduced `g2 / g1`.
    pub modulus: CBeta,
    /// Reduced `tau`.
    pub reduced_tau: CBeta,
}

impl LatticeModulus {
    pub fn matches_tau(&self) -> bool {
        self.modulus == self.reduced_tau
    }
}

/// Lattice `Z(1 - (alpha/beta) i) + Z(i/beta)` obtained by writing the
/// `bar(Omega)/2`-components of the integral basis dual to
/// `(Re Omega, Im Omega) = (A, B) [[1, 0], [alpha, beta]]`, reduced to the
/// fundamental domain.
pub fn intermediate_jacobian(tau: &TauData) -> Result<LatticeModulus, CohomologyError> {
    let k = tau.field();
    let beta = k.beta();
    let beta_inv = k.inv(&beta).ok_or(CohomologyError::Degenerate)?;
    let alpha = QBeta::rational(tau.alpha.clone());
    // (A, B) = (Re Omega, Im Omega) P^-1 with P^-1 = [[1, 0], [-alpha/beta, 1/beta]];
    // Re Omega and Im Omega contribute 1 and i to twice the bar(Omega) component
    let one = CBeta::real(QBeta::rational(BigRational::one()));
    let i = CBeta::i();
    let p_inv = [
        [QBeta::rational(BigRational::one()), QBeta::zero()],
        [-k.mul(&alpha, &beta_inv), beta_inv.clone()],
    ];
    let comp = [one, i];
    let gens: [CBeta; 2] = std::array::from_fn(|col| {
        (0..2).fold(CBeta::real(QBeta::zero()), |acc, row| {
            acc + k.cmul(&comp[row], &CBeta::real(p_inv[row][col].clone()))
        })
    });
    let g1_inv = k.cinv(&gens[0]).ok_or(CohomologyError::Degenerate)?;
    let ratio = k.cmul(&gens[1], &g1_inv);
    let modulus = reduce_modulus(&k, &ratio).ok_or(CohomologyError::Degenerate)?;
    let reduced_tau = reduce_modulus(&k, &tau.tau()).ok_or(CohomologyError::Degenerate)?;
    Ok(LatticeModulus {
        tau: tau.clone(),
        generators: gens,
        modulus,
        reduced_tau,
    })
}

fn sym_json(f: &SymThreeForm) -> Value {
    json!(f.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

/// The cohomology suite.
pub fn run_cohomology_suite() -> VerificationReport {
    let mut rep = VerificationReport::new("cohomology");
    for tau in [TauData::omega(), TauData::eta()] {
        let name = match tau.tag {
            TauTag::Omega => "omega",
            TauTag::Eta => "eta",
            TauTag::Other => "other",
        };
        rep.check(
            &format!("cohomology.{name}.quadratic"),
            "tau^2 + tau + c = 0 with c = alpha^2 + beta^2",
            tau.satisfies_quadratic(),
            json!({"c": tau.c().to_string()}),
        );

        let (re, im) = omega_expansion(&tau);
        let (cre, cim) = omega_closed_form(&tau);
        rep.check(
            &format!("cohomology.{name}.omega_expansion"),
            "dz1^dz2^dz3 expands with coefficients tau^k on monomials with k f-factors",
            re == cre && im == cim,
            json!({"re": sym_json(&re), "im": sym_json(&im)}),
        );

        let (model, aut) = tau.group().expect("paper cases have a group");
        let action = induced_h1_action(&model, aut);
        let order = if tau.tag == TauTag::Omega { 3 } else { 7 };
        let order_ok = action.as_ref().is_ok_and(|m| m.pow(order).is_identity() && !m.is_identity());
        rep.check(
            &format!("cohomology.{name}.h1_action"),
            "the induced action on H^1 is integral of the expected order",
            order_ok,
            json!({"order": order}),
        );

        let rank = action.as_ref().map(|m| invariant_sublattice(m).len()).unwrap_or(0);
        rep.check(
            &format!("cohomology.{name}.invariant_rank"),
            "H^3(T, Z)^G has rank 2",
            rank == 2,
            json!({"rank": rank}),
        );

        match verify_ab_basis(&tau) {
            Ok(ab) => {
                rep.check(
                    &format!("cohomology.{name}.ab_basis"),
                    "A, B are invariant and form an integral basis of H^3(T, Z)^G",
                    ab.passes(),
                    serde_json::to_value(&ab).unwrap_or(Value::Null),
                );
            }
            Err(e) => rep.check(
                &format!("cohomology.{name}.ab_basis"),
                "A, B are invariant and form an integral basis of H^3(T, Z)^G",
                false,
                json!({"error": e.to_string()}),
            ),
        }

        let jac = intermediate_jacobian(&tau);
        rep.check(
            &format!("cohomology.{name}.intermediate_jacobian"),
            "H^{0,3} / H^3(T, Z)^G is homothetic to C / (Z + Z tau)",
            jac.as_ref().is_ok_and(LatticeModulus::matches_tau),
            jac.as_ref()
                .map(|j| serde_json::to_value(j).unwrap_or(Value::Null))
                .unwrap_or_else(|e| json!({"error": e.to_string()})),
        );
    }
    rep
}

/// Elementary divisors of `rho - 1` on `Lambda^3`, for diagnostics.
pub fn lift_fixed_invariants(action: &IntMatrix) -> Vec<BigInt> {
    let rho = lift3(action);
    smith_normal_form(&rho.sub(&Matrix::identity(DIM))).invariant_factors()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_expansion_matches_closed_form() {
        for tau in [TauData::omega(), TauData::eta(), TauData::new(rat(1, 3), rat(5, 2))] {
            assert_eq!(omega_expansion(&tau), omega_closed_form(&tau));
        }
    }

    #[test]
    fn leading_coefficient_is_one() {
        let (re, im) = omega_expansion(&TauData::eta());
        let pos = forms::triple_index([0, 2, 4]).unwrap();
        assert_eq!(re.coeffs[pos], QBeta::rational(BigRational::one()));
        assert!(im.coeffs[pos].is_zero());
    }

    #[test]
    fn omega_in_terms_of_a_and_b() {
        for tau in [TauData::omega(), TauData::eta()] {
            let k = tau.field();
            let (a, b) = ab_forms(tau.tag).unwrap();
            let (re, im) = omega_expansion(&tau);
            let half = QBeta::rational(rat(-1, 2));
            let expected_re = SymThreeForm::from_int(&a, &QBeta::rational(BigRational::one()), &k)
                + SymThreeForm::from_int(&b, &half, &k);
            assert_eq!(re, expected_re);
            assert_eq!(im, SymThreeForm::from_int(&b, &k.beta(), &k));
        }
    }

    #[test]
    fn identity_action_has_full_invariants() {
        let id: IntMatrix = Matrix::identity(6);
        assert_eq!(invariant_sublattice(&id).len(), 20);
    }

    #[test]
    fn omega_block_has_order_three() {
        let m = induced_h1_action(&TorusModel::e_omega_cube(), "m_omega").unwrap();
        assert!(m.pow(3).is_identity());
        // per-factor block of multiplication by omega, transposed
        assert_eq!(m[(0, 0)], BigInt::from(0));
        assert_eq!(m[(0, 1)], BigInt::from(1));
        assert_eq!(m[(1, 0)], BigInt::from(-1));
        assert_eq!(m[(1, 1)], BigInt::from(-1));
    }

    #[test]
    fn g_eta_action_has_order_seven() {
        let m = induced_h1_action(&TorusModel::e_eta_cube(), "g_eta").unwrap();
        assert!(m.pow(7).is_identity());
        assert_eq!(invariant_sublattice(&m).len(), 2);
    }

    #[test]
    fn ab_basis_is_unimodular() {
        for tau in [TauData::omega(), TauData::eta()] {
            let r = verify_ab_basis(&tau).unwrap();
            assert!(r.passes(), "{r:?}");
        }
    }

    #[test]
    fn non_integral_action_rejected() {
        let m = Matrix::from_fn(6, 6, |i, j| if i == j { rat(1, 2) } else { BigRational::zero() });
        assert_eq!(dual_action(&m), Err(CohomologyError::NonIntegral));
        assert!(matches!(
            induced_h1_action(&TorusModel::e_eta_cube(), "nope"),
            Err(CohomologyError::Torus(_))
        ));
    }

    #[test]
    fn jacobian_moduli() {
        for tau in [TauData::omega(), TauData::eta()] {
            let j = intermediate_jacobian(&tau).unwrap();
            assert!(j.matches_tau());
            assert_eq!(j.modulus, tau.tau());
        }
        let gaussian = TauData::new(BigRational::zero(), BigRational::one());
        let j = intermediate_jacobian(&gaussian).unwrap();
        assert_eq!(j.modulus, CBeta::i());
    }

    #[test]
    fn suite_passes() {
        let rep = run_cohomology_suite();
        assert!(!rep.has_failures(), "{:?}", rep.failures());
    }
}
