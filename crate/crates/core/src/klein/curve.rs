//! Projective geometry of the quartic: coordinate maps to the cyclic cover,
//! tangent divisors at the `g`-fixed points and the divisor-class identities
//! among them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::group::{self, phi4, GroupMatrix};
use crate::cyclotomic::CycRat;
use crate::error::CurveError;
use crate::lattice::{smith_normal_form, solve_integer, IntMatrix};
use crate::matrix::Matrix;
use crate::poly::{rational_roots, MPoly, UPoly};
use crate::ring::{Field, Ring};

/// Point of the projective plane, stored with its first nonzero coordinate 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint<F> {
    coords: [F; 3],
}

impl<F: Field> ProjPoint<F> {
    pub fn new(coords: [F; 3]) -> Option<Self> {
        let lead = coords.iter().find(|c| !c.is_zero())?.inv()?;
        Some(ProjPoint {
            coords: coords.map(|c| c * lead.clone()),
        })
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.coords
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "[{a}:{b}:{c}]")
    }
}

impl<F: Field> fmt::Debug for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type RatPoint = ProjPoint<BigRational>;

/// The three points of the quartic fixed by `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FixedPoint {
    Q0,
    Q1,
    QInf,
}

impl FixedPoint {
    pub const ALL: [FixedPoint; 3] = [FixedPoint::Q0, FixedPoint::Q1, FixedPoint::QInf];

    /// Index of the nonzero coordinate.
    pub fn axis(self) -> usize {
        match self {
            FixedPoint::Q0 => 0,
            FixedPoint::Q1 => 2,
            FixedPoint::QInf => 1,
        }
    }

    pub fn point(self) -> RatPoint {
        let mut c: [BigRational; 3] = std::array::from_fn(|_| BigRational::zero());
        c[self.axis()] = BigRational::one();
        ProjPoint::new(c).expect("nonzero")
    }

    pub fn name(self) -> &'static str {
        match self {
            FixedPoint::Q0 => "q0",
            FixedPoint::Q1 => "q1",
            FixedPoint::QInf => "qinf",
        }
    }

    pub fn from_point(p: &RatPoint) -> Option<Self> {
        Self::ALL.into_iter().find(|q| &q.point() == p)
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Formal sum of points, keyed by name (`q0`, `q1`, `qinf`) or by
/// canonical coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CurveDivisor {
    pub terms: BTreeMap<String, i64>,
}

impl CurveDivisor {
    pub fn add_point(&mut self, p: &RatPoint, mult: i64) {
        let key = FixedPoint::from_point(p).map_or_else(|| p.to_string(), |q| q.name().to_string());
        *self.terms.entry(key).or_insert(0) += mult;
        self.terms.retain(|_, m| *m != 0);
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, q: FixedPoint) -> i64 {
        self.terms.get(q.name()).copied().unwrap_or(0)
    }

    /// Coefficient vector on `(q0, q1, qinf)`, if supported there.
    pub fn fixed_vector(&self) -> Option<[i64; 3]> {
        let v = FixedPoint::ALL.map(|q| self.multiplicity(q));
        (v.iter().sum::<i64>() == self.degree()
            && self.terms.len() == v.iter().filter(|&&m| m != 0).count())
        .then_some(v)
    }
}

impl fmt::Display for CurveDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, m)| if *m == 1 { k.clone() } else { format!("{m}{k}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Gradient of `Phi_4` at a rational point.
pub fn gradient(p: &RatPoint) -> [BigRational; 3] {
    let f = phi4::<BigRational>();
    std::array::from_fn(|i| f.partial(i).eval(p.coords()))
}

/// Intersection divisor of the quartic with its tangent line at `p`.
pub fn tangent_divisor_at(p: &RatPoint) -> Result<(CurveDivisor, [BigRational; 3]), CurveError> {
    let f = phi4::<BigRational>();
    if !f.eval(p.coords()).is_zero() {
        return Err(CurveError::NotCoordinatePoint);
    }
    let a = gradient(p);
    let k = a.iter().position(|c| !c.is_zero()).ok_or(CurveError::Singular)?;
    // a second point on the line a.Z = 0, independent of p
    let other = (0..3)
        .filter(|&j| j != k)
        .map(|j| {
            let mut v: [BigRational; 3] = std::array::from_fn(|_| BigRational::zero());
            v[j] = a[k].clone();
            v[k] = -a[j].clone();
            v
        })
        .find(|v| {
            let m = Matrix::from_rows(vec![p.coords().to_vec(), v.to_vec()]);
            m.rank() == 2
        })
        .expect("line through p has a second point");
    let images: Vec<MPoly<BigRational>> = (0..3)
        .map(|i| {
            MPoly::var(2, 0).scale(&p.coords()[i]) + MPoly::var(2, 1).scale(&other[i])
        })
        .collect();
    let restricted = f.substitute(&images);
    // coefficient of s^(4-j) t^j
    let c: Vec<BigRational> = (0..=4u32).map(|j| restricted.coeff(&[4 - j, j])).collect();
    let at_p = c.iter().take_while(|x| x.is_zero()).count();
    let mut div = CurveDivisor::default();
    div.add_point(p, at_p as i64);
    // remaining roots [s:1] of sum c_j s^(4-j)
    let rest: Vec<BigRational> = (at_p..=4).rev().map(|j| c[j].clone()).collect();
    let (roots, cofactor) = rational_roots(&UPoly::new(rest));
    if cofactor.degree().unwrap_or(0) > 0 {
        return Err(CurveError::NonReducible);
    }
    for (s, m) in roots {
        let pt: [BigRational; 3] =
            std::array::from_fn(|i| s.clone() * p.coords()[i].clone() + other[i].clone());
        div.add_point(&ProjPoint::new(pt).expect("nonzero"), m as i64);
    }
    Ok((div, a))
}

pub fn tangent_divisor(q: FixedPoint) -> Result<CurveDivisor, CurveError> {
    tangent_divisor_at(&q.point()).map(|(d, _)| d)
}

/// Eigenvalue of `g` on the tangent space of the curve at `q`, read off as
/// the action on the local parameter `Z_j / Z_i` where `Z_i` is the nonzero
/// coordinate of `q` and `Z_j` is not the tangent line.
pub fn local_eigenvalue(q: FixedPoint) -> Result<CycRat, CurveError> {
    let (_, grad) = tangent_divisor_at(&q.point())?;
    let i = q.axis();
    let k = grad.iter().position(|c| !c.is_zero()).ok_or(CurveError::Singular)?;
    if grad.iter().filter(|c| !c.is_zero()).count() != 1 {
        return Err(CurveError::NotCoordinatePoint);
    }
    let j = (0..3).find(|&j| j != i && j != k).ok_or(CurveError::Singular)?;
    let g = group::g();
    Ok(g[(j, j)].clone() * g[(i, i)].inv().expect("unit"))
}

/// Rational function `num / den` in `Z1, Z2, Z3`, compared on the quartic.
#[derive(Clone, Debug)]
pub struct CurveFn {
    pub num: MPoly<CycRat>,
    pub den: MPoly<CycRat>,
}

impl CurveFn {
    pub fn new(num: MPoly<CycRat>, den: MPoly<CycRat>) -> Self {
        CurveFn { num, den }
    }

    pub fn constant(c: CycRat) -> Self {
        CurveFn::new(MPoly::constant(3, c), MPoly::one(3))
    }

    fn z(i: usize) -> MPoly<CycRat> {
        MPoly::var(3, i)
    }

    /// `Y = Z2 / Z3`.
    pub fn y() -> Self {
        CurveFn::new(Self::z(1), Self::z(2))
    }

    /// `X = -Z2^3 / (Z3^2 Z1)`.
    pub fn x() -> Self {
        CurveFn::new(-Self::z(1).pow(3), Self::z(2).pow(2) * Self::z(0))
    }

    pub fn inv(&self) -> Self {
        CurveFn::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        CurveFn::new(self.num.pow(e), self.den.pow(e))
    }

    /// `f o M`, substituting `Z -> M Z`.
    pub fn compose_linear(&self, m: &GroupMatrix) -> Self {
        let images: Vec<MPoly<CycRat>> = (0..3)
            .map(|i| (0..3).fold(MPoly::zero(3), |acc, j| acc + Self::z(j).scale(&m[(i, j)])))
            .collect();
        CurveFn::new(self.num.substitute(&images), self.den.substitute(&images))
    }

    /// Whether the numerator lies in the ideal of the quartic.
    pub fn vanishes_on_curve(&self) -> bool {
        self.num.reduce(&[phi4()]).is_zero()
    }

    pub fn equals_on_curve(&self, other: &CurveFn) -> bool {
        (self.clone() - other.clone()).vanishes_on_curve()
    }
}

impl Sub for CurveFn {
    type Output = CurveFn;
    fn sub(self, o: CurveFn) -> CurveFn {
        CurveFn::new(
            self.num * o.den.clone() - o.num * self.den.clone(),
            self.den * o.den,
        )
    }
}

impl Mul for CurveFn {
    type Output = CurveFn;
    fn mul(self, o: CurveFn) -> CurveFn {
        CurveFn::new(self.num * o.num, self.den * o.den)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordinateMapChecks {
    /// `Y^7 - X^2 (X - 1)` lies in the ideal of the quartic.
    pub cover_equation: bool,
    /// `X o g = X` and `Y o g = mu Y`.
    pub g_action: bool,
    /// `X o h = 1 / (1 - X)` and `Y o h = -X / Y^3`.
    pub h_action: bool,
    /// The affine `h` maps the cover to itself.
    pub h_preserves_cover: bool,
    /// The affine `h` composed three times is the identity.
    pub h_order_three: bool,
}

impl CoordinateMapChecks {
    pub fn all(&self) -> bool {
        self.cover_equation && self.g_action && self.h_action && self.h_preserves_cover && self.h_order_three
    }
}

pub fn coordinate_maps() -> CoordinateMapChecks {
    let x = CurveFn::x();
    let y = CurveFn::y();
    let one = CurveFn::constant(CycRat::one());
    let cover = y.pow(7) - x.pow(2) * (x.clone() - one.clone());

    let g = group::g();
    let g_action = x.compose_linear(&g).equals_on_curve(&x)
        && y.compose_linear(&g).equals_on_curve(&(CurveFn::constant(CycRat::mu()) * y.clone()));

    let h = group::h();
    let neg_x = CurveFn::constant(-CycRat::one()) * x.clone();
    let h_action = x.compose_linear(&h).equals_on_curve(&(one - x.clone()).inv())
        && y.compose_linear(&h).equals_on_curve(&(neg_x * y.pow(3).inv()));

    let (x3, y3) = super::function_field::h_cubed_on_generators();
    use super::function_field::FuncFieldElem;
    CoordinateMapChecks {
        cover_equation: cover.vanishes_on_curve(),
        g_action,
        h_action,
        h_preserves_cover: super::function_field::h_image_equation_residual().is_zero(),
        h_order_three: x3 == FuncFieldElem::x() && y3 == FuncFieldElem::y(),
    }
}

/// One identity `D ~ D'` between effective degree-3 divisors on the fixed
/// points, with a common point `x` such that `D + x` and `D' + x` are both
/// tangent divisors.
#[derive(Clone, Debug, Serialize)]
pub struct PhiqIdentity {
    pub lhs: [i64; 3],
    pub rhs: [i64; 3],
    pub in_relation_lattice: bool,
    pub common_point: Option<FixedPoint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiqReport {
    pub tangent_vectors: Vec<[i64; 3]>,
    /// Index of the tangent-difference lattice in the degree-0 lattice.
    pub relation_index: BigInt,
    pub identities: Vec<PhiqIdentity>,
    pub symmetric_cube_size: usize,
    /// Classes of `S^3(K^g)` modulo the relation lattice.
    pub pairs: Vec<[[i64; 3]; 2]>,
    pub singletons: Vec<[i64; 3]>,
}

/// `(q0, q1, qinf)` multiplicities of `2q0+q1 ~ 3qinf`, `2q1+qinf ~ 3q0`,
/// `2qinf+q0 ~ 3q1`.
pub const PHIQ: [([i64; 3], [i64; 3]); 3] = [
    ([2, 1, 0], [0, 0, 3]),
    ([0, 2, 1], [3, 0, 0]),
    ([1, 0, 2], [0, 3, 0]),
];

/// `q1 + 2qinf`, `2q0 + qinf`, `q0 + q1 + qinf`, `q0 + 2q1`.
pub const SINGLETONS: [[i64; 3]; 4] = [[0, 1, 2], [2, 0, 1], [1, 1, 1], [1, 2, 0]];

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn sub3(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn phiq_identities() -> Result<PhiqReport, CurveError> {
    let tangents: Vec<[i64; 3]> = FixedPoint::ALL
        .iter()
        .map(|&q| tangent_divisor(q)?.fixed_vector().ok_or(CurveError::NotCoordinatePoint))
        .collect::<Result<_, _>>()?;
    let diffs: Vec<Vec<i64>> = (0..3)
        .map(|i| sub3(&tangents[i], &tangents[(i + 1) % 3]).to_vec())
        .collect();
    let lattice = IntMatrix::from_columns(&diffs.iter().map(|d| big(d)).collect::<Vec<_>>());
    let in_lattice = |v: &[i64; 3]| solve_integer(&lattice, &big(v)).is_some();

    // coordinates in the degree-0 basis (1,-1,0), (0,1,-1)
    let deg0 = IntMatrix::from_columns(
        &diffs
            .iter()
            .map(|d| big(&[d[0], -d[2]]))
            .collect::<Vec<_>>(),
    );
    let snf = smith_normal_form(&deg0);
    let relation_index = snf.invariant_factors().iter().product();

    let identities = PHIQ
        .iter()
        .map(|(l, r)| {
            let common_point = FixedPoint::ALL.into_iter().find(|x| {
                let mut l2 = *l;
                let mut r2 = *r;
                l2[x.index()] += 1;
                r2[x.index()] += 1;
                tangents.contains(&l2) && tangents.contains(&r2)
            });
            PhiqIdentity {
                lhs: *l,
                rhs: *r,
                in_relation_lattice: in_lattice(&sub3(l, r)),
                common_point,
            }
        })
        .collect();

    let mut cube = Vec::new();
    for a in (0..=3).rev() {
        for b in (0..=3 - a).rev() {
            cube.push([a, b, 3 - a - b]);
        }
    }
    let mut classes: Vec<Vec<[i64; 3]>> = Vec::new();
    for d in &cube {
        match classes.iter_mut().find(|c| in_lattice(&sub3(&c[0], d))) {
            Some(c) => c.push(*d),
            None => classes.push(vec![*d]),
        }
    }
    let pairs = classes.iter().filter(|c| c.len() == 2).map(|c| [c[0], c[1]]).collect();
    let singletons = classes.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    Ok(PhiqReport {
        tangent_vectors: tangents,
        relation_index,
        identities,
        symmetric_cube_size: cube.len(),
        pairs,
        singletons,
    })
}

impl PhiqReport {
    /// Every identity holds, the pairs are exactly the identities and the
    /// singletons are exactly the four listed classes.
    pub fn consistent(&self) -> bool {
        let ids_ok = self
            .identities
            .iter()
            .all(|i| i.in_relation_lattice && i.common_point.is_some());
        let mut pairs: Vec<[[i64; 3]; 2]> = self
            .pairs
            .iter()
            .map(|p| {
                let mut p = *p;
                p.sort();
                p
            })
            .collect();
        pairs.sort();
        let mut expected: Vec<[[i64; 3]; 2]> = PHIQ
            .iter()
            .map(|(l, r)| {
                let mut p = [*l, *r];
                p.sort();
                p
            })
            .collect();
        expected.sort();
        let mut singles = self.singletons.clone();
        singles.sort();
        let mut exp_singles = SINGLETONS.to_vec();
        exp_singles.sort();
        ids_ok && self.symmetric_cube_size == 10 && pairs == expected && singles == exp_singles
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_points_are_canonical() {
        let a = ProjPoint::new([BigRational::from_int(0), BigRational::from_int(2), BigRational::from_int(4)]).unwrap();
        let b = ProjPoint::new([BigRational::from_int(0), BigRational::from_int(-1), BigRational::from_int(-2)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[0:1:2]");
        assert!(ProjPoint::<BigRational>::new(std::array::from_fn(|_| BigRational::zero())).is_none());
    }

    #[test]
    fn tangent_divisors_at_fixed_points() {
        let v: Vec<[i64; 3]> = FixedPoint::ALL
            .iter()
            .map(|&q| tangent_divisor(q).unwrap().fixed_vector().unwrap())
            .collect();
        assert_eq!(v, vec![[3, 1, 0], [0, 3, 1], [1, 0, 3]]);
        for q in FixedPoint::ALL {
            let d = tangent_divisor(q).unwrap();
            assert_eq!(d.degree(), 4);
            assert!(d.multiplicity(q) >= 2);
        }
    }

    #[test]
    fn tangent_line_at_q0_is_z2() {
        let (_, grad) = tangent_divisor_at(&FixedPoint::Q0.point()).unwrap();
        assert_eq!(grad, [BigRational::zero(), BigRational::one(), BigRational::zero()]);
    }

    #[test]
    fn tangent_rejects_points_off_curve() {
        let off = ProjPoint::new([BigRational::one(), BigRational::from_int(-1), BigRational::zero()]).unwrap();
        assert_eq!(tangent_divisor_at(&off).unwrap_err(), CurveError::NotCoordinatePoint);
    }

    #[test]
    fn local_eigenvalues_match_units() {
        assert_eq!(local_eigenvalue(FixedPoint::Q0).unwrap(), CycRat::mu_pow(4));
        assert_eq!(local_eigenvalue(FixedPoint::Q1).unwrap(), CycRat::mu());
        assert_eq!(local_eigenvalue(FixedPoint::QInf).unwrap(), CycRat::mu_pow(2));
    }

    #[test]
    fn coordinate_maps_hold() {
        let c = coordinate_maps();
        assert!(c.all(), "{c:?}");
    }

    #[test]
    fn wrong_cover_equation_is_detected() {
        let x = CurveFn::x();
        let y = CurveFn::y();
        let bad = y.pow(7) - x.pow(2);
        assert!(!bad.vanishes_on_curve());
    }

    #[test]
    fn phiq_classes() {
        let r = phiq_identities().unwrap();
        assert_eq!(r.relation_index, BigInt::from(7));
        assert_eq!(r.symmetric_cube_size, 10);
        assert_eq!(r.pairs.len(), 3);
        assert_eq!(r.singletons.len(), 4);
        assert!(r.consistent());
        assert_eq!(r.identities[0].common_point, Some(FixedPoint::Q0));
    }

    #[test]
    fn divisor_display() {
        let d = tangent_divisor(FixedPoint::Q0).unwrap();
        assert_eq!(d.to_string(), "3q0 + q1");
    }
}
