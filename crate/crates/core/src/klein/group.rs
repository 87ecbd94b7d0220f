//! The order-168 matrix group generated by `g`, `h`, `r` in `SL_3(Q(mu))`.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::cyclotomic::{CycInt, CycRat};
use crate::matrix::Matrix;
use crate::poly::MPoly;
use crate::ring::{Field, Ring};

pub type GroupMatrix = Matrix<CycRat>;

fn mu(k: i64) -> CycRat {
    CycRat::mu_pow(k)
}

/// `g = diag(mu^4, mu^2, mu)`.
pub fn g() -> GroupMatrix {
    Matrix::diagonal(&[mu(4), mu(2), mu(1)])
}

/// Cyclic coordinate shift `(Z1, Z2, Z3) -> (Z2, Z3, Z1)`.
pub fn h() -> GroupMatrix {
    let z = CycRat::zero();
    let o = CycRat::one();
    Matrix::from_rows(vec![
        vec![z.clone(), o.clone(), z.clone()],
        vec![z.clone(), z.clone(), o.clone()],
        vec![o, z.clone(), z],
    ])
}

/// `r = -1/sqrt(-7) * (mu^a - mu^-a)` circulant, with `sqrt(-7) = 2 eta + 1`.
pub fn r() -> GroupMatrix {
    let a = mu(1) - mu(6);
    let b = mu(2) - mu(5);
    let c = mu(4) - mu(3);
    let scale = -CycInt::sqrt_minus_seven()
        .to_rational()
        .inv()
        .expect("sqrt(-7) is nonzero");
    Matrix::from_rows(vec![
        vec![a.clone(), b.clone(), c.clone()],
        vec![b.clone(), c.clone(), a.clone()],
        vec![c, a, b],
    ])
    .scale(&scale)
}

#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    pub name: &'static str,
    pub holds: bool,
}

/// The six defining relations of the group.
pub fn relations() -> Vec<Relation> {
    let (g, h, r) = (g(), h(), r());
    let h_inv = h.inverse().expect("permutation matrix");
    let rg4 = r.mul(&g.pow(4));
    let rh = r.mul(&h);
    vec![
        Relation {
            name: "g^7 = 1",
            holds: g.pow(7).is_identity(),
        },
        Relation {
            name: "h^3 = 1",
            holds: h.pow(3).is_identity(),
        },
        Relation {
            name: "r^2 = 1",
            holds: r.pow(2).is_identity(),
        },
        Relation {
            name: "(r g^4)^4 = 1",
            holds: rg4.pow(4).is_identity(),
        },
        Relation {
            name: "(r h)^2 = 1",
            holds: rh.pow(2).is_identity(),
        },
        Relation {
            name: "h^-1 g h = g^2",
            holds: h_inv.mul(&g).mul(&h) == g.pow(2),
        },
    ]
}

/// All products of the generators, by breadth-first search with exact
/// deduplication. Returns elements in discovery order.
pub fn closure(generators: &[GroupMatrix]) -> Vec<GroupMatrix> {
    let n = generators.first().map_or(0, |m| m.rows());
    let id = Matrix::identity(n);
    let mut seen: HashSet<GroupMatrix> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    order.push(id.clone());
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for s in generators {
            let next = m.mul(s);
            if seen.insert(next.clone()) {
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    order
}

/// `Phi_4 = Z1^3 Z2 + Z2^3 Z3 + Z3^3 Z1`.
pub fn phi4<R: Ring>() -> MPoly<R> {
    MPoly::from_terms(
        3,
        [
            (vec![3, 1, 0], R::one()),
            (vec![0, 3, 1], R::one()),
            (vec![1, 0, 3], R::one()),
        ],
    )
}

pub fn eval_phi4<R: Ring>(p: &[R; 3]) -> R {
    phi4::<R>().eval(p)
}

/// `Phi_4(M Z)` as a polynomial in `Z`.
pub fn transform_phi4(m: &GroupMatrix) -> MPoly<CycRat> {
    let images: Vec<MPoly<CycRat>> = (0..3)
        .map(|i| {
            (0..3).fold(MPoly::zero(3), |acc, j| {
                acc + MPoly::var(3, j).scale(&m[(i, j)])
            })
        })
        .collect();
    phi4::<CycRat>().substitute(&images)
}

/// Whether `Phi_4 o M = Phi_4` identically.
pub fn quartic_invariance(m: &GroupMatrix) -> bool {
    transform_phi4(m) == phi4()
}

pub fn all_dets_one(elements: &[GroupMatrix]) -> bool {
    elements.iter().all(|m| m.det().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_have_determinant_one() {
        for m in [g(), h(), r()] {
            assert!(m.det().is_one());
        }
    }

    #[test]
    fn all_relations_hold() {
        for rel in relations() {
            assert!(rel.holds, "{}", rel.name);
        }
    }

    #[test]
    fn subgroup_of_order_21() {
        let els = closure(&[g(), h()]);
        assert_eq!(els.len(), 21);
        // non-abelian: g and h do not commute
        assert_ne!(g().mul(&h()), h().mul(&g()));
    }

    #[test]
    fn r_is_symmetric_involution() {
        let r = r();
        assert_eq!(r.transpose(), r);
        assert!(!r.is_identity());
    }

    #[test]
    fn phi4_invariance_for_generators() {
        assert!(quartic_invariance(&g()));
        assert!(quartic_invariance(&h()));
        assert!(quartic_invariance(&r()));
        // a diagonal matrix outside the group moves Phi_4
        let d = Matrix::diagonal(&[CycRat::from_int(2), CycRat::one(), CycRat::one()]);
        assert!(!quartic_invariance(&d));
    }

    #[test]
    fn phi4_values() {
        let one = CycRat::one();
        let zero = CycRat::zero();
        assert!(eval_phi4(&[one.clone(), zero.clone(), zero.clone()]).is_zero());
        assert!(eval_phi4(&[zero.clone(), one.clone(), zero.clone()]).is_zero());
        assert_eq!(eval_phi4(&[one.clone(), one.clone(), one]), CycRat::from_int(3));
    }
}
