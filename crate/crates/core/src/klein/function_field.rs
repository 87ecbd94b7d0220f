//! The function field `F(X)[Y] / (Y^7 - X^2 (X - 1))` over `F = Q(mu)`, and
//! pullbacks of differentials `f dX` along maps of the form
//! `X -> A(X)`, `Y -> b(X) Y^e`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::cyclotomic::CycRat;
use crate::error::CurveError;
use crate::matrix::Matrix;
use crate::poly::{RatFn, UPoly};
use crate::ring::{Field, Ring};

pub type Rf = RatFn<CycRat>;

/// Degree of the cover in `Y`.
pub const N: usize = 7;

/// `X^2 (X - 1)`, the value of `Y^7`.
pub fn y7_value() -> Rf {
    let x = Rf::x();
    x.clone() * x.clone() * (x - Rf::one())
}

/// Element `sum_{k<7} c_k(X) Y^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FuncFieldElem {
    coeffs: [Rf; N],
}

impl FuncFieldElem {
    pub fn from_coeffs(coeffs: [Rf; N]) -> Self {
        FuncFieldElem { coeffs }
    }

    pub fn zero() -> Self {
        FuncFieldElem {
            coeffs: std::array::from_fn(|_| Rf::zero()),
        }
    }

    pub fn from_ratfn(c: Rf) -> Self {
        let mut e = Self::zero();
        e.coeffs[0] = c;
        e
    }

    pub fn one() -> Self {
        Self::from_ratfn(Rf::one())
    }

    pub fn x() -> Self {
        Self::from_ratfn(Rf::x())
    }

    pub fn y() -> Self {
        Self::term(Rf::one(), 1)
    }

    /// `c(X) Y^k` for any integer `k`, reduced with `Y^7 = X^2 (X - 1)`.
    pub fn term(c: Rf, k: i64) -> Self {
        let q = k.div_euclid(N as i64);
        let r = k.rem_euclid(N as i64) as usize;
        let a = y7_value();
        let factor = if q >= 0 {
            a.pow(q as u64)
        } else {
            a.inv().expect("nonzero").pow((-q) as u64)
        };
        let mut e = Self::zero();
        e.coeffs[r] = c * factor;
        e
    }

    pub fn coeffs(&self) -> &[Rf; N] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// `Some((c, k))` if the element is a single term `c(X) Y^k`.
    pub fn as_term(&self) -> Option<(Rf, usize)> {
        let nz: Vec<usize> = (0..N).filter(|&k| !self.coeffs[k].is_zero()).collect();
        match nz.as_slice() {
            [k] => Some((self.coeffs[*k].clone(), *k)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rf) -> Self {
        FuncFieldElem {
            coeffs: std::array::from_fn(|k| self.coeffs[k].clone() * c.clone()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Inverse of a single-term element.
    pub fn term_inverse(&self) -> Option<Self> {
        let (c, k) = self.as_term()?;
        Some(Self::term(c.inv()?, -(k as i64)))
    }

    /// Pullback along `map`: substitutes `X -> A(X)` and `Y -> b(X) Y^e`.
    pub fn pullback(&self, map: &CoverMap) -> Self {
        let y_img = Self::term(map.y_coeff.clone(), map.y_exp);
        let mut acc = Self::zero();
        let mut y_pow = Self::one();
        for k in 0..N {
            if !self.coeffs[k].is_zero() {
                let c = self.coeffs[k].compose(&map.x_image);
                acc = acc + y_pow.scale(&c);
            }
            y_pow = y_pow * y_img.clone();
        }
        acc
    }
}

impl Add for FuncFieldElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        FuncFieldElem {
            coeffs: std::array::from_fn(|k| self.coeffs[k].clone() + o.coeffs[k].clone()),
        }
    }
}

impl Neg for FuncFieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        FuncFieldElem {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl Sub for FuncFieldElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for FuncFieldElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let a = y7_value();
        let mut out = Self::zero();
        for i in 0..N {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..N {
                if o.coeffs[j].is_zero() {
                    continue;
                }
                let mut c = self.coeffs[i].clone() * o.coeffs[j].clone();
                let mut k = i + j;
                if k >= N {
                    k -= N;
                    c = c * a.clone();
                }
                out.coeffs[k] = out.coeffs[k].clone() + c;
            }
        }
        out
    }
}

impl fmt::Debug for FuncFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..N)
            .filter(|&k| !self.coeffs[k].is_zero())
            .map(|k| format!("({})Y^{k}", self.coeffs[k]))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A map of the cover `X -> x_image(X)`, `Y -> y_coeff(X) Y^y_exp`.
#[derive(Clone, Debug)]
pub struct CoverMap {
    pub x_image: Rf,
    pub y_coeff: Rf,
    pub y_exp: i64,
}

impl CoverMap {
    /// `(X, Y) -> (X, mu Y)`.
    pub fn g() -> Self {
        CoverMap {
            x_image: Rf::x(),
            y_coeff: Rf::constant(CycRat::mu()),
            y_exp: 1,
        }
    }

    /// `(X, Y) -> (1/(1 - X), -X / Y^3)`.
    pub fn h() -> Self {
        let one_minus_x = Rf::one() - Rf::x();
        CoverMap {
            x_image: one_minus_x.inv().expect("nonzero"),
            y_coeff: -Rf::x(),
            y_exp: -3,
        }
    }
}

/// Differential `f dX`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    pub f: FuncFieldElem,
}

impl Differential {
    pub fn pullback(&self, map: &CoverMap) -> Differential {
        let dx = map.x_image.derivative();
        Differential {
            f: self.f.pullback(map).scale(&dx),
        }
    }
}

/// `phi_1 = -dX/Y^3`, `phi_2 = X dX/Y^5`, `phi_3 = X dX/Y^6`.
pub fn differential_basis() -> [Differential; 3] {
    [
        Differential {
            f: FuncFieldElem::term(-Rf::one(), -3),
        },
        Differential {
            f: FuncFieldElem::term(Rf::x(), -5),
        },
        Differential {
            f: FuncFieldElem::term(Rf::x(), -6),
        },
    ]
}

/// Coordinates of `w` in the basis `phi_1, phi_2, phi_3` over `Q(mu)`.
pub fn coordinates(w: &Differential) -> Result<[CycRat; 3], CurveError> {
    let basis = differential_basis();
    let mut rest = w.f.clone();
    let mut out: [CycRat; 3] = std::array::from_fn(|_| CycRat::zero());
    for (i, b) in basis.iter().enumerate() {
        let (bc, k) = b.f.as_term().expect("basis elements are single terms");
        let ratio = w.f.coeffs()[k].clone() * bc.inv().expect("nonzero");
        let c = ratio.as_constant().ok_or(CurveError::NonReducible)?;
        rest = rest - b.f.scale(&Rf::constant(c.clone()));
        out[i] = c;
    }
    if rest.is_zero() {
        Ok(out)
    } else {
        Err(CurveError::NonReducible)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveAut {
    G,
    H,
}

/// Matrix of `aut^*` on `(phi_1, phi_2, phi_3)`: column `j` holds the
/// coordinates of `aut^* phi_j`. With this convention `aut -> matrix`
/// reverses products.
pub fn pullback_differentials(aut: CurveAut) -> Result<Matrix<CycRat>, CurveError> {
    let map = match aut {
        CurveAut::G => CoverMap::g(),
        CurveAut::H => CoverMap::h(),
    };
    let cols = differential_basis()
        .iter()
        .map(|w| coordinates(&w.pullback(&map)).map(|c| c.to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(&cols))
}

/// `(h^*)^3` applied to `X` and `Y`.
pub fn h_cubed_on_generators() -> (FuncFieldElem, FuncFieldElem) {
    let h = CoverMap::h();
    let mut x = FuncFieldElem::x();
    let mut y = FuncFieldElem::y();
    for _ in 0..3 {
        x = x.pullback(&h);
        y = y.pullback(&h);
    }
    (x, y)
}

/// `B^7 - A^2 (A - 1)` for the images `A = h^* X`, `B = h^* Y`.
pub fn h_image_equation_residual() -> FuncFieldElem {
    let h = CoverMap::h();
    let a = FuncFieldElem::x().pullback(&h);
    let b = FuncFieldElem::y().pullback(&h);
    b.pow(7) - a.clone() * a.clone() * (a - FuncFieldElem::one())
}

/// `UPoly` helper used by tests and examples.
pub fn xpoly(c: &[i64]) -> Rf {
    Rf::poly(UPoly::new(c.iter().map(|&v| CycRat::from_int(v)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_power_reduction() {
        let y7 = FuncFieldElem::y().pow(7);
        assert_eq!(y7, FuncFieldElem::from_ratfn(y7_value()));
        let y = FuncFieldElem::y();
        let inv = y.term_inverse().unwrap();
        assert_eq!(y * inv, FuncFieldElem::one());
    }

    #[test]
    fn g_scales_differentials() {
        let m = pullback_differentials(CurveAut::G).unwrap();
        let expected = Matrix::diagonal(&[CycRat::mu_pow(4), CycRat::mu_pow(2), CycRat::mu()]);
        assert_eq!(m, expected);
    }

    #[test]
    fn h_permutes_differentials() {
        let m = pullback_differentials(CurveAut::H).unwrap();
        let basis = differential_basis();
        let h = CoverMap::h();
        assert_eq!(basis[0].pullback(&h), basis[1]);
        assert_eq!(basis[1].pullback(&h), basis[2]);
        assert_eq!(basis[2].pullback(&h), basis[0]);
        assert!(m.pow(3).is_identity());
    }

    #[test]
    fn pullback_relations() {
        let pg = pullback_differentials(CurveAut::G).unwrap();
        let ph = pullback_differentials(CurveAut::H).unwrap();
        let ph_inv = ph.inverse().unwrap();
        assert_eq!(ph.mul(&pg).mul(&ph_inv), pg.pow(2));
    }

    #[test]
    fn h_has_order_three_and_preserves_curve() {
        let (x, y) = h_cubed_on_generators();
        assert_eq!(x, FuncFieldElem::x());
        assert_eq!(y, FuncFieldElem::y());
        assert!(h_image_equation_residual().is_zero());
    }

    #[test]
    fn non_holomorphic_form_is_rejected() {
        let w = Differential {
            f: FuncFieldElem::term(Rf::one(), 0),
        };
        assert_eq!(coordinates(&w), Err(CurveError::NonReducible));
        let w = Differential {
            f: FuncFieldElem::term(xpoly(&[0, 0, 1]), -5),
        };
        assert_eq!(coordinates(&w), Err(CurveError::NonReducible));
    }
}
