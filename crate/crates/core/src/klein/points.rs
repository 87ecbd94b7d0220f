//! Point counts of the quartic over prime fields.

use rayon::prelude::*;

use crate::error::CycError;
use crate::ring::is_prime;

fn phi4_mod(z1: u64, z2: u64, z3: u64, p: u64) -> u64 {
    let cube = |a: u64| a * a % p * a % p;
    (cube(z1) * z2 % p + cube(z2) * z3 % p + cube(z3) * z1 % p) % p
}

/// Number of points of `Z1^3 Z2 + Z2^3 Z3 + Z3^3 Z1 = 0` in `P^2(F_p)`,
/// enumerating the `p^2 + p + 1` normalized triples. Rows `[1 : y : *]` are
/// counted in parallel and summed in row order.
pub fn count_points_quartic(p: u64) -> Result<u64, CycError> {
    if !is_prime(p) {
        return Err(CycError::NotPrime(p));
    }
    let affine: u64 = (0..p)
        .into_par_iter()
        .map(|y| (0..p).filter(|&z| phi4_mod(1, y, z, p) == 0).count() as u64)
        .collect::<Vec<_>>()
        .iter()
        .sum();
    let line = (0..p).filter(|&z| phi4_mod(0, 1, z, p) == 0).count() as u64;
    let corner = u64::from(phi4_mod(0, 0, 1, p) == 0);
    Ok(affine + line + corner)
}

/// Whether `|N - (p + 1)| <= 2 g sqrt(p)` with genus 3.
pub fn within_weil_bound(p: u64, n: u64) -> bool {
    let d = n as i128 - p as i128 - 1;
    d * d <= 36 * p as i128
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(p: u64) -> u64 {
        // every nonzero triple, divided by the p - 1 scalings
        let mut n = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    if (a, b, c) != (0, 0, 0) && phi4_mod(a, b, c, p) == 0 {
                        n += 1;
                    }
                }
            }
        }
        n / (p - 1)
    }

    #[test]
    fn agrees_with_unnormalized_enumeration() {
        for p in [2, 3, 5, 7, 11, 13, 29] {
            assert_eq!(count_points_quartic(p).unwrap(), brute(p), "p = {p}");
        }
    }

    #[test]
    fn small_values() {
        // the three coordinate points always lie on the curve
        assert_eq!(count_points_quartic(2).unwrap(), 3);
        assert_eq!(count_points_quartic(29).unwrap(), 24);
        assert_eq!(count_points_quartic(43).unwrap(), 80);
    }

    #[test]
    fn weil_bound_and_rejections() {
        for p in crate::ring::primes_up_to(200) {
            let n = count_points_quartic(p).unwrap();
            assert!(within_weil_bound(p, n), "p = {p}, n = {n}");
            assert!(n >= 3);
        }
        assert_eq!(count_points_quartic(15), Err(CycError::NotPrime(15)));
    }
}
