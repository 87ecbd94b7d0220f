//! Cubed Euler factors and Dirichlet coefficients.

use std::collections::BTreeMap;

use kummer_verify::modularity::{count_points, dirichlet_coefficients, euler_factor_h3, frobenius_trace, EllipticKind, LocalFactor};
use kummer_verify::ring::primes_up_to;

fn main() {
    let kind = EllipticKind::EtaWeierstrass;
    let mut h1 = BTreeMap::new();
    let mut h3 = BTreeMap::new();
    for p in primes_up_to(30) {
        match frobenius_trace(kind, p) {
            Ok(fd) => {
                let f = euler_factor_h3(&fd);
                println!("p = {p:>2}  a_p = {:>3}  1 - ({})T + {}T^2", fd.a_p, f.b_p, p.pow(3));
                h1.insert(p, LocalFactor::weight_two(fd.a_p));
                h3.insert(p, f.local());
            }
            Err(_) => {
                h1.insert(p, LocalFactor::Trivial);
                h3.insert(p, LocalFactor::Trivial);
            }
        }
    }
    println!("#E(F_27) = {}", count_points(kind, 27).unwrap());
    let a = dirichlet_coefficients(&h1, 30).unwrap();
    let b = dirichlet_coefficients(&h3, 30).unwrap();
    for n in 1..=30 {
        println!("n = {n:>2}  a_n = {:>4}  b_n = {:>7}", a[n - 1], b[n - 1]);
    }
}
