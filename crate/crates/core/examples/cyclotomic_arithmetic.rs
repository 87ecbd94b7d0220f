//! Exact arithmetic in Z[mu] and the quadratic orders Z[omega], Z[eta].

use kummer_verify::cyclotomic::{factor_rational_prime, CycInt, Eta, EtaInt, Omega, SplitResult};
use kummer_verify::ring::Ring;

fn main() {
    let mu = CycInt::mu();
    let eta = CycInt::eta();
    println!("mu^7 = {}", mu.pow(7));
    println!("eta = mu + mu^2 + mu^4 = {eta}");
    println!("eta^2 + eta + 2 = {}", eta.clone() * eta.clone() + eta.clone() + CycInt::from_int(2));
    let s = CycInt::sqrt_minus_seven();
    println!("(2 eta + 1)^2 = {}", s.clone() * s);
    println!("Norm(1 - mu) = {}", (CycInt::one() - mu).norm());

    for p in [7u64, 11, 13, 29] {
        let w = match factor_rational_prime::<Omega>(p) {
            Ok(SplitResult::Split(pi)) => format!("split by {pi}"),
            Ok(SplitResult::Inert) => "inert".into(),
            Err(e) => e.to_string(),
        };
        let n = match factor_rational_prime::<Eta>(p) {
            Ok(SplitResult::Split(pi)) => format!("split by {pi}"),
            Ok(SplitResult::Inert) => "inert".into(),
            Err(e) => e.to_string(),
        };
        println!("p = {p:>2}: Z[w] {w:<16} Z[n] {n}");
    }
    let x = EtaInt::new(3, -2);
    println!("N({x}) = {}, Tr({x}) = {}", x.norm(), x.trace());
}
