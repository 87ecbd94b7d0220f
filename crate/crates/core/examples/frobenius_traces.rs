//! Point counts, Frobenius traces and the Grossencharacter calibration.

use kummer_verify::cyclotomic::Omega;
use kummer_verify::modularity::{calibrate_grossencharacter, frobenius_trace, EllipticKind, SplitInfo};
use kummer_verify::ring::primes_up_to;

fn main() {
    let mut split = Vec::new();
    for p in primes_up_to(60) {
        match frobenius_trace(EllipticKind::OmegaCubic, p) {
            Ok(fd) => {
                println!("p = {p:>2}  N = {:>3}  a_p = {:>3}  {:?}", fd.n_p, fd.a_p, fd.split);
                if fd.split != SplitInfo::Inert {
                    split.push((p, fd.a_p));
                }
            }
            Err(e) => println!("p = {p:>2}  {e}"),
        }
    }
    let (rows, rule) = calibrate_grossencharacter::<Omega>(&split).expect("consistent rule");
    println!("rule: {}", serde_json::to_string(&rule).unwrap());
    for r in rows {
        println!("p = {:>2}: associates with trace {}: {:?}", r.p, r.a_p, r.matching);
    }
    for p in [61, 67, 73] {
        println!("predicted a_{p} = {:?}", rule.predict(p));
    }
}
