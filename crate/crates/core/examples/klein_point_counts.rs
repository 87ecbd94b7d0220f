//! Points of the Klein quartic over prime fields.

use kummer_verify::klein::points::{count_points_quartic, within_weil_bound};
use kummer_verify::ring::primes_up_to;

fn main() {
    for p in primes_up_to(50) {
        let n = count_points_quartic(p).expect("prime");
        println!("p = {p:>2}  #K = {n:>3}  trace = {:>4}  weil = {}", p as i64 + 1 - n as i64, within_weil_bound(p, n));
    }
}
