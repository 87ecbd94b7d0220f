//! The order-168 group acting on the Klein quartic.

use kummer_verify::klein::group::{closure, g, h, quartic_invariance, r, relations};

fn main() {
    for rel in relations() {
        println!("{:<16} {}", rel.name, if rel.holds { "holds" } else { "FAILS" });
    }
    let small = closure(&[g(), h()]);
    let full = closure(&[g(), h(), r()]);
    println!("|<g, h>| = {}", small.len());
    println!("|<g, h, r>| = {}", full.len());
    let invariant = full.iter().filter(|m| quartic_invariance(m)).count();
    println!("elements fixing Phi_4: {invariant}");
}
