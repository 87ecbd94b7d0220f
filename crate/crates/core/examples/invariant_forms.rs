//! Invariant integral 3-forms and the intermediate Jacobian.

use kummer_verify::cohomology::{intermediate_jacobian, verify_ab_basis, TauData};

fn main() {
    for tau in [TauData::omega(), TauData::eta()] {
        let ab = verify_ab_basis(&tau).expect("group action");
        println!("{:?}", tau.tag);
        println!("  A = {}", ab.a);
        println!("  B = {}", ab.b);
        println!("  invariant rank {}, change of basis det {}", ab.invariant_basis.len(), ab.change_det);
        let j = intermediate_jacobian(&tau).expect("nondegenerate");
        let t = &j.reduced_tau;
        println!("  reduced modulus {} + ({}) i, equals tau: {}", t.re, t.im, j.matches_tau());
    }
}
