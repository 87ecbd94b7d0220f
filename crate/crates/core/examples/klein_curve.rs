//! Tangent divisors, divisor identities and differentials on the Klein quartic.

use kummer_verify::klein::curve::{coordinate_maps, local_eigenvalue, phiq_identities, tangent_divisor, FixedPoint};
use kummer_verify::klein::function_field::{pullback_differentials, CurveAut};

fn main() {
    for q in FixedPoint::ALL {
        let d = tangent_divisor(q).expect("coordinate point");
        let e = local_eigenvalue(q).expect("smooth point");
        println!("{}: tangent divisor {d}, eigenvalue {e}", q.name());
    }
    let report = phiq_identities().expect("tangent divisors");
    println!("relation lattice index {}", report.relation_index);
    for id in &report.identities {
        println!("{:?} ~ {:?} via {:?}", id.lhs, id.rhs, id.common_point.map(FixedPoint::name));
    }
    println!("coordinate maps consistent: {}", coordinate_maps().all());
    for aut in [CurveAut::G, CurveAut::H] {
        let m = pullback_differentials(aut).expect("pullback");
        println!("{aut:?}^* =");
        for row in m.to_rows() {
            println!("  {}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join("  "));
        }
    }
}
