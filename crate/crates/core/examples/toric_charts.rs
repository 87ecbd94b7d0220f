//! The invariant ring of C^3/Z3 and its crepant toric charts.

use kummer_verify::quotient::{kummer_z3_birational_model, toric_charts_z3, verify_charts, w_name, z3_invariant_presentation};

fn main() {
    let pres = z3_invariant_presentation();
    println!("generators: {}", pres.generators.iter().map(w_name).collect::<Vec<_>>().join(" "));
    for rel in &pres.relations {
        let (l, r) = rel.expand();
        println!("  {:?} = {:?}   ({:?} = {:?})", rel.lhs, rel.rhs, l, r);
    }
    let charts = toric_charts_z3();
    let checks = verify_charts(&charts, 6);
    for (c, rays) in charts.iter().zip(&checks.scaled_rays) {
        println!("{}: coordinates {:?}, rays x3 {:?}", c.name, c.coords, rays);
    }
    println!("{}", serde_json::to_string_pretty(&checks).unwrap());
    let model = kummer_z3_birational_model();
    println!("birational model relations reduce: {}", model.relations_reduce);
}
