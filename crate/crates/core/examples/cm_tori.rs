//! CM tori, their automorphisms and fixed subgroups.

use kummer_verify::torus::{
    fixed_subgroup, g_eta, h_tilde, mu_matrix_in_eta_basis, verify_alpha_claims, TorusModel,
};

fn main() {
    println!("mu in the basis (1, mu, mu^2) equals g_eta: {}", mu_matrix_in_eta_basis() == g_eta());
    println!("h~^3 = 1: {}", h_tilde().pow(3).is_identity());

    let e = TorusModel::e_eta_cube();
    for aut in ["g_eta", "h_tilde"] {
        match fixed_subgroup(&e, aut) {
            Ok(f) => println!("{aut}: {}", serde_json::to_string(&f).unwrap()),
            Err(err) => println!("{aut}: {err}"),
        }
    }
    let a = TorusModel::a_mu();
    if let Ok(f) = fixed_subgroup(&a, "m_mu") {
        println!("m_mu on A(mu): fixed order {:?}", f.order().map(ToString::to_string));
    }
    println!("{}", serde_json::to_string_pretty(&verify_alpha_claims()).unwrap());
}
